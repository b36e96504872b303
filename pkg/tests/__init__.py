"""
shortwords test suite.

Test organization:
- tests/unit/: Fast unit tests for individual components
- tests/utils/: Helper functions and brute-force oracles
"""
