"""Unit tests for shortwords modules.

Tests organized by layer:
- test_permutation.py, test_generators.py, test_group.py, test_cosets.py - permutation groups
- test_words.py - word tree and rendering
- test_reduction.py, test_short_gens.py, test_lookup.py, test_two_step.py - word searches
- test_classes.py, test_subgroups.py, test_elementary.py, test_michler.py - structure queries
- test_cli.py, test_config.py, test_logging_config.py, test_output.py - command line surface
"""
