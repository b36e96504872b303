"""
shortwords
Short-word generators and element expressions for permutation groups,
with the stabilizer-chain engine and structure queries they rely on.
"""

__version__ = "0.1.0"
