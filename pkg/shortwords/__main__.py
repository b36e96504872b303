"""
shortwords - short words in permutation groups

Enables running as: python -m shortwords
"""

from shortwords.cli import cli

if __name__ == "__main__":
    cli()
