"""Symbol-pair weights, pair weight hierarchies and pair-equiweight criteria for linear codes."""

__version__ = "0.1.0"
