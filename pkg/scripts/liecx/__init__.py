"""Homology of symmetric groups with Lie module coefficients, and the complexity of Lie(n)"""

__version__ = "0.1.0"
