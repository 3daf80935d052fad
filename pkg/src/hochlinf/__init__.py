"""Exact L-infinity structures on Hochschild cohomology of monomial path algebras."""

__version__ = "0.1.0"
