"""
GMCC Toolkit - Hermitian self-orthogonal monomial-Cartesian codes.

This package builds generalized monomial-Cartesian codes over GF(q^2) with a
twist vector that makes them Hermitian self-orthogonal, derives the
stabilizer quantum codes they yield, verifies small minimum distances
exactly, and evaluates the quantum Singleton and Gilbert-Varshamov bounds.
"""

__version__ = "0.1.0"
