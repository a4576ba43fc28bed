"""Degeneracy bound certificates for stabilizer codes via manifold cellulations."""

__version__ = "0.1.0"
