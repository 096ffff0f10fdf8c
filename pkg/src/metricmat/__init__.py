"""Metric regular matroids: Jacobians, configuration polynomials, p-torsion densities."""

__version__ = "0.1.0"
