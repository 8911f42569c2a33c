"""Exact-arithmetic calculator for rank-2 co-Higgs bundle data on the
projective plane: section calculus through the Euler presentation,
twisted-endomorphism cohomology tables by independent routes, Higgs-field
solving and normal forms, and first-order deformation dimensions."""

__version__ = "0.1.0"
