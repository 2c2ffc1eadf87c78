"""Exact Kauffman bracket engines, cabled Jones polynomials, and
diagram-adequacy invariants for links given by PD codes."""

from kauffman.laurent import LaurentPoly

__all__ = ["LaurentPoly", "__version__"]

__version__ = "1.0.0"
