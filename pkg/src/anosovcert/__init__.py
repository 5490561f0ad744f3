"""Exact certification of Anosov automorphisms of nilpotent Lie algebras.

The package represents nilpotent Lie algebras by structure constants over
Q or a number field, builds the explicit algebras, diagonal automorphisms
and lattice bases of the accompanying catalog, and certifies or refutes
the Anosov property (automorphism + hyperbolic + unimodular in an explicit
Z-basis) entirely in exact arithmetic.
"""

__version__ = "0.1.0"

from .exactnum import (RATIONAL, CircleStatus, FieldElement, NumberField, Op,
                       Poly, certify_abs_neq_one, elem_arith, elem_inv,
                       embeddings, field_compose, field_new, minimal_poly,
                       poly_unit_check)

__all__ = [
    "__version__", "RATIONAL", "CircleStatus", "FieldElement", "NumberField",
    "Op", "Poly", "certify_abs_neq_one", "elem_arith", "elem_inv",
    "embeddings", "field_compose", "field_new", "minimal_poly",
    "poly_unit_check",
]
