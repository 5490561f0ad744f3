"""Exact rational, polynomial and number-field arithmetic."""

from .numberfield import (RATIONAL, CircleStatus, CircleVerdict, FieldElement,
                          FieldHom, NumberField, Op, RationalDomain,
                          certify_abs_neq_one, conjugation_order, elem_arith,
                          elem_inv, embeddings, field_compose, field_new,
                          galois_image, identity_hom, lin_solve_columns,
                          minimal_poly)
from .polynomials import (Poly, UnitCertificate, find_irreducibility_witness,
                          irreducible_mod_p, poly_unit_check)
from .roots import DEFAULT_CAP, DEFAULT_PREC, Disc, isolate_roots

__all__ = [
    "RATIONAL", "CircleStatus", "CircleVerdict", "FieldElement", "FieldHom",
    "NumberField", "Op", "RationalDomain", "certify_abs_neq_one",
    "conjugation_order", "elem_arith", "elem_inv", "embeddings",
    "field_compose", "field_new", "galois_image", "identity_hom",
    "lin_solve_columns", "minimal_poly", "Poly", "UnitCertificate",
    "find_irreducibility_witness", "irreducible_mod_p", "poly_unit_check",
    "DEFAULT_CAP", "DEFAULT_PREC", "Disc", "isolate_roots",
]
