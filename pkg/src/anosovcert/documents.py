"""JSON interchange for algebras, automorphisms, bases and reports.

Documents are plain JSON (UTF-8, no comments).  Rationals travel as
strings "p/q" to stay bit-exact; field elements as coefficient arrays,
lowest degree first.  Indices in documents are 1-based; the in-memory
API is 0-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .anosov import DiagonalAutomorphism, diagonal_automorphism
from .exactnum.numberfield import RATIONAL, FieldElement, field_new
from .exactnum.polynomials import Poly
from .exceptions import ParseError
from .liealg import BasisMatrix, LieAlgebra, algebra_new, basis_matrix, graded_type


@dataclass
class AlgebraDocument:
    algebra: LieAlgebra
    automorphism: DiagonalAutomorphism | None
    basis: BasisMatrix | None


def _parse_fraction(value, path):
    try:
        return Fraction(str(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{path}: not a rational: {value!r} ({exc})")


def _parse_scalar(value, domain, path):
    if isinstance(value, list):
        if domain is RATIONAL or domain.is_rational:
            raise ParseError(f"{path}: coefficient list given for a rational algebra")
        if len(value) > domain.degree:
            raise ParseError(f"{path}: {len(value)} coefficients exceed the "
                             f"field degree {domain.degree}")
        return domain.element([_parse_fraction(v, f"{path}[{i}]")
                               for i, v in enumerate(value)])
    q = _parse_fraction(value, path)
    return domain.coerce(q)


def parse_document(data) -> AlgebraDocument:
    """Validate and build the in-memory objects from a JSON document."""
    if not isinstance(data, dict):
        raise ParseError("document root must be a JSON object")
    if "dim" not in data:
        raise ParseError("dim: missing")
    dim = data["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ParseError(f"dim: expected a positive integer, got {dim!r}")

    domain = RATIONAL
    if data.get("field") is not None:
        coeffs = [_parse_fraction(c, f"field[{i}]")
                  for i, c in enumerate(data["field"])]
        try:
            domain = field_new(Poly(coeffs))
        except Exception as exc:
            raise ParseError(f"field: {exc}")

    brackets = []
    raw = data.get("brackets", [])
    if not isinstance(raw, list):
        raise ParseError("brackets: expected a list")
    for idx, entry in enumerate(raw):
        path = f"brackets[{idx}]"
        if not isinstance(entry, dict):
            raise ParseError(f"{path}: expected an object")
        for key in ("i", "j", "k", "c"):
            if key not in entry:
                raise ParseError(f"{path}.{key}: missing")
        i, j, k = entry["i"], entry["j"], entry["k"]
        for key, v in (("i", i), ("j", j), ("k", k)):
            if not isinstance(v, int) or not (1 <= v <= dim):
                raise ParseError(f"{path}.{key}: index {v!r} outside 1..{dim}")
        if not i < j:
            raise ParseError(f"{path}: requires i < j, got ({i}, {j})")
        c = _parse_scalar(entry["c"], domain, f"{path}.c")
        brackets.append((i - 1, j - 1, k - 1, c))

    grading = None
    if data.get("grading") is not None:
        grading = tuple(data["grading"])
        if not all(isinstance(n, int) and n > 0 for n in grading) \
                or sum(grading) != dim:
            raise ParseError(f"grading: {grading} does not partition dim {dim}")

    try:
        algebra = algebra_new(dim, domain, brackets, grading)
    except Exception as exc:
        raise ParseError(f"brackets: {exc}")

    automorphism = None
    if data.get("automorphism") is not None:
        evs = data["automorphism"]
        if not isinstance(evs, list) or len(evs) != dim:
            raise ParseError(f"automorphism: expected {dim} eigenvalues")
        scalars = [_parse_scalar(v, domain, f"automorphism[{i}]")
                   for i, v in enumerate(evs)]
        layers = grading or graded_type(algebra)[0]
        try:
            automorphism = diagonal_automorphism(scalars, layers, domain)
        except Exception as exc:
            raise ParseError(f"automorphism: {exc}")

    basis = None
    if data.get("basis") is not None:
        cols = data["basis"]
        if not isinstance(cols, list) or len(cols) != dim:
            raise ParseError(f"basis: expected {dim} columns")
        columns = []
        for ci, col in enumerate(cols):
            if not isinstance(col, list) or len(col) != dim:
                raise ParseError(f"basis[{ci}]: expected {dim} entries")
            columns.append([_parse_scalar(v, domain, f"basis[{ci}][{ri}]")
                            for ri, v in enumerate(col)])
        try:
            basis = basis_matrix(columns, domain)
        except Exception as exc:
            raise ParseError(f"basis: {exc}")

    return AlgebraDocument(algebra, automorphism, basis)


def load_document(path) -> AlgebraDocument:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}")
    return parse_document(data)


# -- serialization ------------------------------------------------------------------


def encode_scalar(value):
    if isinstance(value, FieldElement):
        if value.is_rational:
            return str(value.as_fraction())
        return [str(c) for c in value.coords]
    return str(Fraction(value))


def algebra_to_document(L: LieAlgebra, automorphism=None, basis=None):
    doc = {"dim": L.dim}
    if not L.domain.is_rational:
        doc["field"] = [str(c) for c in L.domain.modulus.coeffs]
    doc["brackets"] = [
        {"i": i + 1, "j": j + 1, "k": k + 1, "c": encode_scalar(c)}
        for (i, j, k, c) in L.nonzero_entries()
    ]
    if L.grading is not None:
        doc["grading"] = list(L.grading)
    if automorphism is not None:
        doc["automorphism"] = [encode_scalar(e) for e in automorphism.eigenvalues]
    if basis is not None:
        doc["basis"] = [[encode_scalar(x) for x in col] for col in basis.columns]
    return doc


def dump_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True)
