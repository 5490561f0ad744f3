"""The Anosov certification pipeline.

Stages: bracket preservation of a diagonal automorphism, exact block
eigenvalue products (with the optional squaring repair), certified
hyperbolicity, integer structure constants in a candidate lattice basis,
and integrality/unimodularity of the automorphism matrix in that basis.
Every verdict is exact or certified; nothing is decided numerically
without a proven enclosure.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .exactnum.numberfield import (RATIONAL, CircleStatus, FieldElement,
                                   NumberField, certify_abs_neq_one,
                                   conjugation_order, galois_image,
                                   minimal_poly)
from .exactnum.polynomials import Poly
from .exactnum.roots import DEFAULT_CAP
from .exceptions import ConjugateMismatch, GroupingInconsistent, WrongType
from .liealg import (BasisMatrix, LieAlgebra, algebra_new, basis_matrix,
                     change_basis, layer_ranges)


@dataclass(frozen=True)
class DiagonalAutomorphism:
    """Automorphism given by its eigenvalue per basis vector, block-aligned."""

    eigenvalues: tuple
    layers: tuple  # graded type of the underlying algebra
    domain: object

    def __post_init__(self):
        if sum(self.layers) != len(self.eigenvalues):
            raise WrongType("eigenvalue count does not match the layers")
        for ev in self.eigenvalues:
            if self.domain.is_zero(ev):
                raise WrongType("automorphism eigenvalue is zero")

    def blocks(self):
        out = []
        start = 0
        for n in self.layers:
            out.append(tuple(self.eigenvalues[start:start + n]))
            start += n
        return out

    @property
    def dim(self):
        return len(self.eigenvalues)


def diagonal_automorphism(eigenvalues, layers, domain) -> DiagonalAutomorphism:
    evs = tuple(domain.coerce(e) for e in eigenvalues)
    return DiagonalAutomorphism(evs, tuple(layers), domain)


def square(A: DiagonalAutomorphism) -> DiagonalAutomorphism:
    """Eigenvalue-wise square; preserves both stages already certified."""
    return DiagonalAutomorphism(tuple(e * e for e in A.eigenvalues),
                                A.layers, A.domain)


def is_automorphism(L: LieAlgebra, A: DiagonalAutomorphism):
    """None, or the first bracket pair (i, j) with lambda_i lambda_j != lambda_k.

    For a diagonal map this identity over the stored entries is exactly
    bracket preservation.
    """
    dom = L.domain
    ev = A.eigenvalues
    for (i, j, k, c) in L.nonzero_entries():
        if not dom.is_zero(ev[i] * ev[j] - ev[k]):
            return (i, j)
    return None


# -- splitting ------------------------------------------------------------------


@dataclass(frozen=True)
class Splitting:
    degrees: tuple           # descending multiset [k_1; ...; k_m]
    min_polys: tuple         # matching irreducible factors
    low_degree: bool         # some part has size 1

    def __repr__(self):
        return "[" + "; ".join(str(d) for d in self.degrees) + "]"


def _minimal_poly_of(ev, domain) -> Poly:
    if isinstance(ev, FieldElement):
        return minimal_poly(ev)
    q = Fraction(ev)
    return Poly([-q, Fraction(1)])


def splitting_of(block_eigenvalues, domain) -> Splitting:
    """Group a block's eigenvalues by minimal polynomial.

    The multiset of factor degrees is returned in descending order after
    an exact verification that the product of (x - lambda) over the block
    equals the product of the grouped minimal polynomials.
    """
    evs = [domain.coerce(e) for e in block_eigenvalues]
    n = len(evs)
    groups = {}
    for ev in evs:
        p = _minimal_poly_of(ev, domain)
        groups[p] = groups.get(p, 0) + 1
    degrees = []
    polys = []
    remaining = n
    for p, count in sorted(groups.items(), key=lambda kv: (-kv[0].degree,
                                                           kv[0].coeffs)):
        d = p.degree
        if d > remaining:
            raise GroupingInconsistent(
                f"factor degree {d} exceeds remaining block dimension {remaining}")
        if count % d != 0:
            raise GroupingInconsistent(
                f"{count} eigenvalues share a degree-{d} minimal polynomial")
        mult = count // d
        degrees.extend([d] * mult)
        polys.extend([p] * mult)
        remaining -= d * mult
    if remaining != 0:
        raise GroupingInconsistent("degrees do not fill the block")

    # exact check: prod (x - lambda) = prod of the grouped factors
    if not domain.is_rational:
        char = [domain.one()]
        for ev in evs:
            new = [domain.zero()] * (len(char) + 1)
            for idx, c in enumerate(char):
                new[idx + 1] = new[idx + 1] + c
                new[idx] = new[idx] - ev * c
            char = new
        expected = Poly.one()
        for p in polys:
            expected = expected * p
        for idx, c in enumerate(char):
            want = domain.from_fraction(expected.coeff(idx))
            if not domain.is_zero(c - want):
                raise GroupingInconsistent(
                    "characteristic polynomial does not match the grouping")

    order = sorted(range(len(degrees)), key=lambda t: -degrees[t])
    degrees = tuple(degrees[t] for t in order)
    polys = tuple(polys[t] for t in order)
    return Splitting(degrees, polys, low_degree=any(d == 1 for d in degrees))


# -- the degree filter ------------------------------------------------------------


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class M1Verdict(enum.Enum):
    ADMISSIBLE = 0
    VIOLATES_1 = 1
    VIOLATES_2 = 2

    @property
    def rule(self):
        return self.value or None


def lemma_m1_filter(deg_a: int, deg_b: int, deg_ab: int,
                    product_is_eigenvalue: bool = False) -> M1Verdict:
    """Degree filter for products of automorphism eigenvalues.

    Rule 1: coprime factor degrees force a composite (or 1) product
    degree.  Rule 2 applies only when the product is itself an eigenvalue
    of the same automorphism (structural hypothesis, passed explicitly):
    then gcd(max degree, product degree) must exceed 1.
    """
    if min(deg_a, deg_b, deg_ab) < 1:
        raise ValueError("degrees must be positive")
    if math.gcd(deg_a, deg_b) == 1 and _is_prime(deg_ab):
        return M1Verdict.VIOLATES_1
    if product_is_eigenvalue and math.gcd(max(deg_a, deg_b), deg_ab) == 1:
        return M1Verdict.VIOLATES_2
    return M1Verdict.ADMISSIBLE


# -- hyperbolicity ------------------------------------------------------------------


@dataclass(frozen=True)
class HyperbolicityResult:
    status: str              # "OK" | "FAIL" | "INCONCLUSIVE"
    margin: float | None     # certified lower bound over all conjugates
    witness: int | None      # eigenvalue index when FAIL


def hyperbolicity_check(A: DiagonalAutomorphism, cap=None) -> HyperbolicityResult:
    """Certify |sigma(lambda)| != 1 for every eigenvalue and every embedding.

    Galois conjugates are covered because the per-element certificate
    ranges over all complex embeddings of the coefficient field.
    """
    margin = None
    inconclusive = False
    for idx, ev in enumerate(A.eigenvalues):
        if isinstance(ev, FieldElement):
            verdict = certify_abs_neq_one(ev, cap=cap)
            if verdict.status is CircleStatus.ON_CIRCLE:
                return HyperbolicityResult("FAIL", None, idx)
            if verdict.status is CircleStatus.INCONCLUSIVE:
                inconclusive = True
                continue
            m = verdict.margin
        else:
            q = Fraction(ev)
            if abs(q) == 1:
                return HyperbolicityResult("FAIL", None, idx)
            m = abs(float(abs(q) - 1))
        margin = m if margin is None else min(margin, m)
    if inconclusive:
        return HyperbolicityResult("INCONCLUSIVE", None, None)
    return HyperbolicityResult("OK", margin, None)


# -- unit products ---------------------------------------------------------------------


@dataclass(frozen=True)
class BlockProducts:
    products: tuple          # exact per-block eigenvalue products
    labels: tuple            # "+1" | "-1" | "OTHER"

    @property
    def all_pm1(self):
        return all(s in ("+1", "-1") for s in self.labels)

    @property
    def has_minus(self):
        return "-1" in self.labels

    @property
    def other_index(self):
        return self.labels.index("OTHER") if "OTHER" in self.labels else None


def unit_products_check(A: DiagonalAutomorphism) -> BlockProducts:
    """Exact eigenvalue product per graded block, classified against +-1."""
    dom = A.domain
    products = []
    labels = []
    for block in A.blocks():
        prod = dom.one()
        for ev in block:
            prod = prod * ev
        products.append(prod)
        if dom.is_zero(prod - dom.one()):
            labels.append("+1")
        elif dom.is_zero(prod + dom.one()):
            labels.append("-1")
        else:
            labels.append("OTHER")
    return BlockProducts(tuple(products), tuple(labels))


# -- lattice checks -------------------------------------------------------------------


@dataclass(frozen=True)
class IntegralityResult:
    matrix: tuple            # [A]_beta as exact rationals (when integral check ran)
    all_integer: bool
    det: Fraction | None
    det_pm1: bool
    witness: tuple | None    # (row, col, entry) of the first bad entry


def integrality_in_basis(A: DiagonalAutomorphism, B: BasisMatrix) -> IntegralityResult:
    """Matrix of A in the candidate basis, with exact integrality and det checks."""
    dom = B.domain
    rows = B.as_rows()
    n = len(rows)
    inv = linalg.inverse(rows, dom)
    diag = [[A.eigenvalues[i] if i == j else dom.zero() for j in range(n)]
            for i in range(n)]
    M = linalg.mat_mul(linalg.mat_mul(inv, diag), rows)
    out = []
    witness = None
    all_integer = True
    for i in range(n):
        row = []
        for j in range(n):
            entry = M[i][j]
            if isinstance(entry, FieldElement):
                if not entry.is_rational:
                    if witness is None:
                        witness = (i, j, entry)
                    all_integer = False
                    row.append(None)
                    continue
                q = entry.as_fraction()
            else:
                q = Fraction(entry)
            if q.denominator != 1:
                if witness is None:
                    witness = (i, j, q)
                all_integer = False
            row.append(q)
        out.append(tuple(row))
    if not all_integer:
        return IntegralityResult(tuple(out), False, None, False, witness)
    d = linalg.det([[Fraction(x) for x in row] for row in out], RATIONAL)
    return IntegralityResult(tuple(out), True, d, d in (1, -1), None)


def zbasis_check(L: LieAlgebra, B: BasisMatrix):
    """None when all structure constants in basis B are rational integers,
    else the first witness (i, j, k, coefficient)."""
    rebased = change_basis(L, B)
    for (i, j, k, c) in rebased.nonzero_entries():
        if isinstance(c, FieldElement):
            if not c.is_rational:
                return (i, j, k, c)
            q = c.as_fraction()
        else:
            q = Fraction(c)
        if q.denominator != 1:
            return (i, j, k, q)
    return None


# -- Galois twisted sums -----------------------------------------------------------------


def galois_twist_sum(L: LieAlgebra, A: DiagonalAutomorphism, sigma_image):
    """k-fold sum of L with the automorphism twisted by Galois conjugation.

    Copy p of L carries the sigma^p-image of both the structure constants
    and the eigenvalues; the returned basis spans the conjugation-invariant
    lattice whose slot families are sum_i sigma^i(t^p) e^(i), generalizing
    the doubling rows (k = 2) and the Vandermonde pattern (k = 3).
    """
    field = L.domain
    if not isinstance(field, NumberField):
        raise ConjugateMismatch("galois_twist_sum needs a number-field algebra")
    sigma_t = field.coerce(sigma_image)
    order = conjugation_order(field, sigma_t)
    k = field.degree
    if order != k:
        raise ConjugateMismatch(
            f"conjugation has order {order}, expected the field degree {k}")

    layers, _ranges = layer_ranges(L)
    n = L.dim

    def sig(x, p):
        for _ in range(p):
            x = galois_image(x, sigma_t)
        return x

    brackets = []
    for (i, j, kk, c) in L.nonzero_entries():
        for p in range(k):
            brackets.append((i * k + p, j * k + p, kk * k + p, sig(c, p)))
    sum_algebra = algebra_new(n * k, field, brackets)

    eigen = []
    for j in range(n):
        for p in range(k):
            eigen.append(sig(A.eigenvalues[j], p))
    sum_aut = DiagonalAutomorphism(tuple(eigen),
                                   tuple(k * m for m in layers), field)

    conj = [field.gen()]
    for p in range(1, k):
        conj.append(galois_image(conj[-1], sigma_t))
    columns = []
    for j in range(n):
        for p in range(k):
            col = [field.zero()] * (n * k)
            for i in range(k):
                col[j * k + i] = conj[i] ** p
            columns.append(col)
    B = basis_matrix(columns, field)
    return sum_algebra, sum_aut, B


# -- the certificate ------------------------------------------------------------------------


@dataclass(frozen=True)
class AnosovCertificate:
    verdict: str                      # "PASS" | "FAIL" | "INCONCLUSIVE"
    automorphism_ok: bool
    automorphism_witness: tuple | None
    products: BlockProducts
    squared: bool
    hyperbolic: HyperbolicityResult
    zbasis_ok: bool
    zbasis_witness: tuple | None
    matrix_integral: bool
    det: Fraction | None
    det_pm1: bool
    integrality_witness: tuple | None
    failure_stage: str | None = None
    matrix: tuple = field(default=(), repr=False)

    @property
    def passed(self):
        return self.verdict == "PASS"


def certify_anosov(L: LieAlgebra, A: DiagonalAutomorphism, B: BasisMatrix,
                   auto_square: bool = False, cap=None) -> AnosovCertificate:
    """Run the full pipeline and aggregate the exact evidence.

    Stage order: bracket preservation, block unit products (squaring the
    automorphism once when a product is exactly -1 and auto_square is
    set), hyperbolicity, lattice structure constants, and the integrality
    and determinant of [A]_beta.  Failures are certificate content, not
    exceptions.
    """
    failure = None

    aw = is_automorphism(L, A)
    automorphism_ok = aw is None
    if not automorphism_ok:
        failure = failure or "automorphism"

    products = unit_products_check(A)
    squared = False
    A_eff = A
    if not products.all_pm1:
        failure = failure or "unit_products"
    elif products.has_minus and auto_square:
        A_eff = square(A)
        squared = True

    hyperbolic = hyperbolicity_check(A_eff, cap=cap)
    if hyperbolic.status == "FAIL":
        failure = failure or "hyperbolicity"

    zw = zbasis_check(L, B)
    zbasis_ok = zw is None
    if not zbasis_ok:
        failure = failure or "zbasis"

    integ = integrality_in_basis(A_eff, B)
    if not (integ.all_integer and integ.det_pm1):
        failure = failure or "integrality"

    if failure is not None:
        verdict = "FAIL"
    elif hyperbolic.status == "INCONCLUSIVE":
        verdict = "INCONCLUSIVE"
    else:
        verdict = "PASS"
    return AnosovCertificate(
        verdict=verdict,
        automorphism_ok=automorphism_ok,
        automorphism_witness=aw,
        products=products,
        squared=squared,
        hyperbolic=hyperbolic,
        zbasis_ok=zbasis_ok,
        zbasis_witness=zw,
        matrix_integral=integ.all_integer,
        det=integ.det,
        det_pm1=integ.det_pm1,
        integrality_witness=integ.witness,
        failure_stage=failure,
        matrix=integ.matrix,
    )
