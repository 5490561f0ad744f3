"""Named constructors for the explicit algebras, automorphisms and bases.

Every case bundles an algebra over its coefficient field, a diagonal
automorphism and a candidate lattice basis, ready for certification.  The
three unit fields in play are Q[t]/(t^3 - 3t + 1) (a cyclic cubic whose
roots are permuted by t -> t^2 - 2), Q[t]/(t^2 - 3t + 1) (a real
quadratic with conjugation t -> 3 - t = 1/t), and the cyclic quintic
Q[t]/(t^5 + t^4 - 4t^3 - 3t^2 + 3t + 1), again permuted by t -> t^2 - 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .anosov import DiagonalAutomorphism, diagonal_automorphism, galois_twist_sum
from .exactnum.numberfield import (RATIONAL, FieldElement, NumberField,
                                   elem_inv, field_compose, field_new)
from .exactnum.polynomials import Poly
from .exceptions import AlgebraError, ParamCount, UnknownName
from .liealg import BasisMatrix, LieAlgebra, algebra_new, basis_matrix, graded_type, jacobi_check

CUBIC = Poly.from_ints([1, -3, 0, 1])
QUADRATIC = Poly.from_ints([1, -3, 1])
QUINTIC = Poly.from_ints([1, 3, -3, -4, 1, 1])

_FIELDS = {}


def cubic_field() -> NumberField:
    if "cubic" not in _FIELDS:
        _FIELDS["cubic"] = field_new(CUBIC)
    return _FIELDS["cubic"]


def quadratic_field() -> NumberField:
    if "quadratic" not in _FIELDS:
        _FIELDS["quadratic"] = field_new(QUADRATIC)
    return _FIELDS["quadratic"]


def quintic_field() -> NumberField:
    if "quintic" not in _FIELDS:
        _FIELDS["quintic"] = field_new(QUINTIC)
    return _FIELDS["quintic"]


def composite_63_field():
    """Degree-6 field containing the quadratic unit and the cubic units.

    Returns (field, mu, lam) with mu the image of the quadratic generator
    and lam the image of the cubic generator.
    """
    if "composite63" not in _FIELDS:
        H, hom_mu, hom_lam = field_compose(quadratic_field(), cubic_field())
        _FIELDS["composite63"] = (H, hom_mu.gen_image, hom_lam.gen_image)
    return _FIELDS["composite63"]


def cubic_lambdas(lam):
    """The three roots as elements of lam's field: lam, lam^2-2, (lam^2-2)^2-2."""
    l1 = lam
    l2 = l1 * l1 - 2
    l3 = l2 * l2 - 2
    return l1, l2, l3


def quintic_lambdas(field: NumberField):
    """Roots ordered so that lam_{i+1}^2 = lam_i + 2 cyclically."""
    sigma = [field.gen()]
    for _ in range(4):
        sigma.append(sigma[-1] * sigma[-1] - 2)
    # sigma = [t, s(t), s^2(t), s^3(t), s^4(t)]; lam_1 = t, lam_{i+1} = s^(5-i+...)
    l1 = sigma[0]
    l2 = sigma[4]
    l3 = sigma[3]
    l4 = sigma[2]
    l5 = sigma[1]
    return l1, l2, l3, l4, l5


# -- bracket tables -------------------------------------------------------------------
#
# All entries are (i, j, k, coefficient) with 0-based indices and i < j.

def _t_n333(a, b, c):
    return 9, [(0, 1, 3, 1), (1, 2, 4, 1), (0, 2, 5, 1),
               (0, 3, 6, a), (1, 4, 7, b), (2, 5, 8, c)], (3, 3, 3)


def _t_U(t, s, r):
    return 9, [(0, 1, 6, t), (2, 3, 7, t), (4, 5, 8, t),
               (3, 4, 6, -s), (0, 5, 7, s), (1, 2, 8, -s),
               (2, 5, 6, r), (1, 4, 7, -r), (0, 3, 8, r)], (6, 3)


def _t_n63prime(a, b, c):
    return 9, [(0, 1, 6, 1), (2, 3, 7, 1), (4, 5, 8, 1),
               (3, 4, 6, -a), (0, 5, 7, b), (1, 2, 8, -c)], (6, 3)


def _t_ntilde(a, b, c):
    return 9, [(0, 1, 6, 1), (1, 2, 7, 1), (0, 2, 8, 1),
               (2, 5, 6, c), (0, 3, 7, a), (1, 4, 8, b)], (6, 3)


def _t_g12(a, b, c, d, e, f, g, h, i, j, k, l):
    # twelve-parameter 2-step family on two conjugate triples; the last
    # column is oriented so that the cubic coefficient of the Pfaffian is
    # exactly afk - ael + bdi - bgf + cje - cdh + lhg - ijk
    return 9, [(0, 1, 6, a), (1, 2, 7, b), (0, 2, 8, c),
               (3, 4, 6, d), (4, 5, 7, e), (3, 5, 8, f),
               (0, 4, 6, g), (1, 5, 7, h), (0, 5, 8, i),
               (1, 3, 6, -j), (2, 4, 7, -k), (2, 3, 8, -l)], (6, 3)


def _t_h3():
    return 3, [(0, 1, 2, 1)], (2, 1)


def _t_f3():
    return 6, [(0, 1, 3, 1), (0, 2, 4, 1), (1, 2, 5, 1)], (3, 3)


def _t_l4():
    return 4, [(0, 1, 2, 1), (0, 2, 3, 1)], (2, 1, 1)


def _t_n55():
    return 10, [(0, 1, 5, 1), (1, 2, 6, 1), (2, 3, 7, 1),
                (3, 4, 8, 1), (0, 4, 9, -1)], (5, 5)


def _t_n622():
    # basis X1..X6, Z1, Z2, W1, W2; not strictly graded ([X5,X2] lands two
    # layers up) but layer-ordered, so the certification blocks still align
    return 10, [(0, 1, 6, 1), (1, 4, 8, -1), (0, 6, 8, 1),
                (2, 3, 7, 1), (3, 5, 9, -1), (2, 7, 9, 1)], None


def _t_n442_0():
    return 10, [(0, 2, 4, 1), (1, 3, 5, 1), (1, 2, 6, 1), (0, 3, 7, 1),
                (0, 6, 8, 1), (1, 4, 8, 1), (0, 5, 9, 1), (1, 7, 9, 1)], (4, 4, 2)


def _t_n442_1():
    return 10, [(0, 2, 4, 1), (1, 3, 5, 1), (1, 2, 6, 1), (0, 3, 7, 1),
                (0, 4, 8, 1), (1, 5, 9, 1)], (4, 4, 2)


def _t_n424_half():
    return 5, [(0, 1, 2, 1), (0, 2, 3, 1), (1, 2, 4, 1)], (2, 1, 2)


def _t_n4222_half():
    return 5, [(0, 1, 2, 1), (0, 2, 3, 1), (0, 3, 4, 1)], (2, 1, 1, 1)


def _t_n622_half():
    # basis X1, X2, X5, Z1, W1 of one summand of the (6,2,2) algebra
    return 5, [(0, 1, 3, 1), (1, 2, 4, -1), (0, 3, 4, 1)], None


def _t_abelian(n):
    if n != int(n) or n < 0:
        raise ParamCount("abelian expects a nonnegative integer dimension")
    return int(n), [], None


_TABLES = {
    "n333": (3, _t_n333),
    "U": (3, _t_U),
    "n63prime": (3, _t_n63prime),
    "ntilde": (3, _t_ntilde),
    "g12": (12, _t_g12),
    "h3": (0, _t_h3),
    "f3": (0, _t_f3),
    "l4": (0, _t_l4),
    "n55": (0, _t_n55),
    "n622": (0, _t_n622),
    "n442_0": (0, _t_n442_0),
    "n442_1": (0, _t_n442_1),
    "n424_half": (0, _t_n424_half),
    "n4222_half": (0, _t_n4222_half),
    "abelian": (1, _t_abelian),
}


def algebra_names():
    return sorted(_TABLES)


def catalog_algebra(name, params=(), domain=RATIONAL) -> LieAlgebra:
    """Exact bracket table for a documented name; params per name."""
    if name not in _TABLES:
        raise UnknownName(f"no catalog algebra named {name!r}")
    count, builder = _TABLES[name]
    params = list(params)
    if len(params) != count:
        raise ParamCount(f"{name} expects {count} parameter(s), got {len(params)}")
    if name == "abelian":
        dim, entries, grading = builder(params[0])
    else:
        dim, entries, grading = builder(*[Fraction(p) for p in params])
    if domain is not RATIONAL and grading is not None:
        # gradings carry over verbatim; strictness does not depend on the domain
        pass
    return algebra_new(dim, domain, entries, grading)


# -- shared basis families --------------------------------------------------------------


def _column(dim, field, entries):
    col = [field.zero()] * dim
    for idx, val in entries:
        col[idx] = col[idx] + val
    return col


def _vandermonde_family(dim, field, slots, weights, powers):
    """Columns sum_j weights[j] * base[j]^p e_{slots[j]} for p in powers."""
    cols = []
    for p in powers:
        entries = []
        for (slot, w, base) in zip(slots, weights[0], weights[1]):
            entries.append((slot, w * base ** p))
        cols.append(_column(dim, field, entries))
    return cols


def _discweight_family(dim, field, slots, lams, powers):
    """The twisted discriminant-weight family used for the center layers.

    Column p carries weight (l2 - l1) lam3^p on the first slot,
    (l3 - l2) lam1^p on the second and (l3 - l1) lam2^p on the third.
    """
    l1, l2, l3 = lams
    cols = []
    for p in powers:
        entries = [(slots[0], (l2 - l1) * l3 ** p),
                   (slots[1], (l3 - l2) * l1 ** p),
                   (slots[2], (l3 - l1) * l2 ** p)]
        cols.append(_column(dim, field, entries))
    return cols


def _doubling_columns(dim, field, lam, pairs):
    """Per conjugate pair (p, q): columns e_p + e_q and lam e_p + lam^-1 e_q."""
    lam_inv = elem_inv(lam)
    one = field.one()
    cols = []
    for (p, q) in pairs:
        cols.append(_column(dim, field, [(p, one), (q, one)]))
        cols.append(_column(dim, field, [(p, lam), (q, lam_inv)]))
    return cols


# -- exact 2x2 congruence utilities for the amalgam case ----------------------------------


def _m2(rows):
    return [[Fraction(x) for x in row] for row in rows]


def _m2_mul(A, B):
    return [[A[0][0] * B[0][0] + A[0][1] * B[1][0],
             A[0][0] * B[0][1] + A[0][1] * B[1][1]],
            [A[1][0] * B[0][0] + A[1][1] * B[1][0],
             A[1][0] * B[0][1] + A[1][1] * B[1][1]]]


def _m2_t(A):
    return [[A[0][0], A[1][0]], [A[0][1], A[1][1]]]


def _m2_inv(A):
    d = A[0][0] * A[1][1] - A[0][1] * A[1][0]
    if d == 0:
        raise AlgebraError("2x2 matrix not invertible")
    return [[A[1][1] / d, -A[0][1] / d], [-A[1][0] / d, A[0][0] / d]]


def _sym_diagonalize(N):
    """V, (d1, d2) with N = V diag(d1, d2) V^T for symmetric invertible N."""
    a, b, d = N[0][0], N[0][1], N[1][1]
    if a != 0:
        # clear the off-diagonal against the (0,0) pivot
        V = [[Fraction(1), Fraction(0)], [b / a, Fraction(1)]]
        return V, (a, d - b * b / a)
    if d != 0:
        V = [[b / d, Fraction(1)], [Fraction(1), Fraction(0)]]
        return V, (a - b * b / d, d)
    # hyperbolic: N = [[0, b], [b, 0]]
    W = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)]]
    V = _m2_t(_m2_inv(W))
    return V, (2 * b, -2 * b)


def _amalgam_transforms(M1, M2, M3):
    """G1, G2, G3 and an integer diagonal J with Gr^T M Gs = J for all slots.

    Solves the chain G1 = M1^-T G2^-T J, G3 = M2^-1 G2^-T J against the
    congruence N = M1^-1 M3 M2^-1 = G2 J^-1 G2^T; N must come out
    symmetric, which encodes that the three slot forms are compatible.
    """
    N = _m2_mul(_m2_inv(M1), _m2_mul(M3, _m2_inv(M2)))
    if N[0][1] != N[1][0]:
        raise AlgebraError("slot forms are incompatible: N is not symmetric")
    V, (d1, d2) = _sym_diagonalize(N)
    if d1 == 0 or d2 == 0:
        raise AlgebraError("degenerate slot form")
    # G2 = V diag(c1, c2) with c_i = numerator(d_i) makes J integral
    c1, c2 = Fraction(d1.numerator), Fraction(d2.numerator)
    j1, j2 = c1 * c1 / d1, c2 * c2 / d2
    G2 = _m2_mul(V, [[c1, Fraction(0)], [Fraction(0), c2]])
    J = [[j1, Fraction(0)], [Fraction(0), j2]]
    G2it = _m2_t(_m2_inv(G2))
    G1 = _m2_mul(_m2_t(_m2_inv(M1)), _m2_mul(G2it, J))
    G3 = _m2_mul(_m2_inv(M2), _m2_mul(G2it, J))
    for (L, M, R) in ((G1, M1, G2), (G2, M2, G3), (G1, M3, G3)):
        got = _m2_mul(_m2_t(L), _m2_mul(M, R))
        if got != J:
            raise AlgebraError("amalgam transform check failed")
    assert j1.denominator == 1 and j2.denominator == 1
    return G1, G2, G3, J


# -- the cases ------------------------------------------------------------------------------


@dataclass(frozen=True)
class PaperCase:
    name: str
    algebra: LieAlgebra
    field: NumberField
    automorphism: DiagonalAutomorphism
    basis: BasisMatrix
    expected_type: tuple
    provenance: str

    def __post_init__(self):
        if jacobi_check(self.algebra) is not None:
            raise AlgebraError(f"case {self.name}: Jacobi identity fails")
        parts = graded_type(self.algebra)[0]
        if parts != self.expected_type:
            raise AlgebraError(
                f"case {self.name}: type {parts} != expected {self.expected_type}")


def _case_dim9_333():
    F = cubic_field()
    l1, l2, l3 = cubic_lambdas(F.gen())
    L = catalog_algebra("n333", [1, 1, 1], domain=F)
    mu = (l1 * l2, l2 * l3, l1 * l3)
    nu = (l1 * mu[0], l2 * mu[1], l3 * mu[2])
    A = diagonal_automorphism((l1, l2, l3) + mu + nu, (3, 3, 3), F)
    cols = []
    cols += _vandermonde_family(9, F, (0, 1, 2),
                                ((F.one(),) * 3, (l1, l2, l3)), (0, 1, 2))
    cols += _discweight_family(9, F, (3, 4, 5), (l1, l2, l3), (0, -1, -2))
    # center family: plain powers against the same discriminant weights
    for p in (0, 1, 2):
        cols.append(_column(9, F, [(6, (l2 - l1) * l1 ** p),
                                   (7, (l3 - l2) * l2 ** p),
                                   (8, (l3 - l1) * l3 ** p)]))
    B = basis_matrix(cols, F)
    return PaperCase("dim9_333", L, F, A, B, (3, 3, 3),
                     "type (3,3,3) algebra over the cyclic cubic unit field; "
                     "Vandermonde and discriminant-weight lattice families")


def _case_dim9_63_u2u3():
    H, mu, lam = composite_63_field()
    l1, l2, l3 = cubic_lambdas(lam)
    mu_inv = elem_inv(mu)
    L = catalog_algebra("U", [0, 1, 1], domain=H)
    ev = (mu * l3, mu_inv * l3, mu * l2, mu_inv * l2, mu * l1, mu_inv * l1,
          l1 * l2, l1 * l3, l2 * l3)
    A = diagonal_automorphism(ev, (6, 3), H)
    cols = []
    for k in (0, 1):
        for l in (0, 1, 2):
            muk = mu ** k
            muk_inv = mu_inv ** k
            cols.append(_column(9, H, [
                (0, l3 ** l * muk), (1, l3 ** l * muk_inv),
                (2, l2 ** l * muk), (3, l2 ** l * muk_inv),
                (4, l1 ** l * muk), (5, l1 ** l * muk_inv)]))
    w = mu_inv - mu
    for r in (-1, 0, 1):
        cols.append(_column(9, H, [(6, w * l3 ** r),
                                   (7, w * l2 ** r),
                                   (8, w * l1 ** r)]))
    B = basis_matrix(cols, H)
    return PaperCase("dim9_63_u2u3", L, H, A, B, (6, 3),
                     "type (6,3) sum of two unit actions over the composite "
                     "quadratic*cubic field, with paired mu^k lambda^l families")


def _case_dim9_ntilde():
    F = cubic_field()
    l1, l2, l3 = cubic_lambdas(F.gen())
    L = catalog_algebra("ntilde", [1, 1, 1], domain=F)
    mu = (l1 * l2, l2 * l3, l1 * l3)
    ev = (l1, l2, l3,
          mu[1] * elem_inv(l1), mu[2] * elem_inv(l2), mu[0] * elem_inv(l3)) + mu
    A = diagonal_automorphism(ev, (6, 3), F)
    cols = []
    cols += _vandermonde_family(9, F, (0, 1, 2),
                                ((F.one(),) * 3, (l1, l2, l3)), (0, 1, 2))
    # second generator triple, weighted like the center family: X6, X4, X5
    cols += _discweight_family(9, F, (5, 3, 4), (l1, l2, l3), (0, -1, -2))
    cols += _discweight_family(9, F, (6, 7, 8), (l1, l2, l3), (0, -1, -2))
    B = basis_matrix(cols, F)
    return PaperCase("dim9_ntilde", L, F, A, B, (6, 3),
                     "type (6,3) quotient-style algebra over the cubic field "
                     "with inverse-square eigenvalues on the second triple")


def _case_dim9_u2u3_n3():
    F = cubic_field()
    l1, l2, l3 = cubic_lambdas(F.gen())
    params = [1, 1, 1, 1, 1, 0, 1, 0, 1, 0, 1, 1]
    L = catalog_algebra("g12", params, domain=F)
    lams = (l1, l2, l3)
    mu = (l1 * l2, l2 * l3, l1 * l3)
    ev = lams + lams + mu
    A = diagonal_automorphism(ev, (6, 3), F)

    # eigenspace pairs (X_j, X_{j+3}); slot forms M1: Y1 on E1 x E2,
    # M2: Y2 on E2 x E3, M3: Y3 on E1 x E3, read off the bracket table
    pairs = ((0, 3), (1, 4), (2, 5))

    def slot_form(center, ea, eb):
        rows = []
        for p in pairs[ea]:
            row = []
            for q in pairs[eb]:
                v = L.bracket_basis(p, q)[center]
                row.append(v.as_fraction() if isinstance(v, FieldElement)
                           else Fraction(v))
            rows.append(row)
        return _m2(rows)

    M1 = slot_form(6, 0, 1)
    M2 = slot_form(7, 1, 2)
    M3 = slot_form(8, 0, 2)
    G1, G2, G3, _J = _amalgam_transforms(M1, M2, M3)

    cols = []
    for col_idx in (0, 1):
        for p in (0, 1, 2):
            entries = []
            for j, G in enumerate((G1, G2, G3)):
                base = lams[j] ** p
                entries.append((pairs[j][0], base * G[0][col_idx]))
                entries.append((pairs[j][1], base * G[1][col_idx]))
            cols.append(_column(9, F, entries))
    cols += _discweight_family(9, F, (6, 7, 8), lams, (0, -1, -2))
    B = basis_matrix(cols, F)
    return PaperCase("dim9_u2u3_n3", L, F, A, B, (6, 3),
                     "the twelve-parameter instance (1,1,1,1,1,0,1,0,1,0,1,1): "
                     "an amalgamated pair of conjugate triples; eigenspace "
                     "transforms computed by exact congruence diagonalization")


def _case_dim9_h3cubed():
    F = cubic_field()
    lam = F.gen()
    half = catalog_algebra("h3", domain=F)
    A_half = diagonal_automorphism((lam, lam, lam * lam), (2, 1), F)
    sigma = lam * lam - 2
    L, A, B = galois_twist_sum(half, A_half, sigma)
    return PaperCase("dim9_h3cubed", L, F, A, B, (6, 3),
                     "threefold Galois twist of the Heisenberg algebra over "
                     "the cyclic cubic field")


def _case_dim10_55():
    F = quintic_field()
    l = quintic_lambdas(F)
    L = catalog_algebra("n55", domain=F)
    ev = tuple(l) + (l[0] * l[1], l[1] * l[2], l[2] * l[3], l[3] * l[4],
                     l[4] * l[0])
    A = diagonal_automorphism(ev, (5, 5), F)
    cols = []
    for p in range(5):
        cols.append(_column(10, F, [(j, l[j] ** p) for j in range(5)]))
    shifted = (l[1], l[2], l[3], l[4], l[0])
    for p in range(5):
        cols.append(_column(10, F, [(5 + j, shifted[j] ** p) for j in range(5)]))
    B = basis_matrix(cols, F)
    return PaperCase("dim10_55", L, F, A, B, (5, 5),
                     "type (5,5) algebra over the cyclic quintic unit field "
                     "(totally real subfield of the 11th cyclotomic field)")


def _case_dim10_622():
    F = quadratic_field()
    lam = F.gen()
    dim, entries, grading = _t_n622_half()
    half = algebra_new(dim, F, entries, grading)
    A_half = diagonal_automorphism((lam, lam, lam ** 2, lam ** 2, lam ** 3),
                                   (3, 1, 1), F)
    sigma = 3 - lam  # = 1/lam
    L, A, B = galois_twist_sum(half, A_half, sigma)
    return PaperCase("dim10_622", L, F, A, B, (6, 2, 2),
                     "Galois double of the 5-dimensional (3,1,1) half over "
                     "the real quadratic unit field")


def _case_dim10_424():
    F = quadratic_field()
    lam = F.gen()
    half = catalog_algebra("n424_half", domain=F)
    A_half = diagonal_automorphism((lam, lam, lam ** 2, lam ** 3, lam ** 3),
                                   (2, 1, 2), F)
    L, A, B = galois_twist_sum(half, A_half, 3 - lam)
    return PaperCase("dim10_424", L, F, A, B, (4, 2, 4),
                     "Galois double of the 5-dimensional (2,1,2) half over "
                     "the real quadratic unit field")


def _case_dim10_4222():
    F = quadratic_field()
    lam = F.gen()
    half = catalog_algebra("n4222_half", domain=F)
    A_half = diagonal_automorphism((lam, lam, lam ** 2, lam ** 3, lam ** 4),
                                   (2, 1, 1, 1), F)
    L, A, B = galois_twist_sum(half, A_half, 3 - lam)
    return PaperCase("dim10_4222", L, F, A, B, (4, 2, 2, 2),
                     "Galois double of the filiform-with-tail (2,1,1,1) half "
                     "over the real quadratic unit field")


def _case_dim10_442(variant):
    F = quadratic_field()
    lam = F.gen()
    lam_inv = elem_inv(lam)
    name = "n442_0" if variant == 0 else "n442_1"
    L = catalog_algebra(name, domain=F)
    a1 = (lam, lam_inv, lam ** 2, lam_inv ** 2)
    a2 = (lam ** 3, lam_inv ** 3, lam, lam_inv)
    a3 = ((lam ** 2, lam_inv ** 2) if variant == 0
          else (lam ** 4, lam_inv ** 4))
    A = diagonal_automorphism(a1 + a2 + a3, (4, 4, 2), F)
    pairs = ((0, 1), (2, 3), (4, 5), (6, 7), (8, 9))
    B = basis_matrix(_doubling_columns(10, F, lam, pairs), F)
    return PaperCase(f"dim10_442_n{variant}", L, F, A, B, (4, 4, 2),
                     "type (4,4,2) extension over the real quadratic unit "
                     "field with conjugate-pair doubling basis")


_CASES = {
    "dim9_333": _case_dim9_333,
    "dim9_63_u2u3": _case_dim9_63_u2u3,
    "dim9_ntilde": _case_dim9_ntilde,
    "dim9_u2u3_n3": _case_dim9_u2u3_n3,
    "dim9_h3cubed": _case_dim9_h3cubed,
    "dim10_55": _case_dim10_55,
    "dim10_622": _case_dim10_622,
    "dim10_424": _case_dim10_424,
    "dim10_4222": _case_dim10_4222,
    "dim10_442_n0": lambda: _case_dim10_442(0),
    "dim10_442_n1": lambda: _case_dim10_442(1),
}

_CASE_CACHE = {}


def case_names():
    return sorted(_CASES)


def paper_case(name) -> PaperCase:
    if name not in _CASES:
        raise UnknownName(f"no catalog case named {name!r}")
    if name not in _CASE_CACHE:
        _CASE_CACHE[name] = _CASES[name]()
    return _CASE_CACHE[name]
