"""Structure-constant nilpotent Lie algebras over Q or a number field.

An algebra is a sparse antisymmetric tensor keyed by basis index pairs
(i, j) with i < j (0-based), mapping to {k: coefficient}.  All operations
are exact; ranks over Q go through fraction-free Bareiss elimination,
ranks over a number field through ordinary elimination.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import linalg
from .exactnum.numberfield import lin_solve_columns
from .exceptions import (AlgebraError, AlreadyAbelian, DomainMismatch,
                         IndexOutOfRange, NotLayerOrdered, NotNilpotent,
                         Singular)

GradedType = tuple  # (n_1, ..., n_r), layer dimensions of the lower central series


@dataclass(frozen=True)
class SubspaceBasis:
    """Linearly independent coordinate vectors (verified by exact rank)."""

    vectors: tuple

    def __len__(self):
        return len(self.vectors)


class LieAlgebra:
    def __init__(self, dim, domain, tensor, grading=None):
        self.dim = dim
        self.domain = domain
        self.tensor = tensor
        self.grading = grading
        if grading is not None:
            self._check_strict_grading(grading)

    def _check_strict_grading(self, grading):
        if sum(grading) != self.dim or any(n <= 0 for n in grading):
            raise AlgebraError(f"grading {grading} does not sum to dim {self.dim}")
        layer = []
        for ell, n in enumerate(grading, start=1):
            layer.extend([ell] * n)
        for (i, j), row in self.tensor.items():
            for k in row:
                if layer[k] != layer[i] + layer[j]:
                    raise AlgebraError(
                        f"bracket [{i},{j}] -> {k} violates the grading "
                        f"{layer[i]}+{layer[j]} != {layer[k]}")

    # -- basic bracket machinery ---------------------------------------------------

    def zero_vector(self):
        z = self.domain.zero()
        return [z for _ in range(self.dim)]

    def basis_vector(self, i):
        v = self.zero_vector()
        v[i] = self.domain.one()
        return v

    def bracket_basis(self, i, j):
        """[e_i, e_j] as a coordinate vector."""
        out = self.zero_vector()
        if i == j:
            return out
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        row = self.tensor.get((i, j))
        if row:
            for k, c in row.items():
                out[k] = out[k] + c if sign == 1 else out[k] - c
        return out

    def bracket(self, u, v):
        """Bilinear antisymmetric extension of the structure tensor."""
        out = self.zero_vector()
        dom = self.domain
        for (i, j), row in self.tensor.items():
            c = u[i] * v[j] - u[j] * v[i]
            if not dom.is_zero(c):
                for k, coeff in row.items():
                    out[k] = out[k] + c * coeff
        return out

    def nonzero_entries(self):
        """Sorted (i, j, k, coeff) quadruples actually stored."""
        out = []
        for (i, j) in sorted(self.tensor):
            for k in sorted(self.tensor[(i, j)]):
                out.append((i, j, k, self.tensor[(i, j)][k]))
        return out

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        if self.dim != other.dim or self.domain != other.domain:
            return False
        keys = set(self.tensor) | set(other.tensor)
        for key in keys:
            a = self.tensor.get(key, {})
            b = other.tensor.get(key, {})
            for k in set(a) | set(b):
                ca = a.get(k, self.domain.zero())
                cb = b.get(k, self.domain.zero())
                if not self.domain.is_zero(ca - cb):
                    return False
        return True

    def __repr__(self):
        return (f"LieAlgebra(dim={self.dim}, domain={self.domain!r}, "
                f"{len(self.nonzero_entries())} brackets)")


def algebra_new(dim, domain, brackets, grading=None) -> LieAlgebra:
    """Build an algebra from (i, j, k, coeff) entries with i < j (0-based).

    Duplicate (i, j, k) entries are summed; zero results are dropped.
    """
    tensor = {}
    for (i, j, k, c) in brackets:
        if not (0 <= i < j < dim) or not (0 <= k < dim):
            raise IndexOutOfRange(f"bracket entry ({i},{j},{k}) out of range")
        coeff = domain.coerce(c)
        row = tensor.setdefault((i, j), {})
        row[k] = row.get(k, domain.zero()) + coeff
    for key in list(tensor):
        row = {k: c for k, c in tensor[key].items() if not domain.is_zero(c)}
        if row:
            tensor[key] = row
        else:
            del tensor[key]
    return LieAlgebra(dim, domain, tensor, grading)


def jacobi_check(L: LieAlgebra):
    """None when the Jacobi identity holds, else the first witness (i, j, k)."""
    dom = L.domain
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            for k in range(j + 1, L.dim):
                s = L.bracket(L.bracket_basis(i, j), L.basis_vector(k))
                s = linalg.add_vec(s, L.bracket(L.bracket_basis(j, k),
                                                L.basis_vector(i)))
                s = linalg.add_vec(s, L.bracket(L.bracket_basis(k, i),
                                                L.basis_vector(j)))
                if any(not dom.is_zero(x) for x in s):
                    return (i, j, k)
    return None


# -- series and invariants -----------------------------------------------------------


def _span_basis(vectors, dom):
    rows = [list(v) for v in vectors]
    if not rows:
        return []
    return linalg.row_space_basis(rows, dom)


def lower_central_series(L: LieAlgebra):
    """[C^0, C^1, ...] as echelon bases, ending with the first zero term."""
    dom = L.domain
    series = [[list(L.basis_vector(i)) for i in range(L.dim)]]
    current = series[0]
    while True:
        values = []
        for v in current:
            for i in range(L.dim):
                w = L.bracket(v, L.basis_vector(i))
                if any(not dom.is_zero(x) for x in w):
                    values.append(w)
        nxt = _span_basis(values, dom)
        series.append(nxt)
        if not nxt:
            return series
        if len(nxt) >= len(current):
            raise NotNilpotent(
                f"lower central series stabilizes at dimension {len(nxt)}")
        current = nxt


def graded_type(L: LieAlgebra):
    """Type (n_1, ..., n_r) of the lower central series, with the chain."""
    series = lower_central_series(L)
    dims = [len(term) for term in series]
    parts = tuple(dims[i] - dims[i + 1] for i in range(len(dims) - 1))
    chain = [SubspaceBasis(tuple(tuple(v) for v in term)) for term in series]
    return parts, chain


def center(L: LieAlgebra):
    """Echelon basis of the center z(L)."""
    dom = L.domain
    rows = []
    for j in range(L.dim):
        # matrix of x -> [x, e_j], stacked over all j
        for k in range(L.dim):
            row = [L.bracket_basis(i, j)[k] for i in range(L.dim)]
            rows.append(row)
    return [list(v) for v in linalg.kernel(rows, dom)]


def derived_subspace(L: LieAlgebra):
    values = []
    for (i, j), row in L.tensor.items():
        values.append(L.bracket_basis(i, j))
    return _span_basis(values, L.domain)


def _intersection(basis_a, basis_b, dom, dim):
    """Echelon basis of span(A) * span(B)."""
    if not basis_a or not basis_b:
        return []
    # x in both spans: x = A^T u = B^T v; solve [A^T | -B^T] null space
    cols = len(basis_a) + len(basis_b)
    rows = []
    for i in range(dim):
        rows.append([basis_a[a][i] for a in range(len(basis_a))]
                    + [-basis_b[b][i] for b in range(len(basis_b))])
    null = linalg.kernel(rows, dom)
    vecs = []
    for n in null:
        x = [dom.zero()] * dim
        for a in range(len(basis_a)):
            x = [xi + n[a] * ai for xi, ai in zip(x, basis_a[a])]
        vecs.append(x)
    return _span_basis(vecs, dom)


def abelian_factor_dim(L: LieAlgebra):
    """Maximal abelian factor dimension with a witness splitting.

    Returns (m, abelian basis, complement ideal basis) where the value is
    dim z(L) - dim(z(L) cap [L, L]).  Any abelian factor is central and
    meets [L, L] trivially, and any complement of z cap [L, L] inside z
    splits off against a complementary subspace containing [L, L]; that
    subspace is automatically an ideal.
    """
    dom = L.domain
    z = center(L)
    der = derived_subspace(L)
    zder = _intersection(z, der, dom, L.dim)
    m = len(z) - len(zder)

    # abelian part: extend z cap [L,L] to a basis of z
    abelian = []
    cur = [row[:] for row in zder]
    for v in z:
        if not linalg.in_span(v, cur, dom):
            abelian.append(v)
            cur.append(v)
    # complement ideal: extend [L,L] + abelian to the whole space with
    # standard basis vectors; the ideal is spanned by [L,L] and those
    ideal = [row[:] for row in der]
    cur = [row[:] for row in der] + [row[:] for row in abelian]
    for i in range(L.dim):
        e = list(L.basis_vector(i))
        if not linalg.in_span(e, cur, dom):
            ideal.append(e)
            cur.append(e)
    return m, SubspaceBasis(tuple(tuple(v) for v in abelian)), \
        SubspaceBasis(tuple(tuple(v) for v in ideal))


# -- quotient / derived / rebasing ---------------------------------------------------


def _projection_data(sub_rows, dom, dim):
    """rref rows of the subspace and the free standard-basis columns."""
    if not sub_rows:
        return [], list(range(dim))
    red, pivots = linalg.rref([list(r) for r in sub_rows], dom)
    red = red[:len(pivots)]
    free = [c for c in range(dim) if c not in pivots]
    return list(zip(pivots, red)), free


def _project(v, proj_rows, free):
    out = list(v)
    for pivot, row in proj_rows:
        c = out[pivot]
        out = [a - c * b for a, b in zip(out, row)]
    return [out[c] for c in free]


def _subalgebra_on(vectors, L):
    """Bracket table of L restricted to the span of the given vectors."""
    dom = L.domain
    basis = [list(v) for v in vectors]
    cols = [list(v) for v in basis]
    n = len(basis)
    brackets = []
    for a in range(n):
        for b in range(a + 1, n):
            w = L.bracket(basis[a], basis[b])
            if all(dom.is_zero(x) for x in w):
                continue
            coords = lin_solve_columns(cols, w, dom)
            if coords is None:
                raise AlgebraError("subspace is not closed under the bracket")
            for k, c in enumerate(coords):
                if not dom.is_zero(c):
                    brackets.append((a, b, k, c))
    return algebra_new(n, dom, brackets)


def reduce(L: LieAlgebra):
    """Quotient by the last lower-central term, and the derived subalgebra.

    Mirrors the descent to lower-dimensional certified algebras: for an
    r-step algebra the quotient is (r-1)-step on the leading layers and
    the derived algebra carries the restricted bracket.
    """
    series = lower_central_series(L)
    r = len(series) - 1  # nilpotency class
    if r < 2:
        raise AlreadyAbelian(f"algebra is {r}-step; nothing to reduce")
    dom = L.domain
    last = series[r - 1]  # C^(r-1), the final nonzero term
    proj_rows, free = _projection_data(last, dom, L.dim)
    n = len(free)
    brackets = []
    for a in range(n):
        for b in range(a + 1, n):
            w = L.bracket(L.basis_vector(free[a]), L.basis_vector(free[b]))
            coords = _project(w, proj_rows, free)
            for k, c in enumerate(coords):
                if not dom.is_zero(c):
                    brackets.append((a, b, k, c))
    quotient = algebra_new(n, dom, brackets)
    derived = _subalgebra_on(series[1], L)
    return quotient, derived


@dataclass(frozen=True)
class BasisMatrix:
    """Candidate basis: columns are the new basis vectors in old coordinates."""

    columns: tuple
    domain: object

    def __post_init__(self):
        rows = self.as_rows()
        if self.domain.is_zero(linalg.det(rows, self.domain)):
            raise Singular("basis matrix has zero determinant")

    def as_rows(self):
        n = len(self.columns)
        return [[self.columns[j][i] for j in range(n)] for i in range(len(self.columns[0]))]

    @property
    def dim(self):
        return len(self.columns)


def basis_matrix(columns, domain) -> BasisMatrix:
    cols = tuple(tuple(domain.coerce(x) for x in col) for col in columns)
    return BasisMatrix(cols, domain)


def change_basis(L: LieAlgebra, B: BasisMatrix) -> LieAlgebra:
    """Structure tensor in the basis given by B's columns.

    The bracket equivariance [Bu, Bv] = B [u, v]' holds by construction
    and is re-verified on a pseudorandom sample of vector pairs.
    """
    dom = L.domain
    rows = B.as_rows()
    inv = linalg.inverse(rows, dom)
    n = L.dim
    cols = [list(c) for c in B.columns]
    brackets = []
    for a in range(n):
        for b in range(a + 1, n):
            w = L.bracket(cols[a], cols[b])
            coords = linalg.mat_vec(inv, w)
            for k, c in enumerate(coords):
                if not dom.is_zero(c):
                    brackets.append((a, b, k, c))
    out = algebra_new(n, dom, brackets)

    rng = random.Random(0)
    for _ in range(3):
        u = [dom.from_int(rng.randrange(-2, 3)) for _ in range(n)]
        v = [dom.from_int(rng.randrange(-2, 3)) for _ in range(n)]
        lhs = L.bracket(linalg.mat_vec(rows, u), linalg.mat_vec(rows, v))
        rhs = linalg.mat_vec(rows, out.bracket(u, v))
        if any(not dom.is_zero(x - y) for x, y in zip(lhs, rhs)):
            raise AlgebraError("bracket equivariance check failed")
    return out


def ad_image_dim(L: LieAlgebra, x) -> int:
    """Exact rank of ad x."""
    cols = [L.bracket(list(x), L.basis_vector(j)) for j in range(L.dim)]
    return linalg.rank(linalg.transpose(cols), L.domain) if cols else 0


def direct_sum(*algebras) -> LieAlgebra:
    """Block-diagonal sum; summands must share the coefficient domain."""
    if not algebras:
        raise ValueError("direct_sum of nothing")
    dom = algebras[0].domain
    for L in algebras[1:]:
        if L.domain != dom:
            raise DomainMismatch("direct summands over different domains")
    dim = sum(L.dim for L in algebras)
    brackets = []
    offset = 0
    for L in algebras:
        for (i, j, k, c) in L.nonzero_entries():
            brackets.append((i + offset, j + offset, k + offset, c))
        offset += L.dim
    return algebra_new(dim, dom, brackets)


def layer_ranges(L: LieAlgebra):
    """Index ranges of the lower-central layers; basis must be layer-ordered.

    Layer-ordered means every C^i equals the span of the trailing standard
    basis vectors, which holds for all catalog constructions.
    """
    parts, chain = graded_type(L)
    dom = L.domain
    start = 0
    ranges = []
    for idx, n in enumerate(parts):
        ranges.append(range(start, start + n))
        start += n
    # verify: C^i is the tail span
    offset = 0
    for i, term in enumerate(chain[:-1]):
        if i > 0:
            for v in term.vectors:
                if any(not dom.is_zero(x) for x in v[:offset]):
                    raise NotLayerOrdered(
                        f"C^{i} has support below index {offset}")
        if i < len(parts):
            offset += parts[i]
    return parts, ranges
