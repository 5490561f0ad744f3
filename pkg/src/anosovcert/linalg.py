"""Exact linear algebra over the rationals or a number field.

Matrices are lists of row lists whose entries belong to a coefficient
domain (see exactnum.numberfield).  Rational matrices are routed through
fraction-free Bareiss elimination after clearing denominators; number
field matrices use ordinary Gaussian elimination with exact division.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .exceptions import Singular


def identity(n, dom):
    one, zero = dom.one(), dom.zero()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(rows):
    return [list(col) for col in zip(*rows)] if rows else []

def mat_vec(rows, v):
    return [sum((r[j] * v[j] for j in range(1, len(v))), r[0] * v[0]) for r in rows]


def mat_mul(a, b):
    bt = transpose(b)
    return [[sum((ra[k] * cb[k] for k in range(1, len(ra))), ra[0] * cb[0])
             for cb in bt] for ra in a]


def scale_vec(c, v):
    return [c * x for x in v]


def add_vec(u, v):
    return [a + b for a, b in zip(u, v)]


def sub_vec(u, v):
    return [a - b for a, b in zip(u, v)]


# -- integer Bareiss kernels -----------------------------------------------------

def _rows_to_int(rows):
    """Scale each row to integers (rank preserving); entries must be Fractions."""
    out = []
    for row in rows:
        den = 1
        for c in row:
            den = den * c.denominator // gcd(den, c.denominator)
        out.append([int(c * den) for c in row])
    return out


def _bareiss_rank(m):
    if not m or not m[0]:
        return 0
    m = [row[:] for row in m]
    nr, nc = len(m), len(m[0])
    rank, prev = 0, 1
    for col in range(nc):
        piv = next((r for r in range(rank, nr) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, nr):
            for j in range(col + 1, nc):
                m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) // prev
            m[i][col] = 0
        prev = m[rank][col]
        rank += 1
        if rank == nr:
            break
    return rank


def _bareiss_det(m):
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if m[r][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# -- generic elimination ----------------------------------------------------------

def rref(rows, dom):
    """Reduced row echelon form; returns (rref rows, pivot column list)."""
    m = [row[:] for row in rows]
    nr = len(m)
    nc = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if not dom.is_zero(m[i][c])), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = dom.inv(m[r][c])
        m[r] = [inv * x for x in m[r]]
        for i in range(nr):
            if i != r and not dom.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return m, pivots


def rank(rows, dom):
    if not rows or not rows[0]:
        return 0
    if dom.is_rational:
        return _bareiss_rank(_rows_to_int([[dom.coerce(c) for c in row] for row in rows]))
    return len(rref(rows, dom)[1])


def det(rows, dom):
    n = len(rows)
    if n == 0:
        return dom.one()
    if dom.is_rational:
        ints, scale = [], Fraction(1)
        for row in rows:
            den = 1
            for c in row:
                den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
            ints.append([int(Fraction(c) * den) for c in row])
            scale *= den
        return Fraction(_bareiss_det(ints)) / scale
    # ordinary elimination, tracking the pivot product
    m = [row[:] for row in rows]
    sign = 1
    acc = dom.one()
    for k in range(n):
        piv = next((r for r in range(k, n) if not dom.is_zero(m[r][k])), None)
        if piv is None:
            return dom.zero()
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        acc = acc * m[k][k]
        inv = dom.inv(m[k][k])
        for i in range(k + 1, n):
            if not dom.is_zero(m[i][k]):
                f = m[i][k] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[k])]
    return acc if sign == 1 else -acc


def solve(rows, rhs_cols, dom):
    """Solve A X = B for square invertible A; B given as list of columns."""
    n = len(rows)
    aug = [rows[i][:] + [col[i] for col in rhs_cols] for i in range(n)]
    red, pivots = rref(aug, dom)
    if pivots != list(range(n)):
        raise Singular("matrix is singular")
    return [[red[i][n + j] for i in range(n)] for j in range(len(rhs_cols))]


def inverse(rows, dom):
    n = len(rows)
    cols = solve(rows, [[dom.one() if i == j else dom.zero() for i in range(n)]
                        for j in range(n)], dom)
    return transpose(cols)


def kernel(rows, dom):
    """Basis of the right null space of A."""
    if not rows:
        return []
    nc = len(rows[0])
    red, pivots = rref(rows, dom)
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [dom.zero()] * nc
        v[f] = dom.one()
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(v)
    return basis


def row_space_basis(rows, dom):
    """Independent subset-span basis: the nonzero rows of the rref."""
    red, pivots = rref(rows, dom)
    return [red[i] for i in range(len(pivots))]


def in_span(vec, basis_rows, dom):
    if not basis_rows:
        return all(dom.is_zero(x) for x in vec)
    return rank(basis_rows + [vec], dom) == rank(basis_rows, dom)
