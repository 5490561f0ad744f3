"""Pfaffian forms of 2-step algebras of type (2k, m).

The form Pf(x_1 J_1 + ... + x_m J_m) is expanded symbolically in the
center variables via the first-row Pfaffian recursion, memoized on index
subsets.  A determinant oracle (Pf^2 = det pointwise) cross-checks the
expansion on random integer points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import linalg
from .exceptions import WrongType
from .liealg import LieAlgebra, layer_ranges


class MultiPoly:
    """Sparse multivariate polynomial: exponent tuple -> domain scalar."""

    def __init__(self, nvars, domain, terms=None):
        self.nvars = nvars
        self.domain = domain
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if not domain.is_zero(c):
                    self.terms[tuple(e)] = c

    @classmethod
    def zero(cls, nvars, domain):
        return cls(nvars, domain)

    @classmethod
    def constant(cls, nvars, domain, c):
        return cls(nvars, domain, {(0,) * nvars: domain.coerce(c)})

    @classmethod
    def variable(cls, nvars, domain, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, domain, {tuple(e): domain.one()})

    @property
    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, self.domain.zero()) + c
            if self.domain.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(self.nvars, self.domain, out)

    def __neg__(self):
        return MultiPoly(self.nvars, self.domain,
                         {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = self.domain.coerce(other)
            return MultiPoly(self.nvars, self.domain,
                             {e: v * c for e, v in self.terms.items()})
        out = {}
        z = self.domain.zero()
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, z) + c1 * c2
        return MultiPoly(self.nvars, self.domain, out)

    __rmul__ = __mul__

    def __call__(self, point):
        acc = self.domain.zero()
        for e, c in self.terms.items():
            term = c
            for i, exp in enumerate(e):
                for _ in range(exp):
                    term = term * point[i]
            acc = acc + term
        return acc

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), self.domain.zero())

    def total_degrees(self):
        return {sum(e) for e in self.terms}

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (self - other).is_zero

    def __repr__(self):
        if not self.terms:
            return "0"
        names = (["x", "y", "z"] if self.nvars <= 3
                 else [f"x{i + 1}" for i in range(self.nvars)])
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(names[i] if k == 1 else f"{names[i]}^{k}"
                            for i, k in enumerate(e) if k)
            bits.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(bits)


@dataclass(frozen=True)
class SkewFormSet:
    """m exact skew-symmetric 2k x 2k matrices over the coefficient domain."""

    forms: tuple  # tuple of matrices, each a tuple of row tuples
    domain: object

    def __post_init__(self):
        for J in self.forms:
            n = len(J)
            for a in range(n):
                for b in range(n):
                    if not self.domain.is_zero(J[a][b] + J[b][a]):
                        raise WrongType("form is not skew-symmetric")

    @property
    def size(self):
        return len(self.forms[0]) if self.forms else 0

    @property
    def count(self):
        return len(self.forms)


@dataclass(frozen=True)
class PfaffianForm:
    variables: tuple  # names
    poly: MultiPoly

    def __call__(self, point):
        return self.poly(point)

    def coefficient(self, exponents):
        return self.poly.coefficient(exponents)

    def __repr__(self):
        return repr(self.poly)


def skew_forms(L: LieAlgebra, grading=None) -> SkewFormSet:
    """Extract (J_i)_ab = coefficient of the i-th center vector in [e_a, e_b].

    The algebra must be 2-step of type (2k, m) in a layer-ordered basis.
    """
    if grading is None:
        grading = L.grading
    if grading is None:
        grading = layer_ranges(L)[0]
    if len(grading) != 2:
        raise WrongType(f"type {grading} is not 2-step")
    n1, m = grading
    if n1 % 2 != 0:
        raise WrongType(f"first layer has odd dimension {n1}: Pfaffian undefined")
    dom = L.domain
    forms = []
    for i in range(m):
        center_index = n1 + i
        J = [[dom.zero() for _ in range(n1)] for _ in range(n1)]
        for a in range(n1):
            for b in range(a + 1, n1):
                c = L.bracket_basis(a, b)[center_index]
                J[a][b] = c
                J[b][a] = -c
        forms.append(tuple(tuple(row) for row in J))
    return SkewFormSet(tuple(forms), dom)


def pfaffian_form(S: SkewFormSet) -> PfaffianForm:
    """Pf(x_1 J_1 + ... + x_m J_m) as a degree-k polynomial.

    First-row expansion Pf(J) = sum_j (-1)^j J_1j Pf(J minus rows/cols 1, j),
    memoized on the index subset.
    """
    m = S.count
    dom = S.domain
    n = S.size
    entry_cache = {}

    def entry(a, b):
        key = (a, b)
        if key not in entry_cache:
            terms = {}
            for i in range(m):
                c = S.forms[i][a][b]
                if not dom.is_zero(c):
                    e = [0] * m
                    e[i] = 1
                    terms[tuple(e)] = c
            entry_cache[key] = MultiPoly(m, dom, terms)
        return entry_cache[key]

    memo = {}

    def pf(indices):
        if not indices:
            return MultiPoly.constant(m, dom, 1)
        if indices in memo:
            return memo[indices]
        acc = MultiPoly.zero(m, dom)
        i0 = indices[0]
        rest = indices[1:]
        for p, j in enumerate(rest):
            e = entry(i0, j)
            if e.is_zero:
                continue
            sub = tuple(x for x in rest if x != j)
            term = e * pf(sub)
            acc = acc + term if p % 2 == 0 else acc - term
        memo[indices] = acc
        return acc

    poly = pf(tuple(range(n)))
    k = n // 2
    assert poly.total_degrees() <= {k}, "Pfaffian degree invariant broken"
    names = tuple(["x", "y", "z"][:m] if m <= 3
                  else [f"x{i + 1}" for i in range(m)])
    return PfaffianForm(names, poly)


def det_consistency(S: SkewFormSet, P: PfaffianForm, samples: int, seed=0,
                    spread=5):
    """Check det(sum v_i J_i) = P(v)^2 on random small-integer points.

    Returns None when every sample agrees, else the first counterexample
    point as a tuple.
    """
    dom = S.domain
    rng = random.Random(seed)
    n = S.size
    for _ in range(samples):
        v = [dom.from_int(rng.randrange(-spread, spread + 1))
             for _ in range(S.count)]
        M = [[dom.zero() for _ in range(n)] for _ in range(n)]
        for i in range(S.count):
            for a in range(n):
                for b in range(n):
                    M[a][b] = M[a][b] + v[i] * S.forms[i][a][b]
        lhs = linalg.det(M, dom)
        pv = P(v)
        if not dom.is_zero(lhs - pv * pv):
            return tuple(v)
    return None
