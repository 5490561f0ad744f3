"""Exact univariate polynomials over the rationals.

Coefficients are stored lowest degree first as `Fraction`s with no trailing
zeros; the zero polynomial has an empty coefficient tuple.  Everything here
is immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..exceptions import ZeroPolynomial


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not a rational scalar: {x!r}")


@dataclass(frozen=True)
class Poly:
    coeffs: tuple  # Fractions, lowest degree first, no trailing zeros

    def __init__(self, coeffs):
        cs = [_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_ints(cls, coeffs):
        return cls([Fraction(c) for c in coeffs])

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    # -- queries ------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def int_coeffs(self):
        """Coefficients as plain ints; requires integrality."""
        if not self.is_integral:
            raise ValueError(f"{self} is not an integer polynomial")
        return [int(c) for c in self.coeffs]

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        raise TypeError(f"cannot combine Poly with {other!r}")

    def __divmod__(self, other):
        """Exact euclidean division over the rationals."""
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        lead = other.leading
        for i in range(len(rem) - 1, d - 1, -1):
            if rem[i] == 0:
                continue
            q = rem[i] / lead
            quo[i - d] = q
            for j, b in enumerate(other.coeffs):
                rem[i - d + j] -= q * b
        return Poly(quo), Poly(rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def divides(self, other) -> bool:
        return (other % self).is_zero

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lead = self.leading
        return self if lead == 1 else Poly([c / lead for c in self.coeffs])

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(x)), by Horner on polynomial values."""
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly((c,))
        return acc

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd over the rationals."""
        a, b = self, self._coerce(other)
        while not b.is_zero:
            a, b = b, a % b
        return a.monic() if not a.is_zero else a

    def __call__(self, x):
        """Horner evaluation; x may be any value with +, * and int coercion."""
        if not self.coeffs:
            return 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return acc

    # -- structure tests -------------------------------------------------------

    def reversed_poly(self) -> "Poly":
        """x^deg * p(1/x)."""
        return Poly(tuple(reversed(self.coeffs)))

    def is_self_reciprocal(self) -> bool:
        """Palindromic or anti-palindromic coefficient list."""
        if self.is_zero:
            return False
        rev = tuple(reversed(self.coeffs))
        return rev == self.coeffs or tuple(-c for c in rev) == self.coeffs

    def squarefree_part(self) -> "Poly":
        g = self.gcd(self.derivative())
        return (self // g).monic() if g.degree > 0 else self.monic()

    def primitive_integer(self) -> "Poly":
        """Scale by a positive rational so the coefficients are coprime integers."""
        if self.is_zero:
            return self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        return Poly.from_ints([v // g for v in ints])

    def __repr__(self):
        if self.is_zero:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*t" if c != 1 else "t")
            else:
                terms.append(f"{c}*t^{i}" if c != 1 else f"t^{i}")
        return "Poly(" + " + ".join(terms).replace("+ -", "- ") + ")"


# -- arithmetic mod p ---------------------------------------------------------
#
# Dense int-list representation, lowest degree first, coefficients in [0, p).
# Only what the irreducibility witness search needs.

def _gf_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c == 0:
            continue
        q = c * inv_lead % p
        for j in range(dm + 1):
            a[i - dm + j] = (a[i - dm + j] - q * m[j]) % p
    return _gf_trim([c % p for c in a[:dm]])


def _gf_mul(a, b, p, m=None):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    out = _gf_trim(out)
    return _gf_mod(out, m, p) if m is not None else out


def _gf_powmod(a, e, m, p):
    result = [1]
    base = _gf_mod(a, m, p)
    while e:
        if e & 1:
            result = _gf_mul(result, base, p, m)
        base = _gf_mul(base, base, p, m)
        e >>= 1
    return result


def _gf_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        # a mod b
        inv_lead = pow(b[-1], -1, p)
        da, db = len(a) - 1, len(b) - 1
        r = list(a)
        for i in range(da, db - 1, -1):
            c = r[i] % p
            if c == 0:
                continue
            q = c * inv_lead % p
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - q * b[j]) % p
        a, b = b, _gf_trim([c % p for c in r[:db]])
    return a


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def irreducible_mod_p(poly: Poly, p: int) -> bool:
    """Rabin's irreducibility test for poly reduced mod p.

    Returns False when the reduction drops degree (p divides the leading
    coefficient), so a True answer always certifies irreducibility over Q
    for a monic integer polynomial.
    """
    coeffs = [int(c) % p for c in poly.int_coeffs()]
    m = _gf_trim(list(coeffs))
    n = poly.degree
    if len(m) - 1 != n or n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    for q in _prime_factors(n):
        h = _gf_powmod(x, p ** (n // q), m, p)
        # gcd(x^(p^(n/q)) - x, m) must be 1
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _gf_gcd(m, _gf_trim(diff), p)
        if len(g) - 1 != 0:
            return False
    h = _gf_powmod(x, p ** n, m, p)
    diff = list(h) + [0] * max(0, 2 - len(h))
    diff[1] = (diff[1] - 1) % p
    return not _gf_trim(diff)


PRIMES_TO_100 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def find_irreducibility_witness(poly: Poly, bound: int = 100):
    """First prime p <= bound with poly irreducible mod p, else None."""
    for p in PRIMES_TO_100:
        if p > bound:
            break
        if irreducible_mod_p(poly, p):
            return p
    return None


# -- algebraic unit certificate ------------------------------------------------

@dataclass(frozen=True)
class UnitCertificate:
    min_poly: Poly
    is_unit: bool
    low_degree: bool  # degree-1 polynomials are flagged, not rejected


def poly_unit_check(p: Poly) -> UnitCertificate:
    """Decide whether the roots of p are algebraic units.

    True exactly when p is monic with integer coefficients and constant
    term +-1.  Degree-1 input is reported with the low_degree flag since a
    rational eigenvalue can never appear in a hyperbolic unimodular block.
    """
    if p.is_zero:
        raise ZeroPolynomial("unit check on the zero polynomial")
    ok = p.is_monic and p.is_integral and p.constant in (1, -1)
    return UnitCertificate(min_poly=p, is_unit=ok, low_degree=p.degree == 1)
