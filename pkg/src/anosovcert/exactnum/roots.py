"""Certified complex root isolation.

Approximate roots come from Aberth-Ehrlich iteration at a given working
precision; each approximation z is then wrapped in a disc of certified
radius deg * |p(z)| / |p'(z)| (an inclusion bound), and the precision is
doubled until the discs are pairwise disjoint, which pins exactly one root
per disc.  Disc arithmetic carries conservative slop so that every bound
survives mpmath rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpc, mpf

from ..exceptions import PrecisionExhausted
from .polynomials import Poly

DEFAULT_PREC = 128
DEFAULT_CAP = 1024


def _slop(prec):
    return mpf(2) ** (10 - prec)


def _to_mpc(value):
    if isinstance(value, Fraction):
        return mpc(mpf(value.numerator) / mpf(value.denominator))
    return mpc(value)


@dataclass(frozen=True)
class Disc:
    """Closed complex disc certified to contain one exact value."""

    center: mpc
    radius: mpf
    prec: int

    def __add__(self, other):
        p = min(self.prec, other.prec)
        with mp.workprec(p + 20):
            c = self.center + other.center
            r = self.radius + other.radius + (abs(c) + 1) * _slop(p)
        return Disc(c, r, p)

    def __mul__(self, other):
        p = min(self.prec, other.prec)
        with mp.workprec(p + 20):
            c = self.center * other.center
            a1, a2 = abs(self.center), abs(other.center)
            r = (a1 * other.radius + a2 * self.radius
                 + self.radius * other.radius + (abs(c) + 1) * _slop(p))
        return Disc(c, r, p)

    def __neg__(self):
        return Disc(-self.center, self.radius, self.prec)

    def __sub__(self, other):
        return self + (-other)

    def abs_bounds(self):
        """Certified (lower, upper) bounds for |value|."""
        with mp.workprec(self.prec + 20):
            a = abs(self.center)
            pad = self.radius + (a + 1) * _slop(self.prec)
            lo = a - pad
            if lo < 0:
                lo = mpf(0)
            hi = a + pad
        return lo, hi

    def circle_distance(self):
        """Certified lower bound for the distance of the value to |z| = 1.

        Zero means the disc may touch or straddle the unit circle.
        """
        lo, hi = self.abs_bounds()
        if lo > 1:
            return lo - 1
        if hi < 1:
            return 1 - hi
        return mpf(0)

    def contains(self, value):
        """Whether an exact rational/complex-rational value lies in the disc.

        Conservative: may return False for points extremely close to the
        boundary, never returns True for points outside.
        """
        with mp.workprec(self.prec + 20):
            d = abs(self.center - _to_mpc(value))
            return d <= self.radius

    def __repr__(self):
        return f"Disc({self.center}, r={mp.nstr(self.radius, 3)})"


def disc_from_fraction(q: Fraction, prec: int) -> Disc:
    with mp.workprec(prec + 20):
        c = mpc(mpf(q.numerator) / mpf(q.denominator))
        r = (abs(c) + 1) * _slop(prec)
    return Disc(c, r, prec)


def eval_poly_disc(coeffs, disc: Disc) -> Disc:
    """Horner evaluation of a rational-coefficient polynomial on a disc."""
    prec = disc.prec
    acc = disc_from_fraction(Fraction(0), prec)
    for c in reversed(list(coeffs)):
        acc = acc * disc + disc_from_fraction(Fraction(c), prec)
    return acc


# -- Aberth-Ehrlich ----------------------------------------------------------------

def _horner_pair(coeffs, z):
    """(p(z), p'(z)) by simultaneous Horner."""
    p = mpc(0)
    dp = mpc(0)
    for c in reversed(coeffs):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _aberth(coeffs_frac, prec, max_iter=400):
    """Approximate all roots simultaneously;  coeffs lowest degree first."""
    with mp.workprec(prec):
        coeffs = [mpc(mpf(c.numerator)) / mpf(c.denominator) for c in coeffs_frac]
        d = len(coeffs) - 1
        lead = coeffs[-1]
        bound = 1 + max(abs(c / lead) for c in coeffs[:-1]) if d > 0 else mpf(1)
        # spread initial guesses on a circle, angle offset breaks symmetry
        roots = [bound * mp.exp(mpc(0, 2 * mp.pi * (k + mpf(1) / 3) / d + mpf(1) / 7))
                 for k in range(d)]
        tol = mpf(2) ** (16 - prec)
        for _ in range(max_iter):
            worst = mpf(0)
            new = list(roots)
            for i in range(d):
                z = roots[i]
                p, dp = _horner_pair(coeffs, z)
                if dp == 0:
                    new[i] = z + tol * (1 + abs(z))
                    worst = mpf(1)
                    continue
                w = p / dp
                s = mpc(0)
                for j in range(d):
                    if j != i:
                        dz = z - roots[j]
                        if dz == 0:
                            dz = tol * (1 + abs(z))
                        s += 1 / dz
                denom = 1 - w * s
                corr = w if denom == 0 else w / denom
                new[i] = z - corr
                rel = abs(corr) / (1 + abs(z))
                if rel > worst:
                    worst = rel
            roots = new
            if worst < tol:
                break
        return roots


def _certified_discs(poly: Poly, prec):
    """One inclusion disc per approximate root, or None if radii blow up."""
    d = poly.degree
    roots = _aberth(list(poly.coeffs), prec)
    discs = []
    with mp.workprec(prec + 20):
        for z in roots:
            pz = eval_poly_disc(poly.coeffs, Disc(mpc(z), mpf(0), prec))
            dpz = eval_poly_disc(poly.derivative().coeffs, Disc(mpc(z), mpf(0), prec))
            up = pz.abs_bounds()[1]
            low = dpz.abs_bounds()[0]
            if low <= 0:
                return None
            radius = mpf(d) * up / low
            radius += (abs(z) + 1) * _slop(prec)
            discs.append(Disc(mpc(z), radius, prec))
    return discs


def _pairwise_disjoint(discs):
    n = len(discs)
    for i in range(n):
        for j in range(i + 1, n):
            with mp.workprec(discs[i].prec + 20):
                gap = abs(discs[i].center - discs[j].center)
                pad = (abs(gap) + 1) * _slop(discs[i].prec)
                if gap - pad <= discs[i].radius + discs[j].radius:
                    return False
    return True


_ISOLATION_CACHE = {}


def isolate_roots(poly: Poly, prec=DEFAULT_PREC, cap=DEFAULT_CAP):
    """Pairwise disjoint certified root discs of a squarefree polynomial.

    Returns the discs in a canonical order (by real part, then imaginary
    part), so repeated isolation at higher precision keeps the embedding
    order stable.
    """
    key = (poly.coeffs, prec)
    cached = _ISOLATION_CACHE.get(key)
    if cached is not None:
        return cached
    p = prec
    while p <= cap:
        discs = _certified_discs(poly, p)
        if discs is not None and _pairwise_disjoint(discs):
            discs.sort(key=lambda d: (float(d.center.real), float(d.center.imag)))
            result = tuple(discs)
            _ISOLATION_CACHE[key] = result
            return result
        p *= 2
    raise PrecisionExhausted(
        f"could not isolate roots of {poly} within {cap} bits")
