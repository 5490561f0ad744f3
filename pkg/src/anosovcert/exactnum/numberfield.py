"""Number fields Q[t]/(m(t)) with exact arithmetic and certified embeddings.

A NumberField wraps a monic integer modulus together with an
irreducibility witness (a prime p with m irreducible mod p) and certified
root discs, one per complex embedding.  Field elements are coordinate
vectors over Q in the power basis 1, t, ..., t^(d-1).  Both the field and
its elements double as the coefficient "domain" objects used by the Lie
algebra and certification layers.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf

from .. import linalg
from ..exceptions import (DivisionByZero, FieldMismatch, NotAField, NotMonic,
                          PrecisionExhausted, Reducible, UnverifiedField,
                          ZeroPolynomial)
from .polynomials import Poly, find_irreducibility_witness
from .roots import DEFAULT_CAP, DEFAULT_PREC, Disc, eval_poly_disc, isolate_roots


class RationalDomain:
    """The rationals as a coefficient domain."""

    is_rational = True
    degree = 1

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, q):
        return Fraction(q)

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        if isinstance(x, FieldElement) and x.is_rational:
            return x.as_fraction()
        raise TypeError(f"not a rational scalar: {x!r}")

    def is_zero(self, x):
        return x == 0

    def inv(self, x):
        if x == 0:
            raise DivisionByZero("1/0 over Q")
        return 1 / Fraction(x)

    def __repr__(self):
        return "RATIONAL"

    def __eq__(self, other):
        return isinstance(other, RationalDomain)

    def __hash__(self):
        return hash("RATIONAL")


RATIONAL = RationalDomain()


class NumberField:
    """Q[t]/(m(t)) for a monic integer polynomial m, with certified embeddings."""

    is_rational = False

    def __init__(self, modulus: Poly, witness, root_discs, prec):
        self.modulus = modulus
        self.degree = modulus.degree
        self.witness = witness  # prime p, or None = UNVERIFIED
        self.root_discs = tuple(root_discs)
        self.prec = prec
        # reduction table: t^k for k in [d, 2d-2]
        d = self.degree
        table = []
        prev = [Fraction(0)] * d
        # t^d = -(m - t^d)
        for i in range(d):
            prev[i] = -modulus.coeff(i)
        table.append(tuple(prev))
        for _ in range(d - 2):
            shifted = [Fraction(0)] + list(prev[:-1])
            lead = prev[-1]
            if lead:
                for i in range(d):
                    shifted[i] += lead * table[0][i]
            prev = shifted
            table.append(tuple(prev))
        self._power_table = table

    @property
    def verified(self):
        return self.witness is not None

    # -- domain protocol ------------------------------------------------------

    def zero(self):
        return FieldElement(self, (Fraction(0),) * self.degree)

    def one(self):
        return self.from_fraction(1)

    def from_int(self, n):
        return self.from_fraction(Fraction(n))

    def from_fraction(self, q):
        coords = [Fraction(q)] + [Fraction(0)] * (self.degree - 1)
        return FieldElement(self, tuple(coords))

    def gen(self):
        """The class of t."""
        coords = [Fraction(0)] * self.degree
        if self.degree == 1:
            return self.from_fraction(-self.modulus.coeff(0))
        coords[1] = Fraction(1)
        return FieldElement(self, tuple(coords))

    def element(self, coords):
        cs = [Fraction(c) for c in coords]
        if len(cs) > self.degree:
            cs = self._reduce(cs)
        cs = cs + [Fraction(0)] * (self.degree - len(cs))
        return FieldElement(self, tuple(cs))

    def coerce(self, x):
        if isinstance(x, FieldElement):
            if x.field.modulus != self.modulus:
                raise FieldMismatch(f"element of {x.field} used in {self}")
            return FieldElement(self, x.coords)
        if isinstance(x, (int, Fraction, str)):
            return self.from_fraction(Fraction(x))
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def is_zero(self, x):
        return all(c == 0 for c in self.coerce(x).coords)

    def inv(self, x):
        return elem_inv(self.coerce(x))

    # -- internals ----------------------------------------------------------------

    def _reduce(self, coeffs):
        """Reduce a coefficient list mod the modulus; returns length-d list."""
        d = self.degree
        out = list(coeffs[:d]) + [Fraction(0)] * max(0, d - len(coeffs))
        for k in range(d, len(coeffs)):
            c = coeffs[k]
            if c:
                row = self._power_table[k - d]
                for i in range(d):
                    out[i] += c * row[i]
        return out

    def mul_coords(self, a, b):
        d = self.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return tuple(self._reduce(prod))

    def refined(self, prec):
        """A copy of this field with root discs at (at least) the given precision."""
        if prec <= self.prec:
            return self
        discs = isolate_roots(self.modulus, prec, max(prec, DEFAULT_CAP))
        return NumberField(self.modulus, self.witness, discs, prec)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        tag = f"witness p={self.witness}" if self.verified else "UNVERIFIED"
        return f"NumberField({self.modulus}, {tag})"


@dataclass(frozen=True)
class FieldElement:
    field: NumberField
    coords: tuple  # length = field.degree, Fractions

    def _same(self, other):
        if isinstance(other, FieldElement):
            if other.field.modulus != self.field.modulus:
                raise FieldMismatch("elements live in different fields")
            return other
        return self.field.coerce(other)

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        o = self._same(other)
        return FieldElement(self.field,
                            tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._same(other)
        return FieldElement(self.field,
                            tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return self._same(other) - self

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        o = self._same(other)
        return FieldElement(self.field, self.field.mul_coords(self.coords, o.coords))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * elem_inv(self._same(other))

    def __rtruediv__(self, other):
        return self._same(other) * elem_inv(self)

    def __pow__(self, e):
        if e < 0:
            return elem_inv(self) ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        try:
            o = self._same(other)
        except (FieldMismatch, TypeError):
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        return hash((self.field.modulus, self.coords))

    # -- queries ----------------------------------------------------------------

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coords)

    @property
    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    def as_fraction(self):
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    @property
    def is_integer(self):
        return self.is_rational and self.coords[0].denominator == 1

    def as_poly(self):
        return Poly(self.coords)

    def __repr__(self):
        return f"FieldElement({self.as_poly()!r} mod {self.field.modulus!r})"


# -- construction ------------------------------------------------------------------


def _subset_factor(m: Poly, discs):
    """Exact nontrivial monic integer factor found from root subsets, or None.

    Candidate factors are products of isolated roots rounded to integer
    coefficients; only exact trial division promotes a candidate.
    """
    n = m.degree
    prec = discs[0].prec
    for size in range(1, n // 2 + 1):
        for subset in itertools.combinations(range(n), size):
            with mp.workprec(prec + 20):
                cs = [mp.mpc(1)]  # lowest degree first
                for i in subset:
                    z = discs[i].center
                    new = [mp.mpc(0)] * (len(cs) + 1)
                    for j, c in enumerate(cs):
                        new[j + 1] += c
                        new[j] -= z * c
                    cs = new
                ints = []
                good = True
                for c in cs:
                    r = mp.nint(c.real)
                    if abs(c.real - r) > mpf("0.25") or abs(c.imag) > mpf("0.25"):
                        good = False
                        break
                    ints.append(int(r))
            if not good:
                continue
            cand = Poly.from_ints(ints)
            if cand.degree == size and cand.divides(m):
                return cand
    return None


def field_new(m: Poly, prec=DEFAULT_PREC, cap=DEFAULT_CAP) -> NumberField:
    """Build Q[t]/(m) after screening m for exact factors.

    The irreducibility witness is the first prime p <= 100 with m
    irreducible mod p; if none exists the field is marked UNVERIFIED and
    that flag propagates into downstream certificates.
    """
    if m.is_zero:
        raise ZeroPolynomial("zero modulus")
    if not m.is_monic or not m.is_integral:
        raise NotMonic(f"modulus must be a monic integer polynomial, got {m}")
    if m.degree < 1:
        raise NotMonic("modulus must have degree >= 1")

    g = m.gcd(m.derivative())
    if g.degree > 0:
        raise Reducible(g.primitive_integer(), f"{m} is not squarefree")
    if m.degree > 1:
        # rational roots: integer divisors of the constant term
        c0 = int(m.constant)
        if c0 == 0:
            raise Reducible(Poly.from_ints([0, 1]), f"{m} has root 0")
        for r in _divisors_signed(c0):
            if m(Fraction(r)) == 0:
                raise Reducible(Poly.from_ints([-r, 1]), f"{m} has root {r}")

    discs = isolate_roots(m, prec, cap)
    if m.degree > 2:
        factor = _subset_factor(m, discs)
        if factor is not None and 0 < factor.degree < m.degree:
            raise Reducible(factor)
    witness = find_irreducibility_witness(m)
    return NumberField(m, witness, discs, discs[0].prec)


def _divisors_signed(n):
    n = abs(n)
    out = []
    for d in range(1, n + 1):
        if d * d > n:
            break
        if n % d == 0:
            out.extend([d, -d, n // d, -(n // d)])
    return sorted(set(out), key=abs)


# -- element-level operations ----------------------------------------------------


class Op(enum.Enum):
    ADD = "ADD"
    SUB = "SUB"
    MUL = "MUL"


def elem_arith(op: Op, a: FieldElement, b: FieldElement) -> FieldElement:
    """Functional form of +, -, * for two elements of the same field."""
    if op is Op.ADD:
        return a + b
    if op is Op.SUB:
        return a - b
    if op is Op.MUL:
        return a * b
    raise ValueError(f"unknown op {op}")


def elem_inv(a: FieldElement) -> FieldElement:
    """Exact inverse by the extended Euclidean algorithm."""
    if a.is_zero:
        raise DivisionByZero("inverse of zero")
    if not a.field.verified:
        raise UnverifiedField(
            f"cannot invert in {a.field}: irreducibility unverified")
    m = a.field.modulus
    r0, r1 = m, a.as_poly()
    s0, s1 = Poly.zero(), Poly.one()
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    # r0 = gcd = s_prev * a + t * m; irreducible modulus forces a unit gcd
    if r0.degree != 0:
        raise DivisionByZero(f"{a} is a zero divisor (modulus not irreducible?)")
    inv_poly = s0 * (1 / r0.constant)
    return a.field.element(list(inv_poly.coeffs))


def minimal_poly(a: FieldElement) -> Poly:
    """Least-degree monic rational polynomial annihilating a.

    Found as the first linear dependence among 1, a, a^2, ... via exact
    elimination; the degree always divides the field degree.
    """
    dom = RATIONAL
    d = a.field.degree
    powers = [a.field.one().coords]
    current = a.field.one()
    for k in range(1, d + 1):
        current = current * a
        cols = [list(p) for p in powers]
        sol = lin_solve_columns(cols, list(current.coords), dom)
        if sol is not None:
            coeffs = [-c for c in sol] + [Fraction(1)]
            return Poly(coeffs)
        powers.append(current.coords)
    raise AssertionError("no dependence up to the field degree")


def lin_solve_columns(cols, target, dom):
    """Solve sum_j x_j cols[j] = target; None when inconsistent."""
    if not cols:
        return None if any(not dom.is_zero(t) for t in target) else []
    n = len(cols[0])
    rows = [[cols[j][i] for j in range(len(cols))] + [target[i]] for i in range(n)]
    red, pivots = linalg.rref(rows, dom)
    ncols = len(cols)
    if ncols in pivots:
        return None
    sol = [dom.zero()] * ncols
    for r, c in enumerate(pivots):
        sol[c] = red[r][ncols]
    return sol


# -- embeddings and the unit-circle certificate -----------------------------------


def embeddings(a: FieldElement, prec=None):
    """One certified disc per complex embedding of a.

    Passing a larger prec refines; radii never grow because the refined
    disc is only adopted when smaller.
    """
    field = a.field
    if prec is None or prec <= field.prec:
        discs = field.root_discs
    else:
        discs = isolate_roots(field.modulus, prec, max(prec, DEFAULT_CAP))
    images = [eval_poly_disc(a.coords, d) for d in discs]
    if prec is not None and prec > field.prec:
        base = [eval_poly_disc(a.coords, d) for d in field.root_discs]
        images = [new if new.radius <= old.radius else old
                  for new, old in zip(images, base)]
    return images


class CircleStatus(enum.Enum):
    OFF_CIRCLE = "OFF_CIRCLE"
    ON_CIRCLE = "ON_CIRCLE"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class CircleVerdict:
    status: CircleStatus
    margin: float | None = None  # certified lower bound when OFF_CIRCLE

    def __eq__(self, other):
        if isinstance(other, CircleStatus):
            return self.status is other
        if isinstance(other, CircleVerdict):
            return self.status is other.status and self.margin == other.margin
        return NotImplemented


def certify_abs_neq_one(a: FieldElement, cap=None) -> CircleVerdict:
    """Tri-state test of |sigma(a)| != 1 over every embedding sigma.

    OFF_CIRCLE comes with a certified positive distance to the unit
    circle.  ON_CIRCLE is only reported through the exact self-reciprocal
    criterion; when neither side can be certified within the precision
    cap the verdict is INCONCLUSIVE.
    """
    if a.is_zero:
        raise ValueError("certify_abs_neq_one needs a nonzero element")
    if cap is None:
        cap = DEFAULT_CAP
    if a.is_rational:
        q = a.as_fraction()
        if q in (1, -1):
            return CircleVerdict(CircleStatus.ON_CIRCLE)
        gap = abs(q) - 1
        return CircleVerdict(CircleStatus.OFF_CIRCLE, margin=abs(float(Fraction(gap))))

    prec = a.field.prec
    last = None
    while True:
        images = embeddings(a, prec)
        dists = [d.circle_distance() for d in images]
        if all(x > 0 for x in dists):
            margin = min(dists)
            return CircleVerdict(CircleStatus.OFF_CIRCLE,
                                 margin=float(margin * (1 - mpf(2) ** -40)))
        last = images
        if prec >= cap:
            break
        prec = min(2 * prec, cap)

    mp_a = minimal_poly(a)
    tol = mpf(2) ** -64
    near = all(d.circle_distance() <= tol for d in last)
    if mp_a.is_self_reciprocal() and mp_a.constant in (1, -1) and near:
        return CircleVerdict(CircleStatus.ON_CIRCLE)
    return CircleVerdict(CircleStatus.INCONCLUSIVE)


# -- field homomorphisms and composites --------------------------------------------


@dataclass(frozen=True)
class FieldHom:
    """Ring homomorphism between fields, determined by the generator image."""

    source: NumberField
    target: NumberField
    gen_image: FieldElement

    def __call__(self, a) -> FieldElement:
        a = self.source.coerce(a)
        acc = self.target.zero()
        for c in reversed(a.coords):
            acc = acc * self.gen_image + self.target.from_fraction(c)
        return acc


def identity_hom(field: NumberField) -> FieldHom:
    return FieldHom(field, field, field.gen())


def galois_image(a: FieldElement, gen_image: FieldElement) -> FieldElement:
    """Apply the field map t -> gen_image to a (same ambient field)."""
    acc = a.field.zero()
    for c in reversed(a.coords):
        acc = acc * gen_image + a.field.from_fraction(c)
    return acc


def conjugation_order(field: NumberField, gen_image: FieldElement) -> int:
    """Order of the automorphism t -> gen_image; raises if it is not one."""
    from ..exceptions import ConjugateMismatch

    sigma_t = field.coerce(gen_image)
    if minimal_poly(sigma_t) != field.modulus:
        raise ConjugateMismatch(
            f"{gen_image} is not a root of {field.modulus}: not an automorphism")
    t = field.gen()
    current = sigma_t
    order = 1
    while current != t:
        current = galois_image(current, sigma_t)
        order += 1
        if order > field.degree:
            raise ConjugateMismatch(
                "conjugation does not close within the field degree")
    return order


def field_compose(F: NumberField, G: NumberField, max_shift=32):
    """Smallest common field of F and G with embedding maps.

    Works in the tensor ring Q[y,z]/(m_F(y), m_G(z)) and hunts for a
    primitive element y + k z; the first shift k whose minimal polynomial
    has full degree and certifies irreducible wins.  Equal moduli
    short-circuit to F itself with identity maps.
    """
    if not (F.verified and G.verified):
        raise UnverifiedField("field_compose requires verified irreducibility")
    if F.modulus == G.modulus:
        return F, identity_hom(F), identity_hom(F)
    if F.degree == 1:
        hom = FieldHom(F, G, G.from_fraction(-F.modulus.coeff(0)))
        return G, hom, identity_hom(G)
    if G.degree == 1:
        hom = FieldHom(G, F, F.from_fraction(-G.modulus.coeff(0)))
        return F, identity_hom(F), hom

    dF, dG = F.degree, G.degree
    D = dF * dG
    dom = RATIONAL

    def unit(i, j):
        v = [Fraction(0)] * D
        v[i * dG + j] = Fraction(1)
        return v

    # multiplication-by-y and by-z matrices on the tensor basis y^i z^j
    My = [[Fraction(0)] * D for _ in range(D)]
    Mz = [[Fraction(0)] * D for _ in range(D)]
    for i in range(dF):
        for j in range(dG):
            col = i * dG + j
            if i + 1 < dF:
                My[(i + 1) * dG + j][col] = Fraction(1)
            else:
                red = F._power_table[0]
                for i2 in range(dF):
                    My[i2 * dG + j][col] = red[i2]
            if j + 1 < dG:
                Mz[i * dG + (j + 1)][col] = Fraction(1)
            else:
                red = G._power_table[0]
                for j2 in range(dG):
                    Mz[i * dG + j2][col] = red[j2]

    fallback = None
    for k in range(1, max_shift + 1):
        Mg = [[My[r][c] + k * Mz[r][c] for c in range(D)] for r in range(D)]
        powers = [unit(0, 0)]
        minpoly = None
        for _ in range(1, D + 1):
            nxt = linalg.mat_vec(Mg, powers[-1])
            sol = lin_solve_columns([list(p) for p in powers], nxt, dom)
            if sol is not None:
                minpoly = Poly([-c for c in sol] + [Fraction(1)])
                break
            powers.append(nxt)
        if minpoly is None or minpoly.degree != D:
            continue
        try:
            H = field_new(minpoly)
        except Reducible:
            raise NotAField(
                f"tensor ring of {F.modulus} and {G.modulus} has zero divisors")
        y_coords = lin_solve_columns([list(p) for p in powers], unit(1, 0), dom)
        z_coords = lin_solve_columns([list(p) for p in powers], unit(0, 1), dom)
        hom_F = FieldHom(F, H, H.element(y_coords))
        hom_G = FieldHom(G, H, H.element(z_coords))
        # sanity: generator images must satisfy the source moduli
        assert F.modulus(hom_F.gen_image).is_zero
        assert G.modulus(hom_G.gen_image).is_zero
        if H.verified:
            return H, hom_F, hom_G
        if fallback is None:
            fallback = (H, hom_F, hom_G)
    if fallback is not None:
        return fallback
    raise NotAField(
        f"no primitive element with shift <= {max_shift}: "
        f"{F.modulus} and {G.modulus} share subfield content")
