import math
from fractions import Fraction

import pytest

from anosovcert.exactnum import (CircleStatus, Poly, certify_abs_neq_one,
                                 embeddings, field_new, isolate_roots)
from anosovcert.exactnum.roots import Disc, disc_from_fraction

CUBIC = Poly.from_ints([1, -3, 0, 1])
QUINTIC = Poly.from_ints([1, 3, -3, -4, 1, 1])


def test_cubic_roots_match_cosine_closed_form():
    # roots are 2cos(2pi/9), 2cos(4pi/9), 2cos(8pi/9)
    expected = sorted(2 * math.cos(2 * math.pi * k / 9) for k in (1, 2, 4))
    discs = isolate_roots(CUBIC)
    assert len(discs) == 3
    got = sorted(float(d.center.real) for d in discs)
    for g, e in zip(got, expected):
        assert abs(g - e) < 1e-12  # oracle is double precision
    for d in discs:
        assert float(d.radius) < 1e-20
        assert abs(float(d.center.imag)) < 1e-20


def test_quintic_roots_match_cosine_closed_form():
    expected = sorted(2 * math.cos(2 * math.pi * k / 11) for k in range(1, 6))
    discs = isolate_roots(QUINTIC)
    got = sorted(float(d.center.real) for d in discs)
    for g, e in zip(got, expected):
        assert abs(g - e) < 1e-12


def test_discs_pairwise_disjoint():
    discs = isolate_roots(QUINTIC)
    for i in range(len(discs)):
        for j in range(i + 1, len(discs)):
            gap = abs(discs[i].center - discs[j].center)
            assert gap > discs[i].radius + discs[j].radius


def test_complex_roots_isolated():
    # t^4 + 1: all roots on the unit circle, complex
    discs = isolate_roots(Poly.from_ints([1, 0, 0, 0, 1]))
    assert len(discs) == 4
    for d in discs:
        assert abs(abs(d.center) - 1) < 1e-20
        assert abs(float(d.center.imag)) > 0.5


def test_disc_arithmetic_contains_exact_values():
    a = disc_from_fraction(Fraction(3, 7), 128)
    b = disc_from_fraction(Fraction(-5, 3), 128)
    assert (a + b).contains(Fraction(3, 7) + Fraction(-5, 3))
    assert (a * b).contains(Fraction(3, 7) * Fraction(-5, 3))


def test_embeddings_of_constant():
    F = field_new(CUBIC)
    discs = embeddings(F.from_int(2))
    assert len(discs) == 3
    for d in discs:
        assert d.contains(Fraction(2))


def test_embeddings_refinement_shrinks():
    F = field_new(CUBIC)
    a = F.gen() ** 2 - 2
    base = embeddings(a)
    fine = embeddings(a, prec=512)
    for b, f in zip(base, fine):
        assert f.radius <= b.radius


def test_certify_cubic_generator_off_circle():
    F = field_new(CUBIC)
    verdict = certify_abs_neq_one(F.gen())
    assert verdict.status is CircleStatus.OFF_CIRCLE
    # smallest distance to the circle among 1.532, 0.347, -1.879
    assert verdict.margin == pytest.approx(0.5320888862, rel=1e-6)


def test_certify_cyclotomic_on_circle():
    F = field_new(Poly.from_ints([1, 1, 1]))
    verdict = certify_abs_neq_one(F.gen())
    assert verdict.status is CircleStatus.ON_CIRCLE


def test_certify_constant_two():
    F = field_new(CUBIC)
    verdict = certify_abs_neq_one(F.from_int(2))
    assert verdict.status is CircleStatus.OFF_CIRCLE
    assert verdict.margin == pytest.approx(1.0)


def test_certify_rational_minus_one_on_circle():
    F = field_new(CUBIC)
    verdict = certify_abs_neq_one(F.from_int(-1))
    assert verdict.status is CircleStatus.ON_CIRCLE


def test_certify_rejects_zero():
    F = field_new(CUBIC)
    with pytest.raises(ValueError):
        certify_abs_neq_one(F.zero())


def test_unit_circle_distance_bounds():
    d = Disc(center=complex(1.5, 0), radius=0, prec=64)
    # exercised through abs_bounds
    lo, hi = disc_from_fraction(Fraction(3, 2), 128).abs_bounds()
    assert float(lo) <= 1.5 <= float(hi)
