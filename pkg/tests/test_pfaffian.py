import random
from fractions import Fraction

import pytest

from anosovcert import liealg as la
from anosovcert import pfaffian as pf
from anosovcert.catalog import catalog_algebra
from anosovcert.exactnum import RATIONAL
from anosovcert.exceptions import WrongType


def _matching_pfaffian(forms, point):
    """Independent oracle: sum over perfect matchings with explicit signs."""
    n = len(forms[0])
    M = [[sum(point[i] * forms[i][a][b] for i in range(len(forms)))
          for b in range(n)] for a in range(n)]

    def matchings(items):
        if not items:
            yield []
            return
        first = items[0]
        for t in range(1, len(items)):
            for rest in matchings(items[1:t] + items[t + 1:]):
                yield [(first, items[t])] + rest

    total = Fraction(0)
    for match in matchings(list(range(n))):
        perm = [v for pair in match for v in pair]
        inv = sum(1 for i in range(n) for j in range(i + 1, n)
                  if perm[i] > perm[j])
        term = Fraction((-1) ** inv)
        for (a, b) in match:
            term *= M[a][b]
        total += term
    return total


def test_skew_forms_U1():
    U1 = catalog_algebra("U", [1, 0, 0])
    S = pf.skew_forms(U1)
    assert S.count == 3 and S.size == 6
    from anosovcert.linalg import rank
    for J in S.forms:
        assert rank([list(r) for r in J], RATIONAL) == 2


def test_skew_forms_h3():
    S = pf.skew_forms(catalog_algebra("h3"))
    assert S.count == 1
    assert S.forms[0] == ((Fraction(0), Fraction(1)), (Fraction(-1), Fraction(0)))


def test_skew_forms_rejects_odd_first_layer():
    L = la.algebra_new(5, RATIONAL, [(0, 1, 3, 1), (1, 2, 4, 1)],
                       grading=(3, 2))
    with pytest.raises(WrongType):
        pf.skew_forms(L)


def test_skew_forms_rejects_three_step():
    with pytest.raises(WrongType):
        pf.skew_forms(catalog_algebra("l4"))


def test_pfaffian_U1_is_xyz():
    P = pf.pfaffian_form(pf.skew_forms(catalog_algebra("U", [1, 0, 0])))
    coeff = P.coefficient((1, 1, 1))
    assert coeff in (1, -1)
    assert P.poly.terms == {(1, 1, 1): coeff}


def test_pfaffian_single_2x2_is_x():
    P = pf.pfaffian_form(pf.skew_forms(catalog_algebra("h3")))
    assert P.poly.terms == {(1,): Fraction(1)}


def test_pfaffian_vs_matching_oracle():
    rng = random.Random(21)
    for _ in range(10):
        params = [rng.randrange(-3, 4) for _ in range(12)]
        L = catalog_algebra("g12", params)
        S = pf.skew_forms(L)
        P = pf.pfaffian_form(S)
        point = [Fraction(rng.randrange(-4, 5)) for _ in range(3)]
        assert P(point) == _matching_pfaffian(S.forms, point)


def _paper_coefficient(p):
    a, b, c, d, e, f, g, h, i, j, k, l = [Fraction(x) for x in p]
    return (a * f * k - a * e * l + b * d * i - b * g * f + c * j * e
            - c * d * h + l * h * g - i * j * k)


def test_twelve_parameter_coefficient_formula():
    rng = random.Random(0)
    for _ in range(120):
        params = [rng.randrange(-5, 6) for _ in range(12)]
        L = catalog_algebra("g12", params)
        P = pf.pfaffian_form(pf.skew_forms(L))
        assert P.coefficient((1, 1, 1)) == _paper_coefficient(params)
        assert set(P.poly.terms) <= {(1, 1, 1)}


def test_twelve_parameter_spec_instance_is_zero():
    # a=2 and the rest 1: 2-2+1-1+1-1+1-1 = 0
    params = [2] + [1] * 11
    L = catalog_algebra("g12", params)
    P = pf.pfaffian_form(pf.skew_forms(L))
    assert _paper_coefficient(params) == 0
    assert P.poly.is_zero


def test_det_consistency_ok():
    S = pf.skew_forms(catalog_algebra("U", [1, 0, 0]))
    P = pf.pfaffian_form(S)
    assert pf.det_consistency(S, P, 100) is None


def test_det_consistency_counterexample():
    S = pf.skew_forms(catalog_algebra("U", [1, 0, 0]))
    P = pf.pfaffian_form(S)
    corrupted = pf.PfaffianForm(P.variables,
                                P.poly + pf.MultiPoly(3, RATIONAL,
                                                      {(3, 0, 0): Fraction(1)}))
    # at (1,1,1): det = 1 but (1+1)^2 = 4
    bad = pf.det_consistency(S, corrupted, 100)
    assert bad is not None
    M = [[sum(bad[i] * S.forms[i][a][b] for i in range(3)) for b in range(6)]
         for a in range(6)]
    from anosovcert.linalg import det
    assert det(M, RATIONAL) != corrupted(bad) ** 2


def test_det_consistency_zero_forms():
    zero = tuple(tuple(tuple(Fraction(0) for _ in range(4)) for _ in range(4))
                 for _ in range(2))
    S = pf.SkewFormSet(zero, RATIONAL)
    P = pf.pfaffian_form(S)
    assert P.poly.is_zero
    assert pf.det_consistency(S, P, 10) is None


def test_scaling_linearity_property():
    rng = random.Random(33)
    for _ in range(5):
        params = [rng.randrange(-3, 4) for _ in range(12)]
        L = catalog_algebra("g12", params)
        S = pf.skew_forms(L)
        P = pf.pfaffian_form(S)
        c = Fraction(rng.randrange(1, 5))
        scale_index = rng.randrange(3)
        scaled_forms = []
        for idx, J in enumerate(S.forms):
            if idx == scale_index:
                scaled_forms.append(tuple(tuple(c * x for x in row) for row in J))
            else:
                scaled_forms.append(J)
        P2 = pf.pfaffian_form(pf.SkewFormSet(tuple(scaled_forms), RATIONAL))
        # substituting x_i -> c x_i in P must equal the scaled-set form
        for _ in range(5):
            v = [Fraction(rng.randrange(-3, 4)) for _ in range(3)]
            w = list(v)
            w[scale_index] *= c
            assert P(w) == P2(v)


def test_pfaffian_over_number_field():
    from anosovcert.catalog import paper_case
    case = paper_case("dim9_63_u2u3")
    S = pf.skew_forms(case.algebra)
    P = pf.pfaffian_form(S)
    xyz = P.coefficient((1, 1, 1))
    assert not case.field.is_zero(xyz)
    assert pf.det_consistency(S, P, 25) is None
