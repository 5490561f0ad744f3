import random
from fractions import Fraction

import pytest

from anosovcert import anosov as an
from anosovcert import liealg as la
from anosovcert.catalog import (catalog_algebra, cubic_field, cubic_lambdas,
                                paper_case, quadratic_field)
from anosovcert.exactnum import RATIONAL, Poly, field_new
from anosovcert.exceptions import ConjugateMismatch, GroupingInconsistent, WrongType


def n333_data():
    case = paper_case("dim9_333")
    return case.algebra, case.automorphism, case.basis, case.field


# -- is_automorphism -----------------------------------------------------------


def test_automorphism_n333_ok():
    L, A, B, F = n333_data()
    assert an.is_automorphism(L, A) is None


def test_automorphism_identity_ok():
    L = catalog_algebra("n333", [1, 1, 1])
    A = an.diagonal_automorphism([1] * 9, (3, 3, 3), RATIONAL)
    assert an.is_automorphism(L, A) is None


def test_automorphism_corrupted_mu1():
    L, A, B, F = n333_data()
    l1, l2, l3 = cubic_lambdas(F.gen())
    evs = list(A.eigenvalues)
    evs[3] = l1 * l3  # was l1*l2; breaks [X1,X2] = Y1
    bad = an.DiagonalAutomorphism(tuple(evs), A.layers, F)
    assert an.is_automorphism(L, bad) == (0, 1)


def test_automorphism_invariant_under_permutation():
    # permuting basis vectors and eigenvalues together preserves the verdict
    L, A, B, F = n333_data()
    rng = random.Random(8)
    perm = list(range(9))
    rng.shuffle(perm)
    cols = []
    for j in perm:
        col = [F.zero()] * 9
        col[j] = F.one()
        cols.append(col)
    Lp = la.change_basis(L, la.basis_matrix(cols, F))
    evp = tuple(A.eigenvalues[j] for j in perm)
    Ap = an.DiagonalAutomorphism(evp, A.layers, F)
    assert an.is_automorphism(Lp, Ap) is None


def test_rejects_zero_eigenvalue():
    with pytest.raises(WrongType):
        an.diagonal_automorphism([0, 1], (2,), RATIONAL)


# -- splitting -------------------------------------------------------------------


def test_splitting_633_blocks():
    case = paper_case("dim9_63_u2u3")
    blocks = case.automorphism.blocks()
    assert an.splitting_of(blocks[0], case.field).degrees == (6,)
    assert an.splitting_of(blocks[1], case.field).degrees == (3,)


def test_splitting_repeated_cubic():
    case = paper_case("dim9_u2u3_n3")
    s = an.splitting_of(case.automorphism.blocks()[0], case.field)
    assert s.degrees == (3, 3)
    assert not s.low_degree


def test_splitting_rational_eigenvalues_flagged():
    s = an.splitting_of([Fraction(2), Fraction(1, 2)], RATIONAL)
    assert s.degrees == (1, 1)
    assert s.low_degree


def test_splitting_inconsistent_grouping():
    F = cubic_field()
    with pytest.raises(GroupingInconsistent):
        an.splitting_of([F.gen(), F.gen()], F)


def test_splitting_degree_exceeds_block():
    F = cubic_field()
    with pytest.raises(GroupingInconsistent):
        an.splitting_of([F.gen()], F)


def test_splitting_never_size_one_for_passing_certificates():
    for name in ("dim9_333", "dim10_55", "dim10_4222"):
        case = paper_case(name)
        for block in case.automorphism.blocks():
            s = an.splitting_of(block, case.field)
            assert all(k != 1 for k in s.degrees)


# -- lemma m1 filter -----------------------------------------------------------------


def test_filter_violates_rule_one():
    assert an.lemma_m1_filter(4, 3, 2) is an.M1Verdict.VIOLATES_1
    assert an.lemma_m1_filter(4, 3, 2).rule == 1


def test_filter_violates_rule_two():
    v = an.lemma_m1_filter(4, 4, 3, product_is_eigenvalue=True)
    assert v is an.M1Verdict.VIOLATES_2


def test_filter_admissible():
    assert an.lemma_m1_filter(3, 3, 3) is an.M1Verdict.ADMISSIBLE
    # rule 2 only applies with the structural flag
    assert an.lemma_m1_filter(4, 4, 3) is an.M1Verdict.ADMISSIBLE


def test_filter_rejects_nonpositive():
    with pytest.raises(ValueError):
        an.lemma_m1_filter(0, 3, 2)


# -- hyperbolicity ----------------------------------------------------------------------


def test_hyperbolicity_n333():
    L, A, B, F = n333_data()
    result = an.hyperbolicity_check(A)
    assert result.status == "OK"
    assert result.margin is not None and result.margin > 0


def test_hyperbolicity_fails_on_one():
    A = an.diagonal_automorphism([Fraction(2), Fraction(1)], (2,), RATIONAL)
    result = an.hyperbolicity_check(A)
    assert result.status == "FAIL" and result.witness == 1


def test_hyperbolicity_fails_on_cyclotomic():
    F = field_new(Poly.from_ints([1, 1, 1]))
    A = an.DiagonalAutomorphism((F.gen(),), (1,), F)
    result = an.hyperbolicity_check(A)
    assert result.status == "FAIL"


# -- unit products -------------------------------------------------------------------------


def test_unit_products_cubic_block_is_minus_one():
    L, A, B, F = n333_data()
    products = an.unit_products_check(A)
    assert products.labels == ("-1", "+1", "-1")
    assert products.products[0] == F.from_int(-1)


def test_unit_products_quintic_block():
    case = paper_case("dim10_55")
    products = an.unit_products_check(case.automorphism)
    assert products.labels == ("-1", "+1")


def test_unit_products_reciprocal_pair():
    F = quadratic_field()
    lam = F.gen()
    from anosovcert.exactnum import elem_inv
    A = an.DiagonalAutomorphism((lam, elem_inv(lam)), (2,), F)
    assert an.unit_products_check(A).labels == ("+1",)


def test_unit_products_other():
    A = an.diagonal_automorphism([Fraction(2), Fraction(3)], (2,), RATIONAL)
    products = an.unit_products_check(A)
    assert products.labels == ("OTHER",)
    assert products.other_index == 0


# -- square ----------------------------------------------------------------------------------


def test_square_examples():
    F = quadratic_field()
    lam = F.gen()
    from anosovcert.exactnum import elem_inv
    A = an.DiagonalAutomorphism((lam, elem_inv(lam)), (2,), F)
    A2 = an.square(A)
    assert A2.eigenvalues == (lam ** 2, elem_inv(lam) ** 2)
    # block product -1 squares to +1
    L, A, B, Fc = n333_data()
    sq = an.square(A)
    assert an.unit_products_check(sq).labels == ("+1", "+1", "+1")
    ident = an.diagonal_automorphism([1, 1], (2,), RATIONAL)
    assert an.square(ident).eigenvalues == ident.eigenvalues


def test_square_preserves_automorphism_and_hyperbolicity():
    L, A, B, F = n333_data()
    sq = an.square(A)
    assert an.is_automorphism(L, sq) is None
    assert an.hyperbolicity_check(sq).status == "OK"


# -- integrality and zbasis ----------------------------------------------------------------


def test_integrality_identity_automorphism():
    L, A, B, F = n333_data()
    ident = an.DiagonalAutomorphism(tuple(F.one() for _ in range(9)),
                                    (3, 3, 3), F)
    res = an.integrality_in_basis(ident, B)
    assert res.all_integer and res.det == 1
    n = 9
    for i in range(n):
        for j in range(n):
            assert res.matrix[i][j] == (1 if i == j else 0)


def test_integrality_n333_column_pattern():
    # A sends the third lattice generator to 3 X_2 - X_1
    L, A, B, F = n333_data()
    res = an.integrality_in_basis(A, B)
    assert res.all_integer and res.det_pm1
    col = [res.matrix[i][2] for i in range(9)]
    assert col[:3] == [Fraction(-1), Fraction(3), Fraction(0)]
    assert all(x == 0 for x in col[3:])


def test_integrality_quintic_case():
    case = paper_case("dim10_55")
    res = an.integrality_in_basis(case.automorphism, case.basis)
    assert res.all_integer and res.det_pm1


def test_integrality_witness_for_non_lattice_basis():
    L, A, B, F = n333_data()
    cols = [list(c) for c in B.columns]
    cols[0] = [x * Fraction(1, 3) for x in cols[0]]
    Bbad = la.basis_matrix(cols, F)
    res = an.integrality_in_basis(A, Bbad)
    assert not res.all_integer
    assert res.witness is not None


def test_zbasis_n333_table():
    L, A, B, F = n333_data()
    assert an.zbasis_check(L, B) is None
    rebased = la.change_basis(L, B)
    # the bracket of the first and third lattice generators is Y_3 - 3 Y_2
    row = rebased.tensor[(0, 2)]
    assert row[4] == F.from_int(-3)
    assert row[5] == F.from_int(1)
    assert set(row) == {4, 5}


def test_zbasis_halved_vector_witness():
    L, A, B, F = n333_data()
    cols = [list(c) for c in B.columns]
    cols[3] = [x * Fraction(1, 2) for x in cols[3]]
    Bbad = la.basis_matrix(cols, F)
    w = an.zbasis_check(L, Bbad)
    assert w is not None
    q = w[3] if isinstance(w[3], Fraction) else w[3].as_fraction()
    # brackets of the halved center generator pick up a denominator
    assert q.denominator == 2


def test_zbasis_h3_standard():
    L = catalog_algebra("h3")
    cols = [[Fraction(i == j) for i in range(3)] for j in range(3)]
    assert an.zbasis_check(L, la.basis_matrix(cols, RATIONAL)) is None


# -- galois twist sums ------------------------------------------------------------------------


def test_twist_h3_cubed_structure():
    F = cubic_field()
    lam = F.gen()
    half = catalog_algebra("h3", domain=F)
    A_half = an.diagonal_automorphism((lam, lam, lam * lam), (2, 1), F)
    L, A, B = an.galois_twist_sum(half, A_half, lam * lam - 2)
    assert L.dim == 9
    assert la.jacobi_check(L) is None
    assert la.graded_type(L)[0] == (6, 3)
    assert an.is_automorphism(L, A) is None


def test_twist_rejects_non_conjugation():
    F = cubic_field()
    lam = F.gen()
    half = catalog_algebra("h3", domain=F)
    A_half = an.diagonal_automorphism((lam, lam, lam * lam), (2, 1), F)
    with pytest.raises(ConjugateMismatch):
        an.galois_twist_sum(half, A_half, lam + 1)


def test_twist_rejects_rational_algebra():
    half = catalog_algebra("h3")
    A_half = an.diagonal_automorphism([2, 3, 6], (2, 1), RATIONAL)
    with pytest.raises(ConjugateMismatch):
        an.galois_twist_sum(half, A_half, Fraction(1))


# -- the full pipeline ---------------------------------------------------------------------


def test_certify_dim9_333_passes_with_auto_square():
    L, A, B, F = n333_data()
    cert = an.certify_anosov(L, A, B, auto_square=True)
    assert cert.verdict == "PASS"
    assert cert.squared
    assert cert.products.labels == ("-1", "+1", "-1")


def test_certify_without_auto_square_still_passes_here():
    # the unsquared map already has an integer matrix with det 1
    L, A, B, F = n333_data()
    cert = an.certify_anosov(L, A, B, auto_square=False)
    assert cert.verdict == "PASS"
    assert not cert.squared


def test_certify_fail_on_corrupted_eigenvalue():
    L, A, B, F = n333_data()
    evs = list(A.eigenvalues)
    evs[3] = F.one()
    bad = an.DiagonalAutomorphism(tuple(evs), A.layers, F)
    cert = an.certify_anosov(L, bad, B, auto_square=True)
    assert cert.verdict == "FAIL"
    assert cert.automorphism_witness is not None
    assert cert.failure_stage == "automorphism"


def test_certify_fail_at_hyperbolicity():
    # all-ones eigenvalues preserve brackets of an abelian algebra but are
    # never hyperbolic
    L = catalog_algebra("abelian", [4])
    A = an.diagonal_automorphism([1, 1, 1, 1], (4,), RATIONAL)
    cols = [[Fraction(i == j) for i in range(4)] for j in range(4)]
    cert = an.certify_anosov(L, A, la.basis_matrix(cols, RATIONAL))
    assert cert.verdict == "FAIL"
    assert cert.failure_stage == "hyperbolicity"


def test_certify_square_invariance_property():
    # a pass with squared = false still passes after squaring by hand
    case = paper_case("dim10_622")
    cert = an.certify_anosov(case.algebra, case.automorphism, case.basis)
    assert cert.verdict == "PASS" and not cert.squared
    cert2 = an.certify_anosov(case.algebra, an.square(case.automorphism),
                              case.basis)
    assert cert2.verdict == "PASS"


def _random_unimodular(n, rng, steps=12):
    m = [[Fraction(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.choice([-2, -1, 1, 2])
        for k in range(n):
            m[i][k] += c * m[j][k]
    if rng.random() < 0.5:
        m[0] = [-x for x in m[0]]
    return m


def test_certify_lattice_invariance_under_unimodular_change():
    rng = random.Random(0)
    case = paper_case("dim9_333")
    base = an.certify_anosov(case.algebra, case.automorphism, case.basis,
                             auto_square=True)
    for _ in range(3):
        U = _random_unimodular(9, rng)
        cols = [list(col) for col in case.basis.columns]
        # B U: columns are integer combinations of the old columns
        new_cols = []
        for j in range(9):
            col = [case.field.zero()] * 9
            for i in range(9):
                if U[i][j]:
                    col = [x + U[i][j] * y for x, y in zip(col, cols[i])]
            new_cols.append(col)
        B2 = la.basis_matrix(new_cols, case.field)
        cert = an.certify_anosov(case.algebra, case.automorphism, B2,
                                 auto_square=True)
        assert cert.verdict == base.verdict == "PASS"
        assert cert.products.labels == base.products.labels
