import random
from fractions import Fraction

import pytest

from anosovcert import liealg as la
from anosovcert.catalog import catalog_algebra, paper_case
from anosovcert.exactnum import RATIONAL
from anosovcert.exceptions import (AlgebraError, AlreadyAbelian,
                                   DomainMismatch, IndexOutOfRange,
                                   NotLayerOrdered, NotNilpotent, Singular)


def h3():
    return la.algebra_new(3, RATIONAL, [(0, 1, 2, 1)], grading=(2, 1))


def n333():
    return catalog_algebra("n333", [1, 1, 1])


def test_algebra_new_rejects_bad_indices():
    with pytest.raises(IndexOutOfRange):
        la.algebra_new(3, RATIONAL, [(1, 0, 2, 1)])
    with pytest.raises(IndexOutOfRange):
        la.algebra_new(3, RATIONAL, [(0, 1, 3, 1)])


def test_algebra_new_sums_duplicates():
    L = la.algebra_new(3, RATIONAL, [(0, 1, 2, 1), (0, 1, 2, -1)])
    assert L.nonzero_entries() == []


def test_strict_grading_validated():
    with pytest.raises(AlgebraError):
        la.algebra_new(4, RATIONAL, [(0, 1, 3, 1)], grading=(4,))
    with pytest.raises(AlgebraError):
        la.algebra_new(4, RATIONAL, [(0, 1, 3, 1)], grading=(2, 1, 1))
    # fine when the target sits exactly one layer up
    la.algebra_new(4, RATIONAL, [(0, 1, 3, 1)], grading=(3, 1))
    la.algebra_new(4, RATIONAL, [(0, 1, 2, 1)], grading=(2, 1, 1))


def test_bracket_antisymmetry():
    L = n333()
    u = [Fraction(x) for x in (1, 2, -1, 0, 3, 0, 0, 0, 1)]
    v = [Fraction(x) for x in (0, 1, 1, -2, 0, 1, 4, 0, 0)]
    lhs = L.bracket(u, v)
    rhs = [-x for x in L.bracket(v, u)]
    assert lhs == rhs


def test_jacobi_h3_and_n333():
    assert la.jacobi_check(h3()) is None
    assert la.jacobi_check(n333()) is None


def test_jacobi_witness():
    bad = la.algebra_new(3, RATIONAL, [(0, 1, 2, 1), (0, 2, 0, 1)])
    assert la.jacobi_check(bad) == (0, 1, 2)


def test_graded_types():
    assert la.graded_type(h3())[0] == (2, 1)
    assert la.graded_type(n333())[0] == (3, 3, 3)
    h = la.algebra_new(3, RATIONAL, [(0, 1, 2, 1)])
    assert la.graded_type(la.direct_sum(h, h, h))[0] == (6, 3)
    new1 = paper_case("dim10_4222").algebra
    assert la.graded_type(new1)[0] == (4, 2, 2, 2)


def test_not_nilpotent_detected():
    # sl2-style: [e,f]=h, [h,e]=2e, [h,f]=-2f
    sl2 = la.algebra_new(3, RATIONAL,
                         [(0, 1, 2, 1), (0, 2, 0, -2), (1, 2, 1, 2)])
    with pytest.raises(NotNilpotent):
        la.graded_type(sl2)


def test_abelian_factor_examples():
    f3 = catalog_algebra("f3")
    f3r3 = la.direct_sum(f3, catalog_algebra("abelian", [3]))
    m, abelian, ideal = la.abelian_factor_dim(f3r3)
    assert m == 3
    assert len(abelian) == 3 and len(ideal) == 6
    assert la.abelian_factor_dim(n333())[0] == 0
    assert la.abelian_factor_dim(catalog_algebra("abelian", [9]))[0] == 9


def test_abelian_factor_split_is_ideal_pair():
    f3 = catalog_algebra("f3")
    L = la.direct_sum(f3, catalog_algebra("abelian", [2]))
    m, abelian, ideal = la.abelian_factor_dim(L)
    assert m == 2
    dom = L.domain
    # the two parts bracket to zero and the ideal part is bracket-closed
    from anosovcert.linalg import in_span
    ideal_rows = [list(v) for v in ideal.vectors]
    for a in abelian.vectors:
        for b in list(ideal.vectors) + list(abelian.vectors):
            w = L.bracket(list(a), list(b))
            assert all(dom.is_zero(x) for x in w)
    for a in ideal.vectors:
        for b in ideal.vectors:
            w = L.bracket(list(a), list(b))
            if any(not dom.is_zero(x) for x in w):
                assert in_span(w, ideal_rows, dom)


def test_abelian_factor_additivity_property():
    rng = random.Random(2)
    for k in (1, 2, 3):
        base = n333()
        m0 = la.abelian_factor_dim(base)[0]
        summed = la.direct_sum(base, catalog_algebra("abelian", [k]))
        assert la.abelian_factor_dim(summed)[0] == m0 + k


def test_reduce_n333():
    q, d = la.reduce(n333())
    assert la.graded_type(q)[0] == (3, 3)
    # quotient is the free 2-step algebra on three generators, up to
    # relabeling the two last center vectors
    swap = [0, 1, 2, 3, 5, 4]
    cols = []
    for j in swap:
        col = [Fraction(0)] * 6
        col[j] = Fraction(1)
        cols.append(col)
    B = la.basis_matrix(cols, RATIONAL)
    assert la.change_basis(q, B) == catalog_algebra("f3")
    assert d.dim == 6 and d.nonzero_entries() == []


def test_reduce_h3():
    q, d = la.reduce(h3())
    assert q.dim == 2 and q.nonzero_entries() == []
    assert d.dim == 1


def test_reduce_abelian_raises():
    with pytest.raises(AlreadyAbelian):
        la.reduce(catalog_algebra("abelian", [4]))


def test_reduce_4222_gives_l4_plus_l4():
    case = paper_case("dim10_4222")
    q, d = la.reduce(case.algebra)
    assert la.graded_type(q)[0] == (4, 2, 2)
    assert d.dim == 6 and d.nonzero_entries() == []
    # the quotient is l4 + l4 after unshuffling the two copies
    F = case.field
    l4l4 = la.direct_sum(catalog_algebra("l4", domain=F),
                         catalog_algebra("l4", domain=F))
    # quotient coordinates are slot-major (X1', X1'', X2', X2'', Z', Z'',
    # W', W''); the copy-major reordering recovers the direct-sum layout
    copy_major = [0, 2, 4, 6, 1, 3, 5, 7]
    cols = []
    for j in copy_major:
        col = [F.zero()] * 8
        col[j] = F.one()
        cols.append(col)
    B = la.basis_matrix(cols, F)
    assert la.change_basis(q, B) == l4l4


def test_change_basis_center_rescale():
    n211 = catalog_algebra("n333", [2, 1, 1])
    cols = []
    for i in range(9):
        col = [Fraction(0)] * 9
        col[i] = Fraction(2) if i == 6 else Fraction(1)
        cols.append(col)
    B = la.basis_matrix(cols, RATIONAL)
    assert la.change_basis(n211, B) == n333()


def test_change_basis_identity():
    L = n333()
    B = la.basis_matrix([[Fraction(i == j) for i in range(9)]
                         for j in range(9)], RATIONAL)
    assert la.change_basis(L, B) == L


def test_change_basis_singular_rejected():
    with pytest.raises(Singular):
        la.basis_matrix([[Fraction(1), Fraction(0)], [Fraction(1), Fraction(0)]],
                        RATIONAL)


def test_graded_type_invariant_under_change_basis():
    rng = random.Random(4)
    L = catalog_algebra("n63prime", [1, 1, 1])
    for _ in range(3):
        while True:
            cols = [[Fraction(rng.randrange(-2, 3)) for _ in range(9)]
                    for _ in range(9)]
            try:
                B = la.basis_matrix(cols, RATIONAL)
                break
            except Singular:
                continue
        assert la.graded_type(la.change_basis(L, B))[0] == (6, 3)


def test_ad_image_dims():
    assert la.ad_image_dim(h3(), h3().basis_vector(0)) == 1
    n1 = catalog_algebra("n442_1")
    assert la.ad_image_dim(n1, n1.basis_vector(0)) == 3
    x12 = [a + b for a, b in zip(n1.basis_vector(0), n1.basis_vector(1))]
    assert la.ad_image_dim(n1, x12) == 4


def test_ad_image_dim_invariant_under_conjugation():
    rng = random.Random(6)
    L = catalog_algebra("n442_0")
    x = [Fraction(rng.randrange(-2, 3)) for _ in range(10)]
    base = la.ad_image_dim(L, x)
    from anosovcert.linalg import mat_vec
    for _ in range(2):
        while True:
            cols = [[Fraction(rng.randrange(-2, 3)) for _ in range(10)]
                    for _ in range(10)]
            try:
                B = la.basis_matrix(cols, RATIONAL)
                break
            except Singular:
                continue
        Lb = la.change_basis(L, B)
        # x in new coordinates: solve B x' = x
        from anosovcert.linalg import inverse
        inv = inverse(B.as_rows(), RATIONAL)
        xb = mat_vec(inv, x)
        assert la.ad_image_dim(Lb, xb) == base


def test_direct_sum_examples():
    h = la.algebra_new(3, RATIONAL, [(0, 1, 2, 1)])
    s = la.direct_sum(h, h, h)
    assert s.dim == 9
    assert la.jacobi_check(s) is None
    l4 = catalog_algebra("l4")
    l44 = la.direct_sum(l4, l4)
    assert la.graded_type(l44)[0] == (4, 2, 2)
    with_zero = la.direct_sum(h, catalog_algebra("abelian", [0]))
    assert with_zero == h


def test_direct_sum_domain_mismatch():
    from anosovcert.catalog import cubic_field
    F = cubic_field()
    with pytest.raises(DomainMismatch):
        la.direct_sum(h3(), catalog_algebra("h3", domain=F))


def test_jacobi_direct_sum_property():
    examples = [catalog_algebra(n) for n in ("h3", "f3", "l4", "n55")]
    for a in examples:
        for b in examples:
            assert la.jacobi_check(la.direct_sum(a, b)) is None


def test_layer_ranges_requires_layer_order():
    # h3 + h3 in interleaved coordinates is not layer-ordered
    h = la.algebra_new(6, RATIONAL, [(0, 1, 2, 1), (3, 4, 5, 1)])
    parts, ranges = la.layer_ranges(la.algebra_new(
        6, RATIONAL, [(0, 1, 4, 1), (2, 3, 5, 1)]))
    assert parts == (4, 2)
    with pytest.raises(NotLayerOrdered):
        la.layer_ranges(h)
