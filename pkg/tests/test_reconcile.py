from fractions import Fraction

import pytest

from kbalanced.bigpoly import Poly, RatFunc, series_expand
from kbalanced.lattice import g_balanced
from kbalanced.reconcile import (
    a_poly,
    b_poly,
    c_divisibility_check,
    c_poly,
    cross_term,
    misindexed_cross_term_holds,
    reconcile_set,
    verify_reconciliation,
)
from kbalanced.transfer import f_balanced, w_det


def test_sets():
    s = reconcile_set(0)
    assert (s.A, s.B, s.C, s.P) == (Poly([1]), Poly([1]), Poly(), Poly())
    s = reconcile_set(2)
    assert (s.A, s.B, s.C, s.P) == (Poly([1, -1]), Poly([1, 1]), Poly([2]), Poly([2, 2]))
    s = reconcile_set(3)
    assert (s.A, s.B, s.C) == (Poly([1, 0, -2]), Poly([1]), Poly([3, 4]))
    with pytest.raises(ValueError):
        reconcile_set(-1)


def test_b_minus_one():
    assert b_poly(-1) == Poly()


def test_cross_term_examples():
    assert cross_term(2) == Poly([1, 1]) == w_det(2)
    assert cross_term(3) == Poly([1, 1]) == w_det(3)
    wrong = c_poly(2) * a_poly(3) - c_poly(1) * a_poly(2)
    assert wrong == Poly([1, 1, -4])
    assert not misindexed_cross_term_holds(2)


def test_chain_k1():
    f1 = RatFunc(w_det(2), a_poly(2) * a_poly(1))
    assert f1 == RatFunc(Poly([1, 1]), Poly([1, -1])) == f_balanced(1) == g_balanced(1)


def test_divisibility_examples():
    half = Fraction(1, 2)
    assert 3 * a_poly(3)(half) == b_poly(2)(half) == Fraction(3, 2)
    assert 2 * a_poly(2)(half) == b_poly(1)(half) == 1
    assert c_divisibility_check(20).all_passed


def test_full_chain():
    rep = verify_reconciliation(16, k_min=0, series_terms=64)
    assert rep.all_passed, [c.line() for c in rep.failures]


def test_parity_split_gives_w():
    for k in range(33):
        assert b_poly(k) * b_poly(k - 1) == w_det(k)


@pytest.mark.parametrize("k", range(13))
def test_f_g_series(k):
    assert series_expand(f_balanced(k), 64).terms == series_expand(g_balanced(k), 64).terms
