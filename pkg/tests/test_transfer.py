from fractions import Fraction
from itertools import product

import pytest

from kbalanced.bigpoly import ONE, Poly, RatFunc, series_expand
from kbalanced.chebyshev import U
from kbalanced.oracle import count_balanced_strings, count_walks
from kbalanced.transfer import (
    RatMatrix,
    Walk,
    adjacency,
    bad_walk_gf,
    decode,
    det_resolvent,
    encode,
    f_balanced,
    good_walk_gf,
    resolvent,
    resolvent_inverse,
    s_closed,
    s_sum_direct,
    solve_resolvent,
    w_closed,
    w_cramer,
    w_det,
    walk_string_codec,
    weighted_row_sum,
)


def path_walk_totals(k, n_terms):
    """Sum of the entries of A_k^n: all length-n walks on the k-vertex path."""
    a = adjacency(k)
    m = [[int(i == j) for j in range(k)] for i in range(k)]
    out = []
    for _ in range(n_terms):
        out.append(sum(map(sum, m)))
        m = [[sum(m[i][t] * a[t][j] for t in range(k)) for j in range(k)] for i in range(k)]
    return out


def fraction_det(m):
    n = len(m)
    if n == 0:
        return Fraction(1)
    return sum((-1) ** j * m[0][j] * fraction_det([row[:j] + row[j + 1:] for row in m[1:]])
               for j in range(n))


def cramer_sum(k, x):
    """S_k(x) at a rational point, by Cramer's rule with cofactor determinants."""
    m = [[Fraction(int(i == j)) - x * (1 if abs(i - j) == 1 else 0) for j in range(k)] for i in range(k)]
    d = fraction_det(m)
    total = Fraction(0)
    for c in range(k):
        mc = [row[:c] + [Fraction(1)] + row[c + 1:] for row in m]
        total += fraction_det(mc) / d
    return total


def evaluate(f, x):
    return Fraction(f.num(x)) / f.den(x)


def test_adjacency():
    assert adjacency(1) == [[0]]
    assert adjacency(2) == [[0, 1], [1, 0]]
    assert adjacency(3) == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
    with pytest.raises(ValueError):
        adjacency(0)


def test_det_resolvent():
    assert det_resolvent(0) == ONE
    assert det_resolvent(2) == Poly([1, 0, -1])
    assert det_resolvent(3) == Poly([1, 0, -2])
    for k in range(17):
        assert det_resolvent(k) == U(k)


def test_s_examples():
    three = RatFunc(Poly([3, -2, -8]), Poly([1, -2]) * Poly([1, 0, -2]))
    assert s_sum_direct(0) == RatFunc(0)
    assert s_sum_direct(1) == RatFunc(1) == s_closed(1)
    assert s_sum_direct(2) == RatFunc(Poly([2]), Poly([1, -1])) == s_closed(2)
    assert s_sum_direct(3) == three == s_closed(3)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_s_against_walk_counts(k):
    assert list(series_expand(s_sum_direct(k), 12).terms) == path_walk_totals(k, 12)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_s_against_cramer(k):
    for x in (Fraction(1, 3), Fraction(-2, 7), Fraction(5, 11)):
        assert evaluate(s_sum_direct(k), x) == cramer_sum(k, x)


def test_inverse_matrix():
    for k in range(1, 6):
        inv = resolvent_inverse(k)
        assert resolvent(k) @ inv == RatMatrix.identity(k)
        assert inv.entry_sum() == s_sum_direct(k)


@pytest.mark.parametrize("k", range(13))
def test_direct_equals_closed(k):
    assert s_sum_direct(k) == s_closed(k)


def test_solution_structure():
    for k in range(1, 13):
        xs = solve_resolvent(k)
        assert xs[0] == xs[-1]
        assert weighted_row_sum(xs) == RatFunc(k)
        assert xs[0] == RatFunc(w_det(k), U(k))


def test_w_values():
    assert w_det(0) == Poly()
    assert w_det(1) == ONE
    assert w_det(2) == Poly([1, 1])
    assert w_det(4) == Poly([1, 1, -1])
    for k in range(33):
        assert w_det(k) == w_closed(k)
    for k in range(1, 10):
        assert w_det(k) == w_cramer(k)


def test_f_examples():
    assert f_balanced(0) == RatFunc(1)
    assert f_balanced(1) == RatFunc(Poly([1, 1]), Poly([1, -1]))
    assert f_balanced(2) == RatFunc(Poly([1, 1]), Poly([1, -1]) * Poly([1, 0, -2]))


@pytest.mark.parametrize("k", range(9))
def test_f_matches_string_counts(k):
    terms = series_expand(f_balanced(k), 19).terms
    assert list(terms) == [count_balanced_strings(k, n) for n in range(19)]


def test_walk_gf_examples():
    assert bad_walk_gf(3) == RatFunc(Poly([1, 1]), Poly([1, -1]))
    assert series_expand(bad_walk_gf(3), 2)[1] == 2
    assert series_expand(good_walk_gf(4), 4)[3] == 2
    for k in range(3, 9):
        g = series_expand(good_walk_gf(k), 20).terms
        assert all(c == 0 for c in g[: k - 1])
        assert all(c >= 0 for c in g)
    for k in (0, 1, 2):
        with pytest.raises(ValueError):
            bad_walk_gf(k)
        with pytest.raises(ValueError):
            good_walk_gf(k)


@pytest.mark.parametrize("k", range(3, 8))
def test_bad_walks_are_balanced_strings(k):
    for n in range(15):
        assert count_walks(k, n, False) == count_balanced_strings(k - 2, n)


def test_codec_examples():
    assert encode(Walk(4, (0, 1, 2, 1, 2, 3))) == "11011"
    assert decode(4, "11011").nodes == (0, 1, 2, 1, 2, 3)
    assert walk_string_codec("encode", 5, [0]) == ""
    assert decode(3, "000").nodes == (0, 2, 1, 0)


def test_codec_rejects():
    with pytest.raises(ValueError):
        Walk(4, (0, 2))
    with pytest.raises(ValueError):
        Walk(4, (1, 2))
    with pytest.raises(ValueError):
        Walk(2, (0, 1))
    with pytest.raises(ValueError):
        decode(4, "10x")
    with pytest.raises(ValueError):
        walk_string_codec("sideways", 4, "1")


@pytest.mark.parametrize("k", [3, 4, 5])
def test_codec_round_trips(k):
    for n in range(8):
        for bits in product("01", repeat=n):
            s = "".join(bits)
            walk = decode(k, s)
            assert encode(walk) == s
            assert decode(k, encode(walk)) == walk
