"""Exit criteria.  Every equality is exact; each criterion also has a wall-clock limit."""

import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

from kbalanced.bigpoly import Poly, RatFunc, series_expand
from kbalanced.chebyshev import GOLDEN_TABLE, cheb, cheb_explicit
from kbalanced.lattice import family_gf, g_balanced, verify_table_recurrences
from kbalanced.oracle import (
    PathSpec,
    count_balanced_strings,
    count_extent_paths,
    count_paths,
    count_walks,
)
from kbalanced.reconcile import misindexed_cross_term_holds, verify_reconciliation
from kbalanced.transfer import (
    bad_walk_gf,
    det_resolvent,
    f_balanced,
    good_walk_gf,
    s_closed,
    s_sum_direct,
    solve_resolvent,
    weighted_row_sum,
)
from kbalanced.chebyshev import U


@contextmanager
def time_limit(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"


@pytest.mark.acceptance(1, "Chebyshev table k=0..7, both kinds, both constructions")
def test_chebyshev_golden_table():
    with time_limit(1):
        assert len(GOLDEN_TABLE) == 16
        for (kind, k), coeffs in GOLDEN_TABLE.items():
            assert cheb(kind, k) == Poly(coeffs)
            assert cheb_explicit(kind, k) == Poly(coeffs)


@pytest.mark.acceptance(2, "det(I_k - x A_k) = U_k for 0 <= k <= 16")
def test_determinant_is_u():
    with time_limit(1):
        for k in range(17):
            assert det_resolvent(k) == U(k)


@pytest.mark.acceptance(3, "S_k direct solve = closed form, x_1 = x_k, weighted row sum, k <= 12")
def test_s_direct_equals_closed():
    with time_limit(10):
        for k in range(13):
            assert s_sum_direct(k) == s_closed(k)
            if k:
                xs = solve_resolvent(k)
                assert xs[0] == xs[-1]
                assert weighted_row_sum(xs) == RatFunc(k)


@pytest.mark.acceptance(4, "f_k = g_k as reduced functions and on 64 series terms, k <= 12")
def test_main_theorem():
    with time_limit(10):
        for k in range(13):
            f, g = f_balanced(k), g_balanced(k)
            assert f == g
            assert f.num == g.num and f.den == g.den
            assert series_expand(f, 64).terms == series_expand(g, 64).terms


@pytest.mark.acceptance(5, "g_k series = brute-force string counts, k <= 8, n <= 18")
def test_oracle_strings():
    with time_limit(120):
        for k in range(9):
            terms = series_expand(g_balanced(k), 19).terms
            assert list(terms) == [count_balanced_strings(k, n) for n in range(19)]
        assert series_expand(g_balanced(2), 8).terms == (1, 2, 4, 6, 10, 14, 22, 30)


PATH_SPECS = {
    "F": lambda k: PathSpec(0, k, "ground"),
    "G": lambda k: PathSpec(0, k, "top"),
    "Fbar": lambda k: PathSpec(-k, k, "ground"),
    "Gbar": lambda k: PathSpec(-k, k, "top"),
    "H": lambda k: PathSpec(0, k, "any"),
    "Hbar": lambda k: PathSpec(-k, k, "any"),
}


@pytest.mark.acceptance(6, "path families = path counts (k <= 6, size <= 16); extent = strings")
def test_oracle_paths():
    with time_limit(120):
        for family, make in PATH_SPECS.items():
            for k in range(7):
                spec = make(k)
                terms = series_expand(family_gf(family, k), 17).terms
                assert list(terms) == [count_paths(spec, n) for n in range(17)], (family, k)
        for k in range(7):
            for n in range(17):
                assert count_extent_paths(k, n) == count_balanced_strings(k, n)


@pytest.mark.acceptance(7, "walk series = walk counts (3 <= k <= 6, n <= 16); bad walks = (k-2)-balanced")
def test_oracle_walks():
    with time_limit(120):
        for k in range(3, 7):
            bad = series_expand(bad_walk_gf(k), 17).terms
            good = series_expand(good_walk_gf(k), 17).terms
            for n in range(17):
                assert bad[n] == count_walks(k, n, False)
                assert good[n] == count_walks(k, n, True)
        assert count_walks(4, 3, True) == 2
        assert series_expand(good_walk_gf(4), 4)[3] == 2
        for k in range(3, 8):
            for n in range(15):
                assert count_walks(k, n, False) == count_balanced_strings(k - 2, n)


@pytest.mark.acceptance(8, "reconciliation identities k <= 16; misindexed cross-term fails at k = 2")
def test_reconciliation():
    with time_limit(5):
        rep = verify_reconciliation(16, k_min=0)
        assert rep.all_passed, [c.line() for c in rep.failures]
        names = {c.identity for c in rep}
        for needed in ("P_k = B_k C_k", "U_k = A_k B_k", "W_k = B_k B_{k-1}", "R_k = B_{k+1}/A_{k+1}",
                       "C_k A_{k-1} - C_{k-1} A_k = W_k", "k A_k(1/2) = B_{k-1}(1/2)",
                       "k U_k(1/2) = W_k(1/2)"):
            assert needed in names
        assert {c.k for c in rep} == set(range(17))
        assert misindexed_cross_term_holds(2) is False


@pytest.mark.acceptance(9, "six path recurrences and H_k(1 + x H_{k-1}) = R_k R_{k-1}, 1 <= k <= 12")
def test_lattice_recurrences():
    with time_limit(5):
        rep = verify_table_recurrences(12)
        assert rep.all_passed, [c.line() for c in rep.failures]
        assert {c.k for c in rep} == set(range(1, 13))
        assert len({c.identity for c in rep}) >= 7


@pytest.mark.acceptance(10, "`verify --suite all` exits 0 within 5 minutes")
def test_verify_all_cli():
    with time_limit(300):
        proc = subprocess.run([sys.executable, "-m", "kbalanced", "verify", "--suite", "all"],
                              capture_output=True, text=True)
    assert proc.returncode == 0, proc.stdout[-2000:] + proc.stderr
    assert "FAIL" not in proc.stdout
