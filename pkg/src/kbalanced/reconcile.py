"""Polynomials A_k, B_k, C_k, P_k and the identity chain showing f_k = g_k.

    A_{2m} = U_m - x U_{m-1}        A_{2m+1} = T_{m+1}
    B_{2m} = U_m + x U_{m-1}        B_{2m+1} = U_m
    C_k = (k A_k - 2x B_{k-1}) / (1 - 2x)
    P_k = (k U_k - 2x W_k) / (1 - 2x)

The cross-term identity that closes the chain is
``C_k A_{k-1} - C_{k-1} A_k = W_k``.  The variant with A_{k+1} in the first
product, which sometimes appears in print, is false already at k = 2;
``misindexed_cross_term_holds`` exists to demonstrate that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bigpoly import X, Poly, RatFunc, series_expand
from .chebyshev import T, U
from .lattice import g_balanced, r_gf, split
from .report import Report
from .transfer import ONE_MINUS_2X, f_balanced, p_numerator, s_sum_direct, w_det

HALF = Fraction(1, 2)


def a_poly(k: int) -> Poly:
    m, odd = split(k)
    return T(m + 1) if odd else U(m) - X * U(m - 1)


def b_poly(k: int) -> Poly:
    """B_k; B_{-1} = U_{-1} = 0."""
    m, odd = split(k)
    return U(m) if odd else U(m) + X * U(m - 1)


def c_poly(k: int) -> Poly:
    return (a_poly(k).scale(k) - (X * b_poly(k - 1)).scale(2)).exact_div(ONE_MINUS_2X)


@dataclass(frozen=True)
class ReconcileSet:
    k: int
    A: Poly
    B: Poly
    C: Poly
    P: Poly


def reconcile_set(k: int) -> ReconcileSet:
    if k < 0:
        raise ValueError("k must be >= 0")
    return ReconcileSet(k, a_poly(k), b_poly(k), c_poly(k), p_numerator(k))


def cross_term(k: int) -> Poly:
    return c_poly(k) * a_poly(k - 1) - c_poly(k - 1) * a_poly(k)


def misindexed_cross_term_holds(k: int) -> bool:
    """Whether C_k A_{k+1} - C_{k-1} A_k = W_k holds (it does not for k = 2)."""
    return c_poly(k) * a_poly(k + 1) - c_poly(k - 1) * a_poly(k) == w_det(k)


def verify_reconciliation(k_max: int, *, k_min: int = 1, series_terms: int = 0) -> Report:
    """Run the identity chain for k_min <= k <= k_max.

    With ``series_terms > 0`` the final f_k = g_k link is also compared on
    that many power-series coefficients.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    rep = Report()
    for k in range(max(k_min, 0), k_max + 1):
        s = reconcile_set(k)
        rep.add("reconcile", "P_k = B_k C_k", k, s.P == s.B * s.C)
        rep.add("reconcile", "S_k = B_k C_k / U_k", k, s_sum_direct(k) == RatFunc(s.B * s.C, U(k)))
        rep.add("reconcile", "U_k = A_k B_k", k, U(k) == s.A * s.B)
        rep.add("reconcile", "W_k = B_k B_{k-1}", k, w_det(k) == s.B * b_poly(k - 1))
        rep.add("reconcile", "R_k = B_{k+1}/A_{k+1}", k, r_gf(k) == RatFunc(b_poly(k + 1), a_poly(k + 1)))
        if k >= 1:
            rep.add("reconcile", "C_k A_{k-1} - C_{k-1} A_k = W_k", k, cross_term(k) == w_det(k))
        f, g = f_balanced(k), g_balanced(k)
        chain = RatFunc(w_det(k + 1), a_poly(k + 1) * a_poly(k))
        rep.add("reconcile", "f_k = W_{k+1}/(A_{k+1} A_k) = g_k", k, f == chain == g)
        if series_terms:
            rep.add("reconcile", f"f_k = g_k on {series_terms} series terms", k,
                    series_expand(f, series_terms).terms == series_expand(g, series_terms).terms)
    rep.extend(c_divisibility_check(k_max, k_min=k_min))
    return rep


def c_divisibility_check(k_max: int, *, k_min: int = 1) -> Report:
    """Exact divisibility by 1 - 2x, tested by evaluating at x = 1/2.

    k A_k(1/2) = B_{k-1}(1/2) makes C_k a polynomial;
    k U_k(1/2) = W_k(1/2) does the same for P_k.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    rep = Report()
    for k in range(max(k_min, 0), k_max + 1):
        ca, cb = k * a_poly(k)(HALF), b_poly(k - 1)(HALF)
        rep.add("reconcile", "k A_k(1/2) = B_{k-1}(1/2)", k, ca == cb, f"{ca} vs {cb}")
        pu, pw = k * U(k)(HALF), w_det(k)(HALF)
        rep.add("reconcile", "k U_k(1/2) = W_k(1/2)", k, pu == pw, f"{pu} vs {pw}")
    return rep
