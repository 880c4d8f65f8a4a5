"""Height-restricted lattice paths and the R_k / g_k route to k-balanced strings.

Paths use steps u = (1, 1) and d = (1, -1).  Families, for bound k:

===========  ==================  ============  =========================
family       bounds              ends at       closed form
===========  ==================  ============  =========================
F            0 .. k              0             U_k / U_{k+1}
G            0 .. k              k             1 / U_{k+1}
Fbar         -k .. k             0             U_k / T_{k+1}
Gbar         -k .. k             k             1 / T_{k+1}
H            0 .. k              anywhere      see ``_h``
Hbar         -k .. k             anywhere      see ``_hbar``
===========  ==================  ============  =========================

G and Gbar count size as (steps - k).  Everything else counts steps.
"""

from __future__ import annotations

import enum
from functools import lru_cache

from .bigpoly import ONE, X, Poly, RatFunc, poly_gcd
from .chebyshev import T, U
from .report import Report

X2 = X * X
ONE_PLUS_2X = Poly((1, 2))


class PathFamily(str, enum.Enum):
    F = "F"
    G = "G"
    Fbar = "Fbar"
    Gbar = "Gbar"
    H = "H"
    Hbar = "Hbar"
    R = "R"
    g = "g"


def split(k: int) -> tuple[int, bool]:
    """k -> (m, is_odd) with k = 2m or k = 2m + 1.  Floors for negative k."""
    m, r = divmod(k, 2)
    return m, bool(r)


def _h(k: int) -> RatFunc:
    if k == -1:
        return RatFunc(0)
    m, odd = split(k)
    if odd:
        return RatFunc(U(m), U(m + 1) - X * U(m))
    return RatFunc(U(m) + X * U(m - 1), T(m + 1))


def _hbar(k: int) -> RatFunc:
    m, odd = split(k)
    if odd:
        return RatFunc(ONE_PLUS_2X * U(m) ** 2, T(2 * m + 2))
    return RatFunc((U(m) + X * U(m - 1)) ** 2, T(2 * m + 1))


@lru_cache(maxsize=None)
def _family(family: PathFamily, k: int) -> RatFunc:
    if family is PathFamily.F:
        return RatFunc(U(k), U(k + 1))
    if family is PathFamily.G:
        return RatFunc(ONE, U(k + 1))
    if family is PathFamily.Fbar:
        return RatFunc(U(k), T(k + 1))
    if family is PathFamily.Gbar:
        return RatFunc(ONE, T(k + 1))
    if family is PathFamily.H:
        return _h(k)
    if family is PathFamily.Hbar:
        return _hbar(k)
    if family is PathFamily.R:
        return r_gf(k)
    return g_balanced(k)


def family_gf(family, k: int) -> RatFunc:
    """Reduced closed-form generating function of ``family`` at bound ``k``."""
    try:
        family = PathFamily(family)
    except ValueError:
        raise ValueError(f"unknown path family {family!r}") from None
    lo = -1 if family in (PathFamily.H, PathFamily.R) else 0
    if k < lo:
        raise ValueError(f"{family.value}_{k} is undefined")
    return _family(family, k)


def r_gf(k: int) -> RatFunc:
    """R_{2m} = U_m / T_{m+1}, R_{2m+1} = (U_{m+1} + x U_m) / (U_{m+1} - x U_m); R_{-1} = 1."""
    if k < -1:
        raise ValueError("R_k needs k >= -1")
    if k == -1:
        return RatFunc(1)
    m, odd = split(k)
    if odd:
        return RatFunc(U(m + 1) + X * U(m), U(m + 1) - X * U(m))
    return RatFunc(U(m), T(m + 1))


def theorem2_parts(k: int) -> tuple[Poly, Poly]:
    """Unreduced numerator and denominator of R_k R_{k-1} in the even/odd form."""
    m, odd = split(k)
    if odd:
        return (U(m + 1) + X * U(m)) * U(m), (U(m + 1) - X * U(m)) * T(m + 1)
    return U(m) * (U(m) + X * U(m - 1)), T(m + 1) * (U(m) - X * U(m - 1))


def g_balanced(k: int) -> RatFunc:
    """Generating function of k-balanced strings, H_k (1 + x H_{k-1}).

    Cross-checked against R_k R_{k-1} and the explicit even/odd product;
    a disagreement means a formula is wrong, so it raises.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    via_h = _h(k) * (1 + RatFunc(X) * _h(k - 1))
    via_r = r_gf(k) * r_gf(k - 1)
    num, den = theorem2_parts(k)
    if via_h != via_r or via_h != RatFunc(num, den):
        raise ArithmeticError(f"g_{k}: decomposition routes disagree")
    return via_h


def lowest_terms(k: int) -> bool:
    """Whether the even/odd product form of g_k is already reduced."""
    num, den = theorem2_parts(k)
    return poly_gcd(num, den).degree == 0


def verify_table_recurrences(k_max: int) -> Report:
    """Check every defining recurrence of the path families for 1 <= k <= k_max."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    rep = Report()
    x, x2 = RatFunc(X), RatFunc(X2)
    F = lambda j: family_gf("F", j)  # noqa: E731
    H = lambda j: family_gf("H", j)  # noqa: E731
    for k in range(1, k_max + 1):
        fk, fk1 = F(k), F(k - 1)
        rep.add("tables", "F_k = 1 + x^2 F_{k-1} F_k", k, fk == 1 + x2 * fk1 * fk)

        prod = RatFunc(1)
        for i in range(1, k + 1):
            prod = prod * F(i)
        rep.add("tables", "G_k = F_1 ... F_k", k, family_gf("G", k) == prod)
        rep.add("tables", "G_k = 1/U_{k+1}", k, prod == RatFunc(ONE, U(k + 1)))

        fbar = family_gf("Fbar", k)
        rep.add("tables", "Fbar_k = 1 + 2x^2 F_{k-1} Fbar_k", k, fbar == 1 + 2 * x2 * fk1 * fbar)
        rep.add("tables", "Fbar_k = U_k/(U_k - 2x^2 U_{k-1})", k,
                fbar == RatFunc(U(k), U(k) - (X2 * U(k - 1)).scale(2)))

        tele = fbar
        for i in range(1, k):
            tele = tele * F(i)
        rep.add("tables", "Gbar_k = Fbar_k F_{k-1} ... F_1", k, family_gf("Gbar", k) == tele)

        hk, hk1 = H(k), H(k - 1)
        rep.add("tables", "H_k = 1 + x H_{k-1} + x^2 F_{k-1} H_k", k,
                hk == 1 + x * hk1 + x2 * fk1 * hk)
        hbar = family_gf("Hbar", k)
        rep.add("tables", "Hbar_k = 1 + 2x H_{k-1} + 2x^2 F_{k-1} Hbar_k", k,
                hbar == 1 + 2 * x * hk1 + 2 * x2 * fk1 * hbar)
        rep.add("tables", "H_k (1 + x H_{k-1}) = R_k R_{k-1}", k,
                hk * (1 + x * hk1) == r_gf(k) * r_gf(k - 1))
    return rep


def verify_r_remarks(m_max: int) -> Report:
    """R_{2m} = Fbar_m, R_{2m+1} = 1 + 2x H_{2m+1} and lowest terms of g_k."""
    rep = Report()
    x = RatFunc(X)
    for m in range(m_max + 1):
        rep.add("tables", "R_2m = Fbar_m", m, r_gf(2 * m) == family_gf("Fbar", m))
        rep.add("tables", "R_2m+1 = 1 + 2x H_2m+1", m,
                r_gf(2 * m + 1) == 1 + 2 * x * family_gf("H", 2 * m + 1))
    for k in range(2 * m_max + 2):
        rep.add("tables", "g_k product form is in lowest terms", k, lowest_terms(k))
    return rep
