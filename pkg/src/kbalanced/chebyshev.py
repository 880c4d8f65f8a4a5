"""Combinatorial Chebyshev polynomials T_k(x), U_k(x).

These are the reversed, integer-coefficient cousins of the classical
polynomials: ``T_k(x) = 2 x^k T_k(1/(2x))`` and ``U_k(x) = x^k U_k(1/(2x))``.
Both satisfy ``P_k = P_{k-1} - x^2 P_{k-2}``; they differ in the start
values (T_0 = 2, T_1 = 1; U_0 = U_1 = 1).  Running the U recurrence back
one step gives U_{-1} = 0, which we use throughout.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from math import comb

from .bigpoly import ONE, X, ZERO, Poly, poly_gcd
from .report import Report

X2 = X * X


class ChebKind(str, enum.Enum):
    T = "T"
    U = "U"


def _kind(kind) -> ChebKind:
    try:
        return ChebKind(kind.value if isinstance(kind, ChebKind) else kind)
    except ValueError:
        raise ValueError(f"unknown Chebyshev kind {kind!r}") from None


@lru_cache(maxsize=None)
def _by_recurrence(kind: ChebKind, k: int) -> Poly:
    if kind is ChebKind.U:
        if k == -1:
            return ZERO
        if k in (0, 1):
            return ONE
    else:
        if k == 0:
            return Poly.const(2)
        if k == 1:
            return ONE
    return _by_recurrence(kind, k - 1) - X2 * _by_recurrence(kind, k - 2)


def cheb(kind, k: int) -> Poly:
    """T_k or U_k from the three-term recurrence (memoised)."""
    kind = _kind(kind)
    lo = -1 if kind is ChebKind.U else 0
    if k < lo:
        raise ValueError(f"{kind.value}_{k} is undefined (need k >= {lo})")
    # fill the cache bottom-up so deep indices do not recurse deeply
    for j in range(lo, k):
        _by_recurrence(kind, j)
    return _by_recurrence(kind, k)


def U(k: int) -> Poly:
    return cheb(ChebKind.U, k)


def T(k: int) -> Poly:
    return cheb(ChebKind.T, k)


def cheb_explicit(kind, k: int) -> Poly:
    """T_k or U_k assembled from the alternating binomial sums."""
    kind = _kind(kind)
    if k < 0:
        raise ValueError("explicit sums need k >= 0")
    coeffs = [0] * (2 * (k // 2) + 1)
    for j in range(k // 2 + 1):
        c = comb(k - j, j)
        if kind is ChebKind.T:
            # C(k-j-1, j-1) vanishes at j = 0 except for k = 0, where
            # C(-1, -1) = 1 gives T_0 = 2
            c += comb(k - j - 1, j - 1) if j >= 1 else (1 if k == 0 else 0)
        coeffs[2 * j] = (-1) ** j * c
    return Poly(coeffs)


def cheb_identity_check(k_max: int) -> Report:
    """Check the identity stock used elsewhere, for 0 <= k <= k_max.

    * U_{2k} = U_k^2 - x^2 U_{k-1}^2
    * U_{2k+1} = U_k^2 - 2x^2 U_k U_{k-1}
    * T_{k+1} = U_k - 2x^2 U_{k-1}
    * T_{k+1} = U_{k+1} - x^2 U_{k-1}
    * gcd(U_k, U_{k-1}) = 1
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    rep = Report()
    for k in range(k_max + 1):
        u, u1 = U(k), U(k - 1)
        rep.add("cheb", "U_2k = U_k^2 - x^2 U_{k-1}^2", k, U(2 * k) == u * u - X2 * u1 * u1)
        rep.add("cheb", "U_2k+1 = U_k^2 - 2x^2 U_k U_{k-1}", k,
                U(2 * k + 1) == u * u - (X2 * u * u1).scale(2))
        rep.add("cheb", "T_k+1 = U_k - 2x^2 U_{k-1}", k, T(k + 1) == u - (X2 * u1).scale(2))
        rep.add("cheb", "T_k+1 = U_k+1 - x^2 U_{k-1}", k, T(k + 1) == U(k + 1) - X2 * u1)
        rep.add("cheb", "gcd(U_k, U_{k-1}) = 1", k, poly_gcd(u, u1) == ONE)
    return rep


# rows k = 0..7 of the standard table, lowest degree first
GOLDEN_TABLE: dict[tuple[str, int], tuple[int, ...]] = {
    ("T", 0): (2,),
    ("T", 1): (1,),
    ("T", 2): (1, 0, -2),
    ("T", 3): (1, 0, -3),
    ("T", 4): (1, 0, -4, 0, 2),
    ("T", 5): (1, 0, -5, 0, 5),
    ("T", 6): (1, 0, -6, 0, 9, 0, -2),
    ("T", 7): (1, 0, -7, 0, 14, 0, -7),
    ("U", 0): (1,),
    ("U", 1): (1,),
    ("U", 2): (1, 0, -1),
    ("U", 3): (1, 0, -2),
    ("U", 4): (1, 0, -3, 0, 1),
    ("U", 5): (1, 0, -4, 0, 3),
    ("U", 6): (1, 0, -5, 0, 6, 0, -1),
    ("U", 7): (1, 0, -6, 0, 10, 0, -4),
}


def golden_table_check() -> Report:
    """Both constructions against the tabulated rows k = 0..7."""
    rep = Report()
    for (kind, k), coeffs in GOLDEN_TABLE.items():
        want = Poly(coeffs)
        rep.add("cheb", f"{kind}_k recurrence matches table", k, cheb(kind, k) == want)
        rep.add("cheb", f"{kind}_k explicit sum matches table", k, cheb_explicit(kind, k) == want)
    return rep
