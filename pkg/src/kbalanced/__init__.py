"""Exact generating functions for k-balanced binary strings, covering walks on
circular digraphs and height-restricted lattice paths."""

from .bigpoly import Poly, RatFunc, Series, poly_gcd, series_expand
from .chebyshev import ChebKind, cheb, cheb_explicit
from .lattice import PathFamily, family_gf, g_balanced, r_gf
from .reconcile import reconcile_set
from .transfer import bad_walk_gf, f_balanced, good_walk_gf, s_closed, s_sum_direct

__all__ = [
    "ChebKind",
    "PathFamily",
    "Poly",
    "RatFunc",
    "Series",
    "bad_walk_gf",
    "cheb",
    "cheb_explicit",
    "f_balanced",
    "family_gf",
    "g_balanced",
    "good_walk_gf",
    "poly_gcd",
    "r_gf",
    "reconcile_set",
    "s_closed",
    "s_sum_direct",
    "series_expand",
]

__version__ = "0.1.0"
