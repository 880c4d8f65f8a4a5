"""Brute-force ground truth: exhaustive strings, walks and lattice paths.

Exhaustive counters enumerate all 2^n step sequences in blocks of
consecutive integers (one block per leading-bit prefix) so work can be split
across threads; block counts are combined by integer addition and are
independent of the split.  The path counter is a small dynamic programme
that is checked against the exhaustive counter in the test suite.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

BUDGET_ENV = "KBALANCED_ENUM_BUDGET"
DEFAULT_BUDGET = 1 << 24
_BLOCK_BITS = 16


class BudgetExceededError(ValueError):
    """An exhaustive enumeration would visit more states than allowed."""


def enumeration_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return value


def _check_budget(n: int, budget: int | None) -> None:
    if n < 0:
        raise ValueError("length must be non-negative")
    limit = enumeration_budget() if budget is None else budget
    if 1 << n > limit:
        raise BudgetExceededError(f"2^{n} states exceed the enumeration budget of {limit}")


# -- strings ---------------------------------------------------------------

def delta(s: str) -> int:
    return s.count("1") - s.count("0")


def is_k_balanced_substrings(s: str, k: int) -> bool:
    """Definition check: every contiguous substring has |#1 - #0| <= k."""
    return all(abs(delta(s[i:j])) <= k for i in range(len(s)) for j in range(i + 1, len(s) + 1))


def is_k_balanced(s: str, k: int) -> bool:
    """Prefix-sum form: (max prefix sum) - (min prefix sum) <= k."""
    h = lo = hi = 0
    for c in s:
        if c == "1":
            h += 1
        elif c == "0":
            h -= 1
        else:
            raise ValueError(f"not a bit: {c!r}")
        lo, hi = min(lo, h), max(hi, h)
    return hi - lo <= k


def _steps(lo: int, hi: int, n: int) -> np.ndarray:
    """+1/-1 step matrix for the integers lo..hi-1 read as n-bit strings."""
    codes = np.arange(lo, hi, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    bits = (codes[:, None] >> shifts) & 1
    return (2 * bits - 1).astype(np.int8)


def _blocks(n: int, partitions: int | None) -> list[tuple[int, int]]:
    total = 1 << n
    if partitions is None:
        size = 1 << min(n, _BLOCK_BITS)
    else:
        if partitions < 1:
            raise ValueError("partitions must be >= 1")
        size = max(1, -(-total // partitions))
    return [(lo, min(lo + size, total)) for lo in range(0, total, size)]


def _run_blocks(fn, n: int, partitions: int | None, workers: int | None):
    blocks = _blocks(n, partitions)
    if workers and workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda b: fn(*b), blocks))
    return [fn(lo, hi) for lo, hi in blocks]


def _spreads(steps: np.ndarray) -> np.ndarray:
    if steps.shape[1] == 0:
        return np.zeros(steps.shape[0], dtype=np.int64)
    h = np.cumsum(steps, axis=1, dtype=np.int32)
    hi = np.maximum(h.max(axis=1), 0)
    lo = np.minimum(h.min(axis=1), 0)
    return (hi - lo).astype(np.int64)


@lru_cache(maxsize=64)
def _spread_histogram(n: int, partitions: int | None, workers: int | None) -> tuple[int, ...]:
    def block(lo, hi):
        return np.bincount(_spreads(_steps(lo, hi, n)), minlength=n + 1)

    parts = _run_blocks(block, n, partitions, workers)
    return tuple(int(v) for v in sum(parts))


def spread_histogram(n: int, *, budget: int | None = None, partitions: int | None = None,
                     workers: int | None = None) -> tuple[int, ...]:
    """``hist[s]`` = number of length-n strings whose prefix-sum spread is s."""
    _check_budget(n, budget)
    return _spread_histogram(n, partitions, workers)


def count_balanced_strings(k: int, n: int, *, budget: int | None = None,
                           partitions: int | None = None, workers: int | None = None) -> int:
    """Number of k-balanced strings of length n, over all 2^n strings."""
    if k < 0:
        raise ValueError("k must be >= 0")
    hist = spread_histogram(n, budget=budget, partitions=partitions, workers=workers)
    return sum(hist[: k + 1])


def count_balanced_strings_naive(k: int, n: int) -> int:
    """Pure-Python substring-definition count; only for small n."""
    return sum(is_k_balanced_substrings("".join(bits), k) for bits in product("01", repeat=n))


# -- walks -----------------------------------------------------------------

def count_walks(k: int, n: int, cover: bool, *, budget: int | None = None,
                partitions: int | None = None, workers: int | None = None) -> int:
    """Length-n walks from v_0 on C_k that do (cover) or do not visit every node."""
    if k < 3:
        raise ValueError("walks need k >= 3")
    _check_budget(n, budget)

    def block(lo, hi):
        steps = _steps(lo, hi, n).astype(np.int64)
        pos = np.zeros((steps.shape[0], n + 1), dtype=np.int64)
        if n:
            pos[:, 1:] = np.mod(np.cumsum(steps, axis=1), k)
        seen = np.ones(steps.shape[0], dtype=bool)
        for v in range(k):
            seen &= (pos == v).any(axis=1)
        hits = int(seen.sum())
        return hits if cover else (hi - lo) - hits

    return sum(_run_blocks(block, n, partitions, workers))


def walk_visits_all(k: int, bits: str) -> bool:
    node, seen = 0, {0}
    for b in bits:
        node = (node + (1 if b == "1" else -1)) % k
        seen.add(node)
    return len(seen) == k


# -- lattice paths ---------------------------------------------------------

TERMINALS = ("ground", "top", "any")


@dataclass(frozen=True)
class PathSpec:
    """Paths of u/d steps from height 0 that stay within [lower, upper].

    ``terminal`` is ``ground`` (end at 0), ``top`` (end at ``upper``) or
    ``any``.  Size counts steps, except for ``top`` where it is
    ``steps - upper``.
    """

    lower: int
    upper: int
    terminal: str = "ground"
    size: str = field(default="")

    def __post_init__(self):
        if not self.lower <= 0 <= self.upper:
            raise ValueError(f"bounds must satisfy lower <= 0 <= upper, got [{self.lower}, {self.upper}]")
        if self.terminal not in TERMINALS:
            raise ValueError(f"unknown terminal condition {self.terminal!r}")
        expected = "steps_minus_k" if self.terminal == "top" else "steps"
        if not self.size:
            object.__setattr__(self, "size", expected)
        elif self.size != expected:
            raise ValueError(f"terminal={self.terminal} requires size convention {expected}")

    def steps_for(self, n: int) -> int:
        return n + self.upper if self.terminal == "top" else n

    def accepts_end(self, h: int) -> bool:
        if self.terminal == "ground":
            return h == 0
        if self.terminal == "top":
            return h == self.upper
        return True


def count_paths(spec: PathSpec, n: int) -> int:
    """Dynamic programme over (step, height)."""
    if n < 0:
        raise ValueError("size must be non-negative")
    width = spec.upper - spec.lower + 1
    ways = [0] * width
    ways[-spec.lower] = 1
    for _ in range(spec.steps_for(n)):
        nxt = [0] * width
        for i, c in enumerate(ways):
            if c:
                if i + 1 < width:
                    nxt[i + 1] += c
                if i > 0:
                    nxt[i - 1] += c
        ways = nxt
    return sum(c for i, c in enumerate(ways) if spec.accepts_end(i + spec.lower))


def count_paths_exhaustive(spec: PathSpec, n: int, *, budget: int | None = None) -> int:
    """Same count by checking every one of the 2^steps step sequences."""
    steps = spec.steps_for(n)
    _check_budget(steps, budget)
    total = 0
    for lo, hi in _blocks(steps, None):
        s = _steps(lo, hi, steps)
        if steps:
            h = np.cumsum(s, axis=1, dtype=np.int32)
            ok = (h.min(axis=1) >= spec.lower) & (h.max(axis=1) <= spec.upper)
            end = h[:, -1]
        else:
            ok = np.ones(s.shape[0], dtype=bool)
            end = np.zeros(s.shape[0], dtype=np.int32)
        if spec.terminal == "ground":
            ok &= end == 0
        elif spec.terminal == "top":
            ok &= end == spec.upper
        total += int(ok.sum())
    return total


def count_extent_paths(k: int, n: int) -> int:
    """Paths of n steps whose vertical extent (max - min height) is at most k.

    Tracks (height above running minimum, running extent) rather than the
    strings themselves.
    """
    if k < 0 or n < 0:
        raise ValueError("k and n must be non-negative")
    states = {(0, 0): 1}
    for _ in range(n):
        nxt: dict[tuple[int, int], int] = {}
        for (pos, ext), c in states.items():
            up = (pos + 1, max(ext, pos + 1))
            down = (pos - 1, ext) if pos > 0 else (0, ext + 1)
            for st in (up, down):
                if st[1] <= k:
                    nxt[st] = nxt.get(st, 0) + c
        states = nxt
    return sum(states.values())


# -- dispatch --------------------------------------------------------------

@dataclass(frozen=True)
class CountQuery:
    what: str
    k: int
    n: int
    cover: bool = False
    lower: int = 0
    upper: int = 0
    terminal: str = "ground"


def count(query: CountQuery) -> int:
    if query.n < 0:
        raise ValueError("n must be non-negative")
    if query.what == "strings":
        return count_balanced_strings(query.k, query.n)
    if query.what == "walks":
        return count_walks(query.k, query.n, query.cover)
    if query.what == "paths":
        return count_paths(PathSpec(query.lower, query.upper, query.terminal), query.n)
    if query.what == "extent":
        return count_extent_paths(query.k, query.n)
    raise ValueError(f"unknown count target {query.what!r}")
