"""Transfer-matrix route to the walk and balanced-string generating functions.

S_k is the sum of the entries of (I_k - x A_k)^{-1}, with A_k the adjacency
matrix of the k-vertex path graph.  Bad walks on the circular digraph C_k
(walks from v_0 that miss some node) have generating function
S_{k-1} - S_{k-2}, and k-balanced strings have f_k = S_{k+1} - S_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bigpoly import ONE, X, ZERO, Poly, RatFunc
from .chebyshev import U
from .report import Report

ONE_MINUS_2X = Poly((1, -2))


def adjacency(k: int) -> list[list[int]]:
    """Tridiagonal 0/1 adjacency matrix of the path graph on k vertices."""
    if k < 1:
        raise ValueError("adjacency matrix needs k >= 1")
    return [[1 if abs(i - j) == 1 else 0 for j in range(k)] for i in range(k)]


def resolvent_polys(k: int) -> list[list[Poly]]:
    """Entries of I_k - x A_k as polynomials."""
    if k == 0:
        return []
    a = adjacency(k)
    return [[(ONE if i == j else ZERO) - X.scale(a[i][j]) for j in range(k)] for i in range(k)]


@dataclass(frozen=True)
class RatMatrix:
    rows: tuple[tuple[RatFunc, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        n = self.dim
        return RatMatrix(tuple(
            tuple(sum((self.rows[i][t] * other.rows[t][j] for t in range(n)), RatFunc(0))
                  for j in range(n))
            for i in range(n)
        ))

    def entry_sum(self) -> RatFunc:
        total = RatFunc(0)
        for row in self.rows:
            for e in row:
                total = total + e
        return total

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls(tuple(tuple(RatFunc(int(i == j)) for j in range(n)) for i in range(n)))


def resolvent(k: int) -> RatMatrix:
    return RatMatrix(tuple(tuple(RatFunc(e) for e in row) for row in resolvent_polys(k)))


def bareiss_det(m: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a square polynomial matrix by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return ONE
    a = [list(row) for row in m]
    sign, prev = 1, ONE
    for p in range(n - 1):
        if a[p][p].is_zero():
            for r in range(p + 1, n):
                if not a[r][p].is_zero():
                    a[p], a[r] = a[r], a[p]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(p + 1, n):
            for j in range(p + 1, n):
                a[i][j] = (a[p][p] * a[i][j] - a[i][p] * a[p][j]).exact_div(prev)
            a[i][p] = ZERO
        prev = a[p][p]
    return a[n - 1][n - 1].scale(sign)


def fraction_free_solve(m: Sequence[Sequence[Poly]], b: Sequence[Poly]) -> tuple[list[Poly], Poly]:
    """Solve ``m y = det(m) b`` over Z[x]; returns (y, det).

    Forward elimination is Bareiss on the augmented matrix, so the last pivot
    is the determinant.  Back substitution stays in Z[x] because each
    ``det * x_i`` is a Cramer numerator.
    """
    n = len(m)
    if n == 0:
        return [], ONE
    a = [list(row) + [b[i]] for i, row in enumerate(m)]
    sign, prev = 1, ONE
    for p in range(n):
        if a[p][p].is_zero():
            for r in range(p + 1, n):
                if not a[r][p].is_zero():
                    a[p], a[r] = a[r], a[p]
                    sign = -sign
                    break
            else:
                raise ZeroDivisionError("singular system")
        for i in range(p + 1, n):
            for j in range(p + 1, n + 1):
                a[i][j] = (a[p][p] * a[i][j] - a[i][p] * a[p][j]).exact_div(prev)
            a[i][p] = ZERO
        prev = a[p][p]
    det = a[n - 1][n - 1]
    y = [ZERO] * n
    for i in range(n - 1, -1, -1):
        acc = det * a[i][n]
        for j in range(i + 1, n):
            acc = acc - a[i][j] * y[j]
        y[i] = acc.exact_div(a[i][i])
    if sign < 0:
        det = -det
        y = [-v for v in y]
    return y, det


def det_resolvent(k: int) -> Poly:
    """det(I_k - x A_k); equals U_k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return bareiss_det(resolvent_polys(k))


def solve_resolvent(k: int) -> list[RatFunc]:
    """The solution vector of (I_k - x A_k) v = (1, ..., 1)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    y, det = fraction_free_solve(resolvent_polys(k), [ONE] * k)
    return [RatFunc(v, det) for v in y]


def resolvent_inverse(k: int) -> RatMatrix:
    m = resolvent_polys(k)
    cols = []
    for j in range(k):
        e = [ONE if i == j else ZERO for i in range(k)]
        y, det = fraction_free_solve(m, e)
        cols.append([RatFunc(v, det) for v in y])
    return RatMatrix(tuple(tuple(cols[j][i] for j in range(k)) for i in range(k)))


def s_sum_direct(k: int) -> RatFunc:
    """S_k from an exact linear solve; a single division at the end."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return RatFunc(0)
    y, det = fraction_free_solve(resolvent_polys(k), [ONE] * k)
    total = ZERO
    for v in y:
        total = total + v
    return RatFunc(total, det)


def w_det(k: int) -> Poly:
    """W_k from W_0 = 0, W_1 = 1, W_k = U_{k-1} + x W_{k-1}."""
    if k < 0:
        raise ValueError("k must be >= 0")
    w = ZERO
    for j in range(1, k + 1):
        w = U(j - 1) + X * w
    return w


def w_closed(k: int) -> Poly:
    """W_k in product form: (U_m + x U_{m-1}) U_{m-1} or (U_m + x U_{m-1}) U_m."""
    if k < 0:
        raise ValueError("k must be >= 0")
    m, odd = divmod(k, 2)
    head = U(m) + X * U(m - 1)
    return head * (U(m) if odd else U(m - 1))


def w_cramer(k: int) -> Poly:
    """W_k as the determinant of I_k - x A_k with its first column set to ones."""
    m = resolvent_polys(k)
    for row in m:
        row[0] = ONE
    return bareiss_det(m)


def p_numerator(k: int) -> Poly:
    """P_k = (k U_k - 2x W_k) / (1 - 2x), an exact polynomial division."""
    return (U(k).scale(k) - (X * w_det(k)).scale(2)).exact_div(ONE_MINUS_2X)


def s_closed(k: int) -> RatFunc:
    """S_k = (k U_k - 2x W_k) / ((1 - 2x) U_k)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return RatFunc(0)
    return RatFunc(U(k).scale(k) - (X * w_det(k)).scale(2), ONE_MINUS_2X * U(k))


def f_balanced(k: int) -> RatFunc:
    """Generating function of k-balanced strings, S_{k+1} - S_k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return s_closed(k + 1) - s_closed(k)


def _need_walk_k(k: int) -> None:
    if k < 3:
        raise ValueError(f"walks on C_{k} are degenerate; need k >= 3")


def bad_walk_gf(k: int) -> RatFunc:
    """Walks from v_0 on C_k that miss at least one node: S_{k-1} - S_{k-2}."""
    _need_walk_k(k)
    return s_closed(k - 1) - s_closed(k - 2)


def good_walk_gf(k: int) -> RatFunc:
    """Walks from v_0 on C_k visiting all k nodes; the complement in 1/(1-2x)."""
    _need_walk_k(k)
    return RatFunc(ONE, ONE_MINUS_2X) - bad_walk_gf(k)


@dataclass(frozen=True)
class Walk:
    k: int
    nodes: tuple[int, ...]

    def __post_init__(self):
        _need_walk_k(self.k)
        if not self.nodes or self.nodes[0] != 0:
            raise ValueError("walks start at v_0")
        for a, b in zip(self.nodes, self.nodes[1:]):
            if not 0 <= b < self.k or (b - a) % self.k not in (1, self.k - 1):
                raise ValueError(f"v{a} -> v{b} is not an arc of C_{self.k}")

    @property
    def length(self) -> int:
        return len(self.nodes) - 1


def encode(walk: Walk) -> str:
    """Bit 1 for each clockwise step, 0 for each counter-clockwise step."""
    return "".join("1" if (b - a) % walk.k == 1 else "0" for a, b in zip(walk.nodes, walk.nodes[1:]))


def decode(k: int, bits: str) -> Walk:
    _need_walk_k(k)
    nodes = [0]
    for b in bits:
        if b == "1":
            nodes.append((nodes[-1] + 1) % k)
        elif b == "0":
            nodes.append((nodes[-1] - 1) % k)
        else:
            raise ValueError(f"not a bit: {b!r}")
    return Walk(k, tuple(nodes))


def walk_string_codec(direction: str, k: int, value):
    if direction == "encode":
        walk = value if isinstance(value, Walk) else Walk(k, tuple(value))
        if walk.k != k:
            raise ValueError("walk was built for a different k")
        return encode(walk)
    if direction == "decode":
        return decode(k, value)
    raise ValueError(f"unknown codec direction {direction!r}")


def verify_transfer(k_max: int) -> Report:
    """Consistency of the transfer-matrix route for 0 <= k <= k_max."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    rep = Report()
    for k in range(k_max + 1):
        rep.add("transfer", "det(I - xA) = U_k", k, det_resolvent(k) == U(k))
        rep.add("transfer", "S_k direct solve = closed form", k, s_sum_direct(k) == s_closed(k))
        rep.add("transfer", "W_k recurrence = product form", k, w_det(k) == w_closed(k))
        if k >= 1:
            rep.add("transfer", "W_k recurrence = Cramer determinant", k, w_det(k) == w_cramer(k))
            xs = solve_resolvent(k)
            rep.add("transfer", "x_1 = x_k", k, xs[0] == xs[-1])
            rep.add("transfer", "weighted row sum = k", k, weighted_row_sum(xs) == RatFunc(k))
    return rep


def weighted_row_sum(xs: Sequence[RatFunc]) -> RatFunc:
    """(1-x) x_1 + (1-2x)(x_2 + ... + x_{k-1}) + (1-x) x_k."""
    k = len(xs)
    if k == 1:
        # one equation, no off-diagonal terms: the sum is x_1 itself
        return xs[0]
    end = RatFunc(Poly((1, -1)))
    mid = RatFunc(ONE_MINUS_2X)
    total = end * xs[0] + end * xs[-1]
    for v in xs[1:-1]:
        total = total + mid * v
    return total
