"""Exact univariate integer polynomials, reduced rational functions and
power-series expansion.

Everything here is immutable.  Polynomials are dense: ``coeffs[i]`` is the
coefficient of ``x**i`` and the top stored coefficient is never zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union


class InexactDivisionError(ArithmeticError):
    """An integer polynomial division left a remainder."""


class NotIntegralError(ArithmeticError):
    """A power-series coefficient came out non-integral."""


Scalar = Union[int, Fraction]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Dense polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(coeffs)
        for a in c:
            if not isinstance(a, int):
                raise TypeError(f"polynomial coefficients must be int, got {type(a).__name__}")
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> Poly:
        if n < 0:
            raise ValueError("negative exponent")
        return cls((0,) * n + (c,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    # -- basic queries ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 standing in for the degree of the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def lowest(self) -> int:
        """Lowest-order nonzero coefficient (0 for the zero polynomial)."""
        for a in self.coeffs:
            if a:
                return a
        return 0

    def content(self) -> int:
        g = 0
        for a in self.coeffs:
            g = gcd(g, a)
        return g

    def primitive(self) -> Poly:
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return Poly(a // c for a in self.coeffs)

    def __call__(self, x: Scalar) -> Scalar:
        acc: Scalar = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    # -- arithmetic -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self) -> Poly:
        return Poly(-a for a in self.coeffs)

    def __add__(self, other) -> Poly:
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([u + (b[i] if i < len(b) else 0) for i, u in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> Poly:
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return Poly(out)

    def __rmul__(self, other) -> Poly:
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: int) -> Poly:
        return Poly(c * a for a in self.coeffs)

    def shift(self, n: int) -> Poly:
        """Multiply by ``x**n``."""
        if n < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return Poly((0,) * n + self.coeffs)

    def divmod_exact(self, other: Poly) -> tuple[Poly, Poly]:
        """Long division over the integers.

        Requires every quotient coefficient to be integral, which always holds
        when ``other`` has leading coefficient +-1.
        """
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq, lc = other.degree, other.lc
        if len(rem) - 1 < dq:
            return Poly(), self
        quot = [0] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q, r = divmod(c, lc)
            if r:
                raise InexactDivisionError(f"{self} / {other}: non-integral quotient")
            quot[i - dq] = q
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] -= q * b
        return Poly(quot), Poly(rem)

    def exact_div(self, other: Poly | int) -> Poly:
        """Quotient ``self / other``, raising if the division leaves a remainder."""
        if isinstance(other, int):
            other = Poly.const(other)
        q, r = self.divmod_exact(other)
        if r:
            raise InexactDivisionError(f"({self}) is not divisible by ({other})")
        return q

    def pseudo_rem(self, other: Poly) -> Poly:
        """Remainder of ``lc(other)**(deg self - deg other + 1) * self`` by ``other``."""
        if other.is_zero():
            raise ZeroDivisionError("pseudo-remainder by zero")
        rem = list(self.coeffs)
        dq, lc = other.degree, other.lc
        if len(rem) - 1 < dq:
            return self
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            rem = [lc * a for a in rem]
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
            rem[i] = 0
        return Poly(rem)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mag = abs(a)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if a < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _as_poly(v) -> Poly | None:
    if isinstance(v, Poly):
        return v
    if isinstance(v, int):
        return Poly.const(v)
    return None


X = Poly.x()
ONE = Poly.const(1)
ZERO = Poly()


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if q.is_zero():
        return p.primitive()
    if p.is_zero():
        return q.primitive()
    a, b = p.primitive(), q.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = a.pseudo_rem(b)
        a, b = b, (r.primitive() if r else r)
    return a.primitive()


class RatFunc:
    """Quotient of two integer polynomials, kept fully reduced.

    Canonical form: ``gcd(num, den)`` is constant, the integer contents of
    ``num`` and ``den`` are coprime, and the lowest-order nonzero coefficient
    of ``den`` is positive.  Two equal rational functions therefore have
    identical ``num`` and ``den``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly | int, den: Poly | int = 1):
        num = _as_poly(num)
        den = _as_poly(den)
        if num is None or den is None:
            raise TypeError("RatFunc parts must be Poly or int")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = ZERO, ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            c = gcd(num.content(), den.content())
            if den.lowest() < 0:
                c = -c
            if c != 1:
                num, den = num.exact_div(c), den.exact_div(c)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def equals_cross(self, other: RatFunc) -> bool:
        """Equality by cross-multiplication; independent of normalisation."""
        return self.num * other.den == other.num * self.den

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __add__(self, other):
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _as_rat(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(1) / (self ** -n)
        return RatFunc(self.num ** n, self.den ** n)

    def __repr__(self):
        return f"RatFunc({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    def __str__(self):
        if self.den == ONE:
            return f"({self.num})"
        return f"({self.num}) / ({self.den})"


def _as_rat(v) -> RatFunc | None:
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, (Poly, int)):
        return RatFunc(v)
    return None


def poly_arith(op: str, p: Poly, q: Poly | int) -> Poly:
    """Dispatch form of the polynomial ring operations."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "scalar_mul":
        if not isinstance(q, int):
            raise TypeError("scalar_mul needs an integer scalar")
        return p.scale(q)
    if op == "shift":
        if not isinstance(q, int):
            raise TypeError("shift needs an integer amount")
        return p.shift(q)
    raise ValueError(f"unknown polynomial operation {op!r}")


def rat_arith(op: str, a: RatFunc, b: RatFunc) -> RatFunc:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown rational-function operation {op!r}")


@dataclass(frozen=True)
class Series:
    """First ``len(terms)`` Taylor coefficients of a generating function at 0."""

    terms: tuple
    origin: str = ""

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def __add__(self, other: Series) -> Series:
        n = min(len(self), len(other))
        return Series(tuple(a + b for a, b in zip(self.terms[:n], other.terms[:n])))


def series_expand(f: RatFunc, n_terms: int, *, integral: bool = True, origin: str = "") -> Series:
    """Expand ``f`` as a power series to ``n_terms`` coefficients.

    Uses the linear recurrence ``den * a = num``.  With ``integral=True``
    (the default) a non-integral coefficient raises ``NotIntegralError``;
    otherwise coefficients are returned as ``Fraction`` where needed.
    """
    if n_terms < 0:
        raise ValueError("n_terms must be non-negative")
    d0 = f.den[0]
    if d0 == 0:
        raise ValueError(f"{f} has no power-series expansion at 0")
    den = f.den.coeffs
    terms: list = []
    for n in range(n_terms):
        acc = f.num[n]
        for i in range(1, min(n, len(den) - 1) + 1):
            acc -= den[i] * terms[n - i]
        if d0 == 1:
            a = acc
        elif d0 == -1:
            a = -acc
        else:
            a = Fraction(acc, d0)
            if a.denominator == 1:
                a = a.numerator
            elif integral:
                raise NotIntegralError(f"coefficient {n} of {f} is {a}")
        terms.append(a)
    return Series(tuple(terms), origin or str(f))


def from_coeffs(num: Sequence[int], den: Sequence[int] = (1,)) -> RatFunc:
    return RatFunc(Poly(num), Poly(den))
