"""Integer polynomials and reduced rational functions in one variable z.

Coefficients are Python ints (constant term first), so nothing overflows.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence, Tuple, Union


def _trim(cs) -> Tuple[int, ...]:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class IntPoly:
    """Polynomial with integer coefficients; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim(int(c) for c in coeffs)

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def z(cls) -> "IntPoly":
        return cls((0, 1))

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else "+"
            else:
                coef = f"{c:+d}"
            terms.append(f"{coef}{mono}")
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self), len(other))
        return IntPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self or not other:
            return IntPoly()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def primitive(self) -> "IntPoly":
        """Divide by the content; leading coefficient made positive."""
        c = self.content()
        if c == 0:
            return IntPoly()
        if self.coeffs[-1] < 0:
            c = -c
        return IntPoly(a // c for a in self.coeffs)

    def derivative(self) -> "IntPoly":
        return IntPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def pseudo_rem(self, other: "IntPoly") -> "IntPoly":
        """Remainder of lc(other)^k * self divided by other."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db, lb = other.degree, other.coeffs[-1]
        while len(r) - 1 >= db and any(r):
            lr = r[-1]
            shift = len(r) - 1 - db
            r = [lb * c for c in r]
            for j, b in enumerate(other.coeffs):
                r[shift + j] -= lr * b
            r = list(_trim(r))
        return IntPoly(r)

    def divexact(self, other: "IntPoly") -> "IntPoly":
        """Exact quotient in Z[z]; raises if ``other`` does not divide ``self``."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db, lb = other.degree, other.coeffs[-1]
        if len(r) - 1 < db:
            if any(r):
                raise ArithmeticError("inexact polynomial division")
            return IntPoly()
        q = [0] * (len(r) - db)
        for k in range(len(q) - 1, -1, -1):
            c, rem = divmod(r[k + db], lb)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    r[k + j] -= c * b
        if any(r):
            raise ArithmeticError("inexact polynomial division")
        return IntPoly(q)


def _as_poly(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Greatest common divisor in Z[z], primitive with positive leading coefficient."""
    a, b = a.primitive(), b.primitive()
    if not a:
        return b
    if not b:
        return a
    if a.degree < b.degree:
        a, b = b, a
    while b:
        a, b = b, a.pseudo_rem(b).primitive()
    return a.primitive()


def geometric(k: int) -> IntPoly:
    """1 + z + ... + z^(k-1)."""
    return IntPoly([1] * k)


class RationalSeries:
    """Reduced quotient num/den of integer polynomials.

    Normalisation: gcd(num, den) = 1, the common integer content is removed
    and the lowest nonzero coefficient of den is positive (so den(0) > 0 for
    every growth series).
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = _as_poly(num), _as_poly(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.divexact(g), den.divexact(g)
        c = gcd(num.content(), den.content())
        low = next(x for x in den.coeffs if x)
        if low < 0:
            c = -c
        self.num = IntPoly(x // c for x in num.coeffs)
        self.den = IntPoly(x // c for x in den.coeffs)

    def __repr__(self):
        return f"RationalSeries({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __eq__(self, other):
        if isinstance(other, (int, IntPoly)):
            other = RationalSeries(other)
        return (
            isinstance(other, RationalSeries) and self.num == other.num and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def is_polynomial(self) -> bool:
        return self.den.degree == 0 and abs(self.den[0]) == 1

    def __add__(self, other):
        other = _as_rational(other)
        return RationalSeries(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalSeries(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_rational(other))

    def __rsub__(self, other):
        return _as_rational(other) - self

    def __mul__(self, other):
        other = _as_rational(other)
        return RationalSeries(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def invert(self) -> "RationalSeries":
        if not self.num:
            raise ZeroDivisionError("inverting the zero rational function")
        return RationalSeries(self.den, self.num)

    def __truediv__(self, other):
        return self * _as_rational(other).invert()

    def __rtruediv__(self, other):
        return _as_rational(other) * self.invert()

    def __pow__(self, k: int):
        out = RationalSeries(1)
        base = self if k >= 0 else self.invert()
        for _ in range(abs(k)):
            out = out * base
        return out

    def __call__(self, x):
        d = self.den(Fraction(x))
        if d == 0:
            raise ZeroDivisionError("pole")
        return self.num(Fraction(x)) / d

    def to_dict(self) -> dict:
        return {"num": list(self.num.coeffs), "den": list(self.den.coeffs)}

    @classmethod
    def from_dict(cls, data) -> "RationalSeries":
        return cls(IntPoly(int(c) for c in data["num"]), IntPoly(int(c) for c in data["den"]))


def _as_rational(x) -> RationalSeries:
    if isinstance(x, RationalSeries):
        return x
    return RationalSeries(_as_poly(x))


def as_rational(x: Union[int, IntPoly, RationalSeries, Sequence[int]]) -> RationalSeries:
    if isinstance(x, (list, tuple)):
        return RationalSeries(IntPoly(x))
    return _as_rational(x)
