"""Truncated formal power series over the rationals.

A :class:`Series` only ever carries the coefficients it can vouch for: every
operation returns a result whose ``order`` (number of known coefficients) is
the minimum that the inputs justify.  Nothing is padded with zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "RatFunc",
    "Series",
    "add",
    "compose",
    "expand",
    "mul",
    "reciprocal",
    "revert",
    "sqrt",
    "sub",
]

def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"not an exact rational: {v!r}")


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out) if out else (Fraction(0),)


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _poly_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return [
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
        for i in range(n)
    ]


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _poly_str(coeffs: Sequence[Fraction]) -> str:
    parts: list[str] = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = _fmt_coeff(mag)
        else:
            mono = "x" if k == 1 else f"x^{k}"
            body = mono if mag == 1 else f"{_fmt_coeff(mag)}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts) if parts else "0"


@dataclass(frozen=True)
class RatFunc:
    """Exact quotient ``num/den`` of polynomials with rational coefficients.

    Coefficient lists run from the constant term upward.  The representation
    is kept as given (no cancellation), so equality is structural; use
    :meth:`equivalent` for equality as functions.
    """

    num: tuple[Fraction, ...]
    den: tuple[Fraction, ...] = (Fraction(1),)

    def __post_init__(self):
        num = _trim([_frac(c) for c in self.num])
        den = _trim([_frac(c) for c in self.den])
        if den[0] == 0:
            raise ValueError("denominator has zero constant term")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def poly(cls, coeffs: Iterable) -> "RatFunc":
        return cls(tuple(coeffs))

    @property
    def num_degree(self) -> int:
        return len(self.num) - 1

    @property
    def den_degree(self) -> int:
        return len(self.den) - 1

    def expand(self, n: int) -> "Series":
        return expand(self, n)

    def __call__(self, t) -> Fraction:
        t = _frac(t)

        def horner(cs):
            acc = Fraction(0)
            for c in reversed(cs):
                acc = acc * t + c
            return acc

        return horner(self.num) / horner(self.den)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        if not isinstance(other, RatFunc):
            other = RatFunc((_frac(other),))
        return RatFunc(tuple(_poly_mul(self.num, other.num)), tuple(_poly_mul(self.den, other.den)))

    __rmul__ = __mul__

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if not isinstance(other, RatFunc):
            other = RatFunc((_frac(other),))
        if self.den == other.den:
            return RatFunc(tuple(_poly_add(self.num, other.num)), self.den)
        num = _poly_add(_poly_mul(self.num, other.den), _poly_mul(other.num, self.den))
        return RatFunc(tuple(num), tuple(_poly_mul(self.den, other.den)))

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(tuple(-c for c in self.num), self.den)

    def __sub__(self, other) -> "RatFunc":
        return self + (-other if isinstance(other, RatFunc) else -_frac(other))

    def __rsub__(self, other) -> "RatFunc":
        return (-self) + other

    def equivalent(self, other: "RatFunc") -> bool:
        return _trim(_poly_mul(self.num, other.den)) == _trim(_poly_mul(other.num, self.den))

    def __str__(self) -> str:
        num = _poly_str(self.num)
        if self.den == (Fraction(1),):
            return num
        n_terms = sum(1 for c in self.num if c != 0)
        if n_terms > 1:
            num = f"({num})"
        return f"{num}/({_poly_str(self.den)})"


@dataclass(frozen=True)
class Series:
    """The first ``order`` coefficients of a formal power series."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(_frac(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a series needs at least one known coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def of(cls, *coeffs) -> "Series":
        return cls(tuple(coeffs))

    @classmethod
    def x(cls, order: int) -> "Series":
        """The series ``x`` known to ``order`` terms."""
        return cls(tuple(1 if i == 1 else 0 for i in range(order)))

    @classmethod
    def constant(cls, c, order: int) -> "Series":
        return cls((c,) + (0,) * (order - 1))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return f"Series([{', '.join(_fmt_coeff(c) for c in self.coeffs)}])"

    def truncate(self, n: int) -> "Series":
        if n > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {n}")
        return Series(self.coeffs[:n])

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            return other
        return Series.constant(_frac(other), self.order)

    def __add__(self, other) -> "Series":
        return add(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other) -> "Series":
        return sub(self, self._coerce(other))

    def __rsub__(self, other) -> "Series":
        return sub(self._coerce(other), self)

    def __neg__(self) -> "Series":
        return Series(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "Series":
        if isinstance(other, Series):
            return mul(self, other)
        c = _frac(other)
        return Series(tuple(c * a for a in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Series":
        if isinstance(other, Series):
            return mul(self, reciprocal(other))
        c = _frac(other)
        return Series(tuple(a / c for a in self.coeffs))

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            return reciprocal(self) ** (-k)
        out = Series.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                out = mul(out, base)
            base = mul(base, base)
            k >>= 1
        return out

    def derivative(self) -> "Series":
        if self.order == 1:
            raise ValueError("derivative of an order-1 series carries no information")
        return Series(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def shift_down(self) -> "Series":
        """Divide by x; requires a zero constant term."""
        if self.coeffs[0] != 0:
            raise ValueError("series has nonzero constant term; cannot divide by x")
        if self.order == 1:
            raise ValueError("nothing known after dividing by x")
        return Series(self.coeffs[1:])

    def shift_up(self) -> "Series":
        """Multiply by x (the order grows by one)."""
        return Series((Fraction(0),) + self.coeffs)

    def evaluate_poly(self, t) -> Fraction:
        """Evaluate the truncation as a polynomial at ``t``."""
        t = _frac(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc


def expand(rf: RatFunc, n: int) -> Series:
    """Taylor coefficients of ``rf`` up to ``x^(n-1)`` by long division."""
    if n < 1:
        raise ValueError("order must be at least 1")
    if not isinstance(rf, RatFunc):
        raise TypeError("expand takes a RatFunc")
    den = rf.den
    d0 = den[0]
    out: list[Fraction] = []
    for i in range(n):
        acc = rf.num[i] if i < len(rf.num) else Fraction(0)
        for j in range(1, min(i, len(den) - 1) + 1):
            acc -= den[j] * out[i - j]
        out.append(acc / d0)
    return Series(tuple(out))


def add(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    return Series(tuple(a.coeffs[i] + b.coeffs[i] for i in range(n)))


def sub(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    return Series(tuple(a.coeffs[i] - b.coeffs[i] for i in range(n)))


def mul(a: Series, b: Series) -> Series:
    """Cauchy product to ``min(a.order, b.order)`` terms."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = [Fraction(0)] * n
    for i in range(n):
        ai = ac[i]
        if ai == 0:
            continue
        for j in range(n - i):
            out[i + j] += ai * bc[j]
    return Series(tuple(out))


def reciprocal(a: Series) -> Series:
    """Multiplicative inverse, by the triangular recurrence b0 = 1/a0,
    b_n = -(1/a0) * sum_{j=1..n} a_j b_{n-j}."""
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ZeroDivisionError("series with zero constant term has no reciprocal")
    inv0 = 1 / a0
    b = [inv0]
    for n in range(1, a.order):
        acc = sum((a.coeffs[j] * b[n - j] for j in range(1, n + 1)), Fraction(0))
        b.append(-inv0 * acc)
    return Series(tuple(b))


def compose(a: Series, b: Series) -> Series:
    """``a(b(x))``; ``b`` must have zero constant term."""
    if b.coeffs[0] != 0:
        raise ValueError("inner series must have zero constant term")
    n = min(a.order, b.order)
    b = b.truncate(n)
    acc = Series.constant(a.coeffs[n - 1], n)
    for i in range(n - 2, -1, -1):
        acc = mul(acc, b)
        acc = Series((acc.coeffs[0] + a.coeffs[i],) + acc.coeffs[1:])
    return acc


def revert(f: Series) -> Series:
    """Compositional inverse by Newton iteration on ``f(g) = x``.

    Each step doubles the number of correct coefficients:
    ``g <- g - (f(g) - x) / f'(g)``.
    """
    if f.coeffs[0] != 0:
        raise ValueError("reversion needs f(0) = 0")
    if f.order < 2 or f.coeffs[1] == 0:
        raise ValueError("reversion needs f'(0) != 0")
    n = f.order
    fprime = f.derivative()
    g = Series((Fraction(0), 1 / f.coeffs[1]))
    known = 2
    while known < n:
        prev, known = known, min(2 * known, n)
        g = Series(g.coeffs + (Fraction(0),) * (known - prev))
        resid = compose(f.truncate(known), g) - Series.x(known)
        # resid vanishes below x^prev, so f'(g) is only needed to known-prev terms
        m = known - prev
        slope = compose(fprime.truncate(m), g.truncate(m))
        step = mul(Series(resid.coeffs[prev:]), reciprocal(slope))
        g = g - Series((Fraction(0),) * prev + step.coeffs)
    return g.truncate(n)


def sqrt(a: Series) -> Series:
    """Square root with constant term 1 by Newton iteration ``s <- (s + a/s)/2``."""
    if a.coeffs[0] != 1:
        raise ValueError("sqrt needs constant term 1")
    n = a.order
    s = Series((Fraction(1),))
    known = 1
    while known < n:
        known = min(2 * known, n)
        s = Series(s.coeffs + (Fraction(0),) * (known - s.order))
        s = (s + mul(a.truncate(known), reciprocal(s))) * Fraction(1, 2)
    return s
