"""Riordan arrays ``(g, f)`` over the rationals.

Column ``k`` of the matrix ``(g, f)`` is generated by ``g(x) f(x)^k``.  Arrays
are normalised so that ``g(0) = 1``, ``f(0) = 0`` and ``f'(0) = 1``; under that
normalisation every materialised triangle has a unit diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import series as ser
from .series import RatFunc, Series

__all__ = [
    "ProductionMatrix",
    "RiordanArray",
    "RiordanValidationError",
    "Triangle",
    "a_sequence",
    "act",
    "binomial_power",
    "entry",
    "identity",
    "inv",
    "make",
    "mul",
    "production_matrix",
    "triangle",
    "z_sequence",
]

Generator = Union[RatFunc, Series]


class RiordanValidationError(ValueError):
    """A pair (g, f) violates one of the normalisation invariants.

    ``invariant`` names the broken condition: ``"g(0)"``, ``"f(0)"`` or ``"f'(0)"``.
    """

    def __init__(self, invariant: str, value):
        self.invariant = invariant
        self.value = value
        expected = {"g(0)": 1, "f(0)": 0, "f'(0)": 1}[invariant]
        super().__init__(f"{invariant} must be {expected}, got {value}")


@dataclass(frozen=True)
class Triangle:
    """Dense lower-triangular matrix; ``rows[n]`` has ``n + 1`` entries."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.rows)
        for n, row in enumerate(rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has length {len(row)}, expected {n + 1}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Triangle":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "Triangle":
        return cls(tuple(tuple(1 if j == i else 0 for j in range(i + 1)) for i in range(n)))

    @property
    def size(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, n: int) -> tuple[Fraction, ...]:
        return self.rows[n]

    def __iter__(self):
        return iter(self.rows)

    def entry(self, n: int, k: int) -> Fraction:
        if k > n:
            return Fraction(0)
        return self.rows[n][k]

    def column(self, k: int) -> list[Fraction]:
        return [row[k] for row in self.rows[k:]]

    def truncate(self, n: int) -> "Triangle":
        return Triangle(self.rows[:n])

    def __matmul__(self, other: "Triangle") -> "Triangle":
        n = min(self.size, other.size)
        rows = []
        for i in range(n):
            a = self.rows[i]
            rows.append(tuple(
                sum((a[m] * other.rows[m][j] for m in range(j, i + 1)), Fraction(0))
                for j in range(i + 1)
            ))
        return Triangle(tuple(rows))

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    def flatten(self) -> list[Fraction]:
        return [v for row in self.rows for v in row]


@dataclass(frozen=True)
class ProductionMatrix:
    """Square lower-Hessenberg matrix (zero above the superdiagonal)."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(Fraction(v) for v in row) for row in self.entries)
        n = len(entries)
        for i, row in enumerate(entries):
            if len(row) != n:
                raise ValueError("production matrix must be square")
            if any(row[j] != 0 for j in range(i + 2, n)):
                raise ValueError(f"row {i} has entries above the superdiagonal")
        object.__setattr__(self, "entries", entries)

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def principal(self, n: int) -> "ProductionMatrix":
        return ProductionMatrix(tuple(row[:n] for row in self.entries[:n]))

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]


def _as_series(gen: Generator, n: int) -> Series:
    if isinstance(gen, RatFunc):
        return ser.expand(gen, n)
    if gen.order < n:
        raise ValueError(f"generator known to {gen.order} terms, {n} needed")
    return gen.truncate(n)


@dataclass(frozen=True, eq=False)
class RiordanArray:
    """A validated pair ``(g, f)`` materialisable to ``order`` rows."""

    g: Generator
    f: Generator
    order: int

    def g_series(self, n: int | None = None) -> Series:
        return _as_series(self.g, self.order if n is None else n)

    def f_series(self, n: int | None = None) -> Series:
        return _as_series(self.f, self.order if n is None else n)

    def triangle(self) -> Triangle:
        return triangle(self)

    def entry(self, n: int, k: int) -> Fraction:
        return entry(self, n, k)

    def with_order(self, order: int) -> "RiordanArray":
        return make(self.g, self.f, order)

    def __matmul__(self, other: "RiordanArray") -> "RiordanArray":
        return mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RiordanArray):
            return NotImplemented
        n = min(self.order, other.order)
        return (self.g_series(n) == other.g_series(n)
                and self.f_series(n) == other.f_series(n))

    def __hash__(self):
        return hash((self.g_series().coeffs, self.f_series().coeffs))

    def __repr__(self) -> str:
        def show(gen):
            return str(gen) if isinstance(gen, RatFunc) else repr(gen)
        return f"RiordanArray(g={show(self.g)}, f={show(self.f)}, order={self.order})"


def make(g: Generator, f: Generator, order: int) -> RiordanArray:
    """Validate ``(g, f)`` and wrap it as a :class:`RiordanArray`."""
    if order < 1:
        raise ValueError("order must be at least 1")
    gs = _as_series(g, order)
    fs = _as_series(f, max(order, 2))
    if gs[0] != 1:
        raise RiordanValidationError("g(0)", gs[0])
    if fs[0] != 0:
        raise RiordanValidationError("f(0)", fs[0])
    if fs[1] != 1:
        raise RiordanValidationError("f'(0)", fs[1])
    return RiordanArray(g, f, order)


def identity(order: int) -> RiordanArray:
    return make(RatFunc((1,)), RatFunc((0, 1)), order)


def binomial_power(m, order: int) -> RiordanArray:
    """``B^m = (1/(1 - m x), x/(1 - m x))``."""
    m = Fraction(m)
    return make(RatFunc((1,), (1, -m)), RatFunc((0, 1), (1, -m)), order)


def entry(R: RiordanArray, n: int, k: int) -> Fraction:
    """``[x^n] g(x) f(x)^k``."""
    if not 0 <= k <= n < R.order:
        raise IndexError(f"entry ({n}, {k}) outside a triangle of order {R.order}")
    size = n + 1
    col = R.g_series(size) * R.f_series(size) ** k
    return col[n]


def triangle(R: RiordanArray) -> Triangle:
    N = R.order
    f = R.f_series(N)
    col = R.g_series(N)
    cols = []
    for _ in range(N):
        cols.append(col)
        col = col * f
    return Triangle(tuple(tuple(cols[k][n] for k in range(n + 1)) for n in range(N)))


def mul(R1: RiordanArray, R2: RiordanArray) -> RiordanArray:
    """Group law ``(g, f) (h, l) = (g * h(f), l(f))``."""
    N = min(R1.order, R2.order)
    f = R1.f_series(max(N, 2))
    g = R1.g_series(N) * ser.compose(R2.g_series(N), f)
    return make(g, ser.compose(R2.f_series(max(N, 2)), f), N)


def inv(R: RiordanArray) -> RiordanArray:
    """Group inverse ``(1/g(fbar), fbar)`` with ``fbar`` the reversion of ``f``."""
    N = R.order
    fbar = ser.revert(R.f_series(max(N, 2)))
    g = ser.reciprocal(ser.compose(R.g_series(N), fbar.truncate(N)))
    return make(g, fbar, N)


def act(R: RiordanArray, s: Series) -> Series:
    """Fundamental theorem: ``(g, f) . s = g * s(f)``."""
    n = min(R.order, s.order)
    return R.g_series(n) * ser.compose(s.truncate(n), R.f_series(n))


def a_sequence(R: RiordanArray, n: int) -> list[Fraction]:
    """First ``n`` terms of ``A(x) = x / fbar(x)``."""
    fbar = ser.revert(R.f_series(n + 1))
    return list(ser.reciprocal(fbar.shift_down()))


def z_sequence(R: RiordanArray, n: int) -> list[Fraction]:
    """First ``n`` terms of ``Z(x) = (1 - 1/g(fbar(x))) / fbar(x)``."""
    fbar = ser.revert(R.f_series(n + 1))
    top = 1 - ser.reciprocal(ser.compose(R.g_series(n + 1), fbar))
    return list(top.shift_down() * ser.reciprocal(fbar.shift_down()))


def production_matrix(R: RiordanArray, n: int) -> ProductionMatrix:
    """``n x n`` production matrix: Z-sequence in column 0, the A-sequence
    shifted down one step per column after that."""
    a = a_sequence(R, n)
    z = z_sequence(R, n)
    rows = []
    for i in range(n):
        row = [z[i]]
        for j in range(1, n):
            d = i - j + 1
            row.append(a[d] if d >= 0 else Fraction(0))
        rows.append(tuple(row))
    return ProductionMatrix(tuple(rows))
