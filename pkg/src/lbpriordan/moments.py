"""Moments, continued fractions and Hankel transforms.

The moments of a family are the first column of the inverse of its
coefficient array.  For the LBP family with parameters ``(a, b)`` they are
generated both by the constant T-fraction

    1/(1 - a x - b x/(1 - a x - b x/(1 - ...)))

and by a J-fraction with ``b_0 = a + b``, ``b_k = a + 2b`` and
``lambda_k = b (a + b)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Sequence, Union

from . import riordan
from . import series as ser
from .families import FamilyParams, GenFamilyParams, gen_array, lbp_array
from .riordan import Triangle
from .series import Series

__all__ = [
    "BivariateCheck",
    "ComputationError",
    "InsufficientDepthError",
    "JFraction",
    "TFraction",
    "VanishingMinorError",
    "bareiss_det",
    "binomial_transform",
    "bivariate_check",
    "hankel_transform",
    "jfraction_from_moments",
    "jfraction_series",
    "lbp_jfraction",
    "lbp_tfraction",
    "moment_closed_form",
    "moment_gf",
    "moments",
    "row_sums",
    "tfraction_series",
]


class ComputationError(ArithmeticError):
    """A well-formed request that the exact computation cannot complete."""


class VanishingMinorError(ComputationError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"Hankel minor of order {index + 1} vanishes (index {index})")


class InsufficientDepthError(ValueError):
    pass


@dataclass(frozen=True)
class TFraction:
    """``1/(1 - c0 x - d0 x/(1 - c1 x - d1 x/(...)))``; the last ``d`` is unused."""

    c: tuple[Fraction, ...]
    d: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(Fraction(v) for v in self.c))
        object.__setattr__(self, "d", tuple(Fraction(v) for v in self.d))
        if len(self.c) != len(self.d):
            raise ValueError("c and d must have equal length")

    @classmethod
    def constant(cls, c, d, depth: int) -> "TFraction":
        return cls((c,) * depth, (d,) * depth)

    @property
    def depth(self) -> int:
        return len(self.c)


@dataclass(frozen=True)
class JFraction:
    """``1/(1 - b0 x - lam0 x^2/(1 - b1 x - lam1 x^2/(...)))``."""

    b: tuple[Fraction, ...]
    lam: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(Fraction(v) for v in self.b))
        object.__setattr__(self, "lam", tuple(Fraction(v) for v in self.lam))
        if not self.b:
            raise ValueError("a J-fraction needs at least one level")
        if len(self.lam) != len(self.b) - 1:
            raise ValueError("need len(lam) == len(b) - 1")

    @classmethod
    def constant(cls, b0, b, lam, depth: int) -> "JFraction":
        return cls((b0,) + (b,) * (depth - 1), (lam,) * (depth - 1))

    @property
    def depth(self) -> int:
        return len(self.b)


def _inverse_array(p: Union[FamilyParams, GenFamilyParams], n: int):
    arr = gen_array(p, n) if isinstance(p, GenFamilyParams) else lbp_array(p, n)
    return riordan.inv(arr)


def moments(p: Union[FamilyParams, GenFamilyParams], n: int) -> list[Fraction]:
    """First ``n`` moments: column 0 of the inverse coefficient array."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return list(_inverse_array(p, n).g_series(n))


def moment_closed_form(n: int, p: FamilyParams, form: str = "compact") -> Fraction:
    """Closed form for the ``n``-th LBP moment.

    ``form="compact"``:  sum_k C(n+k, 2k) Cat_k a^(n-k) b^k
    ``form="lagrange"``: 1/(n+1) sum_j C(n+1, j) C(2n-j, n-j) a^j b^(n-j)
    """
    a, b = p.alpha, p.beta
    if form == "compact":
        return sum(
            (comb(n + k, 2 * k) * (comb(2 * k, k) // (k + 1)) * a ** (n - k) * b ** k
             for k in range(n + 1)),
            Fraction(0),
        )
    if form == "lagrange":
        total = sum(
            (comb(n + 1, j) * comb(2 * n - j, n - j) * a ** j * b ** (n - j)
             for j in range(n + 1)),
            Fraction(0),
        )
        return total / (n + 1)
    raise ValueError(f"unknown form {form!r}")


def moment_gf(p: FamilyParams, n: int) -> Series:
    """``(1 - a x - sqrt(1 - 2(a+2b) x + a^2 x^2)) / (2 b x)`` to ``n`` terms.

    At ``b = 0`` the quotient is 0/0; its limit ``1/(1 - a x)`` is used.
    """
    a, b = p.alpha, p.beta
    if b == 0:
        return ser.expand(ser.RatFunc((1,), (1, -a)), n)
    radicand = Series((1, -2 * (a + 2 * b), a * a) + (0,) * max(0, n - 2))
    top = Series((1, -a) + (0,) * n) - ser.sqrt(radicand.truncate(n + 1))
    return top.shift_down() / (2 * b)


def tfraction_series(t: TFraction, n: int) -> Series:
    """First ``n`` coefficients; each level fixes one more, so depth >= n."""
    if t.depth < n:
        raise InsufficientDepthError(f"T-fraction of depth {t.depth} cannot fix {n} terms")
    x = Series.x(n)
    F = Series.constant(0, n)
    for c, d in zip(reversed(t.c), reversed(t.d)):
        F = ser.reciprocal(1 - c * x - d * x * F)
    return F


def jfraction_series(j: JFraction, n: int) -> Series:
    """First ``n`` coefficients; ``L`` levels fix ``2L`` terms."""
    if 2 * j.depth < n:
        raise InsufficientDepthError(f"J-fraction of depth {j.depth} cannot fix {n} terms")
    x = Series.x(n)
    x2 = x * x
    F = ser.reciprocal(1 - j.b[-1] * x)
    for b, lam in zip(reversed(j.b[:-1]), reversed(j.lam)):
        F = ser.reciprocal(1 - b * x - lam * x2 * F)
    return F


def lbp_tfraction(p: FamilyParams, depth: int) -> TFraction:
    return TFraction.constant(p.alpha, p.beta, depth)


def lbp_jfraction(p: FamilyParams, depth: int, y=0) -> JFraction:
    """J-fraction of the moment matrix row polynomials at ``y`` (``y=0``: moments,
    ``y=1``: row sums of the inverse array)."""
    a, b = p.alpha, p.beta
    return JFraction.constant(a + b + Fraction(y), a + 2 * b, b * (a + b), depth)


def jfraction_from_moments(m: Sequence, depth: Optional[int] = None) -> JFraction:
    """Recover the J-fraction of a normalised moment sequence.

    Runs the Stieltjes procedure on the moment functional ``L(x^i) = m[i]``:
    monic ``p_{k+1} = (x - b_k) p_k - lam_k p_{k-1}`` with
    ``b_k = L(x p_k^2)/L(p_k^2)`` and ``lam_k = L(p_k^2)/L(p_{k-1}^2)``.
    ``len(m) // 2`` levels are determined.
    """
    mu = [Fraction(v) for v in m]
    if len(mu) < 2:
        raise ValueError("need at least two moments")
    if mu[0] == 0:
        raise VanishingMinorError(0)
    if mu[0] != 1:
        raise ValueError("moment sequence must start with 1")
    levels = len(mu) // 2
    if depth is not None:
        if depth > levels:
            raise InsufficientDepthError(f"{len(mu)} moments determine only {levels} levels")
        levels = depth

    def L(poly, shift=0):
        return sum((c * mu[i + shift] for i, c in enumerate(poly)), Fraction(0))

    def square(poly):
        out = [Fraction(0)] * (2 * len(poly) - 1)
        for i, u in enumerate(poly):
            for k, v in enumerate(poly):
                out[i + k] += u * v
        return out

    bs: list[Fraction] = []
    lams: list[Fraction] = []
    prev: list[Fraction] = []
    cur = [Fraction(1)]
    norm_prev = None
    for k in range(levels):
        sq = square(cur)
        norm = L(sq)
        if norm == 0:
            raise VanishingMinorError(k)
        if k:
            lams.append(norm / norm_prev)
        bk = L(sq, shift=1) / norm
        bs.append(bk)
        # (x - bk) cur - lam_k prev
        nxt = [Fraction(0)] + cur
        for i, v in enumerate(cur):
            nxt[i] -= bk * v
        if k:
            for i, v in enumerate(prev):
                nxt[i] -= lams[-1] * v
        prev, cur, norm_prev = cur, nxt, norm
    return JFraction(tuple(bs), tuple(lams))


def bareiss_det(matrix: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting."""
    A = [[Fraction(v) for v in row] for row in matrix]
    n = len(A)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        piv = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * piv - A[i][k] * A[k][j]) / prev
        prev = piv
    return sign * A[n - 1][n - 1]


def hankel_transform(m: Sequence, n: Optional[int] = None) -> list[Fraction]:
    """``h_k = det[m_{i+j}]_{0<=i,j<=k}`` for ``k < n``.

    ``h_{n-1}`` uses ``m[0 .. 2n-2]``, so ``len(m) >= 2n - 1`` is required;
    ``n`` defaults to the largest such value.
    """
    mu = [Fraction(v) for v in m]
    if n is None:
        n = (len(mu) + 1) // 2
    if n < 1 or 2 * n - 1 > len(mu):
        raise ValueError(f"{len(mu)} terms cannot give {n} Hankel determinants")
    H = [[mu[i + j] for j in range(n)] for i in range(n)]
    return _hankel_minors(H)


def _hankel_minors(H: list[list[Fraction]]) -> list[Fraction]:
    n = len(H)
    A = [row[:] for row in H]
    minors: list[Fraction] = []
    prev = Fraction(1)
    for k in range(n):
        piv = A[k][k]
        if piv == 0:
            # elimination without pivoting stalls; finish block by block
            minors.append(Fraction(0))
            for s in range(k + 1, n):
                minors.append(bareiss_det([row[: s + 1] for row in H[: s + 1]]))
            return minors
        minors.append(piv)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * piv - A[i][k] * A[k][j]) / prev
        prev = piv
    return minors


def binomial_transform(s: Sequence, m=1) -> list[Fraction]:
    """``t_n = sum_k C(n, k) m^(n-k) s_k``."""
    m = Fraction(m)
    s = [Fraction(v) for v in s]
    return [
        sum((comb(n, k) * m ** (n - k) * s[k] for k in range(n + 1)), Fraction(0))
        for n in range(len(s))
    ]


def row_sums(t: Triangle) -> list[Fraction]:
    return [sum(row, Fraction(0)) for row in t]


@dataclass(frozen=True)
class BivariateCheck:
    ok: bool
    # (y, n, value from the inverse triangle, value from the continued fraction)
    witness: Optional[tuple[Fraction, int, Fraction, Fraction]] = None

    def __bool__(self) -> bool:
        return self.ok


def bivariate_check(p: FamilyParams, n: int, ys: Sequence = (0, 1, 2, Fraction(-1, 2))) -> BivariateCheck:
    """Compare the row polynomials of the inverse array, evaluated at each ``y``,
    with the continued fraction whose first partial denominator is
    ``1 - (a + b) x - x y``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    rows = riordan.inv(lbp_array(p, n)).triangle()
    for y in ys:
        y = Fraction(y)
        cf = jfraction_series(lbp_jfraction(p, n, y), n)
        for i, row in enumerate(rows):
            lhs = sum((c * y ** k for k, c in enumerate(row)), Fraction(0))
            if lhs != cf[i]:
                return BivariateCheck(False, (y, i, lhs, cf[i]))
    return BivariateCheck(True)
