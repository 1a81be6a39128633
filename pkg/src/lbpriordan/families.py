"""Constant-coefficient polynomial families and their coefficient arrays.

Laurent biorthogonal polynomials (LBP) obey

    P_n(x) = (x - alpha) P_{n-1}(x) - beta x P_{n-2}(x),

and the three-parameter generalisation replaces ``beta x`` by
``beta (x - gamma)``.  Triangles are built from the recurrences; the Riordan
array descriptions are exposed separately (``*_array``) so the two can be
checked against each other.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Union

from . import riordan
from .riordan import ProductionMatrix, RiordanArray, Triangle
from .series import RatFunc

__all__ = [
    "DegenerateFamilyError",
    "FamilyParams",
    "GenFamilyParams",
    "PolyFamily",
    "Variant",
    "assoc_array",
    "assoc_orthogonal",
    "charpoly_hessenberg",
    "coeff_closed_form",
    "connection",
    "derivative_array",
    "derivative_triangle",
    "det_representation",
    "family_eval",
    "gen_array",
    "gen_assoc_array",
    "gen_assoc_orthogonal",
    "gen_triangle",
    "lbp_array",
    "lbp_triangle",
    "shift_params",
    "shift_poly",
]


class DegenerateFamilyError(ValueError):
    """Parameters hit an excluded degenerate case."""


class Variant(enum.Enum):
    PROP1 = "prop1"  # P_1 = x - alpha
    PROP2 = "prop2"  # P_1 = x - (alpha + beta)


@dataclass(frozen=True)
class FamilyParams:
    alpha: Fraction
    beta: Fraction
    variant: Variant = Variant.PROP2

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        object.__setattr__(self, "variant", Variant(self.variant))


@dataclass(frozen=True)
class GenFamilyParams:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))


Params = Union[FamilyParams, GenFamilyParams]


@dataclass(frozen=True)
class PolyFamily:
    """Monic polynomials ``P_0 .. P_{n-1}``; row ``n`` of ``coeffs`` is ``P_n``."""

    params: Params
    coeffs: Triangle

    def __post_init__(self):
        for n, row in enumerate(self.coeffs):
            if row[n] != 1:
                raise ValueError(f"P_{n} is not monic")

    def __len__(self) -> int:
        return self.coeffs.size

    def poly(self, n: int) -> list[Fraction]:
        return list(self.coeffs[n])

    def evaluate(self, t) -> list[Fraction]:
        t = Fraction(t)
        out = []
        for row in self.coeffs:
            acc = Fraction(0)
            for c in reversed(row):
                acc = acc * t + c
            out.append(acc)
        return out


def _three_term(n: int, p1: list[Fraction], step) -> Triangle:
    """Run ``P_k = step(P_{k-1}, P_{k-2})`` from ``P_0 = 1`` and ``P_1 = p1``."""
    polys: list[list[Fraction]] = [[Fraction(1)]]
    if n > 1:
        polys.append(p1)
    while len(polys) < n:
        polys.append(step(polys[-1], polys[-2]))
    return Triangle(tuple(tuple(p) for p in polys[:n]))


def _times_x_minus(p: list[Fraction], c: Fraction) -> list[Fraction]:
    # (x - c) p
    out = [Fraction(0)] * (len(p) + 1)
    for i, v in enumerate(p):
        out[i + 1] += v
        out[i] -= c * v
    return out


def _axpy(a: list[Fraction], s: Fraction, b: list[Fraction]) -> list[Fraction]:
    # a + s*b, with len(a) >= len(b)
    out = list(a)
    for i, v in enumerate(b):
        out[i] += s * v
    return out


def lbp_triangle(p: FamilyParams, n: int) -> PolyFamily:
    """Coefficient rows of ``P_0 .. P_{n-1}`` from the LBP recurrence."""
    if n < 1:
        raise ValueError("need at least one row")
    a, b = p.alpha, p.beta
    c1 = a if p.variant is Variant.PROP1 else a + b

    def step(p1, p2):
        return _axpy(_times_x_minus(p1, a), -b, [Fraction(0)] + p2)

    return PolyFamily(p, _three_term(n, [-c1, Fraction(1)], step))


def lbp_array(p: FamilyParams, order: int) -> RiordanArray:
    """``(1/(1+ax), x(1-bx)/(1+ax))`` or ``((1-bx)/(1+ax), x(1-bx)/(1+ax))``."""
    a, b = p.alpha, p.beta
    g = RatFunc((1,), (1, a)) if p.variant is Variant.PROP1 else RatFunc((1, -b), (1, a))
    return riordan.make(g, RatFunc((0, 1, -b), (1, a)), order)


def coeff_closed_form(n: int, k: int, p: FamilyParams) -> Fraction:
    """``d_{n,k} = (-1)^(n-k) sum_j C(k+1,j) C(n-j,n-k-j) a^(n-k-j) b^j``."""
    if not 0 <= k <= n:
        raise IndexError(f"({n}, {k}) is outside the triangle")
    a, b = p.alpha, p.beta
    total = Fraction(0)
    for j in range(min(k + 1, n - k) + 1):
        total += comb(k + 1, j) * comb(n - j, n - k - j) * a ** (n - k - j) * b ** j
    return total if (n - k) % 2 == 0 else -total


def assoc_orthogonal(p: FamilyParams, n: int) -> PolyFamily:
    """Orthogonal family with ``P~_n = (x-(a+2b)) P~_{n-1} - b(a+b) P~_{n-2}``."""
    if n < 1:
        raise ValueError("need at least one row")
    a, b = p.alpha, p.beta
    diag, lam = a + 2 * b, b * (a + b)

    def step(p1, p2):
        return _axpy(_times_x_minus(p1, diag), -lam, p2)

    return PolyFamily(p, _three_term(n, [-(a + b), Fraction(1)], step))


def assoc_array(p: FamilyParams, order: int) -> RiordanArray:
    """``(1/(1+(a+b)x), x/((1+bx)(1+(a+b)x)))``."""
    a, b = p.alpha, p.beta
    s = a + b
    return riordan.make(RatFunc((1,), (1, s)), RatFunc((0, 1), (1, s + b, b * s)), order)


def connection(p: Params, n: int, to: str = "lbp") -> Triangle:
    """Connection coefficients between the LBP and associated orthogonal rows.

    ``to="lbp"`` gives ``C`` with ``P_n = sum_k C[n][k] P~_k``, i.e. entries
    ``C(n-1, n-k) b^(n-k)``; ``to="orthogonal"`` is the inverse, with ``-b``.
    Both are the matrix of ``(1, x/(1 -+ b x))``.
    """
    if to not in ("lbp", "orthogonal"):
        raise ValueError("to must be 'lbp' or 'orthogonal'")
    b = p.beta if to == "lbp" else -p.beta
    rows = []
    for i in range(n):
        row = []
        for k in range(i + 1):
            if i == 0:
                row.append(Fraction(1))
            else:
                row.append(comb(i - 1, i - k) * b ** (i - k) if k > 0 else Fraction(0))
        rows.append(tuple(row))
    return Triangle(tuple(rows))


def family_eval(p: FamilyParams, t, n: int) -> list[Fraction]:
    """``[P_0(t), ..., P_{n-1}(t)]``."""
    return lbp_triangle(p, n).evaluate(t)


def gen_triangle(p: GenFamilyParams, n: int) -> PolyFamily:
    """Rows of ``P_n = (x-a) P_{n-1} - b (x-c) P_{n-2}``, ``P_1 = x-a-b``."""
    if n < 1:
        raise ValueError("need at least one row")
    a, b, c = p.alpha, p.beta, p.gamma

    def step(p1, p2):
        return _axpy(_times_x_minus(p1, a), -b, _times_x_minus(p2, c))

    return PolyFamily(p, _three_term(n, [-(a + b), Fraction(1)], step))


def gen_array(p: GenFamilyParams, order: int) -> RiordanArray:
    """``((1-bx)/(1+ax-bcx^2), x(1-bx)/(1+ax-bcx^2))``."""
    a, b, c = p.alpha, p.beta, p.gamma
    den = (1, a, -b * c)
    return riordan.make(RatFunc((1, -b), den), RatFunc((0, 1, -b), den), order)


def gen_assoc_array(p: GenFamilyParams, order: int) -> RiordanArray:
    """``((1+bx)/D, x/D)`` with ``D = 1 + (a+2b)x + b(a+b-c)x^2``."""
    a, b, c = p.alpha, p.beta, p.gamma
    if a + b == c:
        raise DegenerateFamilyError("alpha + beta == gamma: no associated orthogonal family")
    den = (1, a + 2 * b, b * (a + b - c))
    return riordan.make(RatFunc((1, b), den), RatFunc((0, 1), den), order)


def gen_assoc_orthogonal(p: GenFamilyParams, n: int) -> PolyFamily:
    return PolyFamily(p, gen_assoc_array(p, n).triangle())


def shift_params(p: GenFamilyParams) -> FamilyParams:
    """Parameters of the LBP family ``Q`` with ``P_n(x + c; a, b, c) = Q_n(x)``."""
    return FamilyParams(p.alpha - p.gamma, p.beta, Variant.PROP2)


def shift_poly(coeffs, c) -> list[Fraction]:
    """Coefficients of ``P(x + c)`` given those of ``P(x)``."""
    c = Fraction(c)
    out = [Fraction(0)] * len(coeffs)
    for i, v in enumerate(coeffs):
        for k in range(i + 1):
            out[k] += v * comb(i, k) * c ** (i - k)
    return out


def derivative_triangle(p: FamilyParams, n: int) -> Triangle:
    """Rows ``R_0 .. R_{n-1}`` where ``R_m = d/dx P_{m+1}``."""
    rows = lbp_triangle(p, n + 1).coeffs
    return Triangle(tuple(
        tuple(k * c for k, c in enumerate(rows[m + 1]) if k)
        for m in range(n)
    ))


def derivative_array(p: FamilyParams, order: int) -> RiordanArray:
    """``(g f / x, f)``, whose entry ``(n, k)`` times ``k + 1`` is ``e_{n,k}``.

    For the PROP2 variant ``f/x = g`` and this is ``(g^2, f)``.
    """
    base = lbp_array(p, order)
    g_over = base.g * RatFunc((1, -p.beta), (1, p.alpha))
    return riordan.make(g_over, base.f, order)


def charpoly_hessenberg(H: ProductionMatrix) -> list[list[Fraction]]:
    """Characteristic polynomials ``det(x I_k - H_k)`` of every leading block.

    Returns ``[p_0, ..., p_n]`` as coefficient lists.  Expansion along the last
    row of a lower-Hessenberg block gives

        p_k = (x - h[k-1][k-1]) p_{k-1}
              - sum_{i<k-1} h[k-1][i] (prod_{m=i}^{k-2} h[m][m+1]) p_i.
    """
    n = H.size
    polys: list[list[Fraction]] = [[Fraction(1)]]
    for k in range(1, n + 1):
        nxt = _times_x_minus(polys[k - 1], H[k - 1][k - 1])
        sup = Fraction(1)
        for i in range(k - 2, -1, -1):
            sup *= H[i][i + 1]
            h = H[k - 1][i]
            if h and sup:
                nxt = _axpy(nxt, -h * sup, polys[i])
        polys.append(nxt)
    return polys


def det_representation(p: FamilyParams, n: int) -> list[Fraction]:
    """Coefficients of ``det(x I_n - P_n)`` where ``P_n`` is the leading block
    of the production matrix of the inverse coefficient array."""
    if n < 1:
        raise ValueError("n must be at least 1")
    M_inv = riordan.inv(lbp_array(p, n + 2))
    H = riordan.production_matrix(M_inv, n)
    return charpoly_hessenberg(H)[n]
