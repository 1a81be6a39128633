"""Regenerate the vendored OEIS fixtures in src/lbpriordan/data/oeis.

Terms are computed from each sequence's defining formula with plain integer
arithmetic, independently of the library code paths.  Triangles are read by
rows.
"""

import json
from fractions import Fraction
from math import comb
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "lbpriordan" / "data" / "oeis"
N_TERMS = 30
N_ROWS = 15


def catalan(n):
    return [comb(2 * k, k) // (k + 1) for k in range(n)]


def schroeder(n):
    s = [1]
    while len(s) < n:
        m = len(s)
        s.append(s[-1] + sum(s[k] * s[m - 1 - k] for k in range(m)))
    return s


def binomial_transform(s):
    return [sum(comb(n, k) * s[k] for k in range(n + 1)) for n in range(len(s))]


def lbp_11(rows):
    # [x^(n-k)] ((1-x)/(1+x))^(k+1)
    out = []
    for n in range(rows):
        for k in range(n + 1):
            v = sum(comb(k + 1, j) * comb(n - j, n - k - j) for j in range(min(k + 1, n - k) + 1))
            out.append(v if (n - k) % 2 == 0 else -v)
    return out


def lbp_11_inverse(rows):
    # [x^(n+1)] v(x)^(k+1), v = Rev(x(1-x)/(1+x)), by Lagrange inversion
    out = []
    for n in range(rows):
        for k in range(n + 1):
            s = sum(comb(n + 1, j) * comb(2 * n - k - j, n - k - j) for j in range(n - k + 1))
            out.append((k + 1) * s // (n + 1))
    return out


def assoc_11_inverse(rows):
    # invert the triangle of P~_n = (x-3) P~_{n-1} - 2 P~_{n-2}, P~_1 = x - 2
    polys = [[1], [-2, 1]]
    while len(polys) < rows:
        a, b = polys[-1], polys[-2]
        nxt = [0] + a
        for i, v in enumerate(a):
            nxt[i] -= 3 * v
        for i, v in enumerate(b):
            nxt[i] -= 2 * v
        polys.append(nxt)
    # forward substitution for L^{-1} with unit diagonal
    inv = [[Fraction(0)] * rows for _ in range(rows)]
    for i in range(rows):
        inv[i][i] = Fraction(1)
        for j in range(i - 1, -1, -1):
            inv[i][j] = -sum(polys[i][m] * inv[m][j] for m in range(j, i))
    return [int(inv[n][k]) for n in range(rows) for k in range(n + 1)]


FIXTURES = {
    "A000108": catalan(N_TERMS),
    "A006318": schroeder(N_TERMS),
    "A174347": binomial_transform(schroeder(N_TERMS)),
    "A080246": lbp_11(N_ROWS),
    "A080247": lbp_11_inverse(N_ROWS),
    "A133367": assoc_11_inverse(N_ROWS),
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for ident, terms in FIXTURES.items():
        path = OUT / f"{ident}.json"
        path.write_text(json.dumps({"id": ident, "terms": terms, "source": "vendored"}) + "\n")
        print(f"{ident}: {len(terms)} terms -> {path.name}")


if __name__ == "__main__":
    main()
