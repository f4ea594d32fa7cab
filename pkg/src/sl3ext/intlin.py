"""Integer helpers: extended gcd, small factorisation and exact integer
linear systems.

Everything here works on Python ints, so values never overflow.
"""
from __future__ import annotations

from math import gcd
from typing import Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g`` and ``g >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def xgcd_list(values: Sequence[int]) -> tuple[int, list[int]]:
    """gcd of several integers together with Bezout coefficients.

    The first nonzero entry carries the leading coefficient, so a
    leading 1 gets coefficient 1 and everything else 0.
    """
    coeffs = [0] * len(values)
    g = 0
    for i, v in enumerate(values):
        if v == 0:
            continue
        if g == 0:
            g = abs(v)
            coeffs[i] = 1 if v > 0 else -1
            continue
        if v % g == 0:
            continue
        g2, x, y = xgcd(g, v)
        coeffs = [c * x for c in coeffs]
        coeffs[i] = y
        g = g2
    return g, coeffs


def gcd_list(values: Sequence[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def inverse_mod(a: int, n: int) -> int:
    g, x, _ = xgcd(a % n, n)
    if g != 1:
        raise ValueError(f"{a} is not invertible modulo {n}")
    return x % n


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation of ``|n|`` by trial division (n != 0)."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def positive_divisors(n: int) -> list[int]:
    divs = [1]
    for p, k in factorize(n).items():
        divs = [d * p**e for d in divs for e in range(k + 1)]
    return sorted(divs)


def crt(residues: Sequence[int], moduli: Sequence[int]) -> int:
    """Combine residues modulo pairwise coprime moduli."""
    x, m = 0, 1
    for r, n in zip(residues, moduli):
        g, p, _ = xgcd(m, n)
        if g != 1:
            raise ValueError("moduli are not coprime")
        x = x + m * ((r - x) * p % n)
        m *= n
    return x % m


def solve_integer_system(rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[int] | None:
    """Find an integer vector ``c`` with ``rows @ c == rhs`` or return None.

    Column-style echelon form: unimodular column operations bring the
    matrix to lower echelon shape while a transform matrix records them,
    then forward substitution with exact divisibility checks.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [list(r) for r in rows]
    u = [[int(i == j) for j in range(n)] for i in range(n)]

    def colop(j: int, k: int, p: int, q: int, r: int, s: int) -> None:
        # (col_j, col_k) <- (p col_j + q col_k, r col_j + s col_k)
        for row in a:
            row[j], row[k] = p * row[j] + q * row[k], r * row[j] + s * row[k]
        for row in u:
            row[j], row[k] = p * row[j] + q * row[k], r * row[j] + s * row[k]

    pivots: list[tuple[int, int]] = []
    col = 0
    for i in range(m):
        if col >= n:
            break
        for k in range(col + 1, n):
            if a[i][k] == 0:
                continue
            x, y = a[i][col], a[i][k]
            g, p, q = xgcd(x, y)
            colop(col, k, p, q, -y // g, x // g)
        if a[i][col] != 0:
            pivots.append((i, col))
            col += 1

    y = [0] * n
    for i in range(m):
        acc = sum(a[i][j] * y[j] for j in range(n))
        pivot = next((c for r, c in pivots if r == i), None)
        diff = rhs[i] - acc
        if pivot is None:
            if diff != 0:
                return None
            continue
        if diff % a[i][pivot]:
            return None
        y[pivot] = diff // a[i][pivot]
    return [sum(u[r][j] * y[j] for j in range(n)) for r in range(n)]
