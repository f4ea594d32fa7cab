"""Integer witnesses for a handful of explicit equations.

Each finder scans its free variables in the package scan order and
returns the first solution together with the residuals of the defining
equations, which are zero for a genuine witness.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .extend import ExtWitness, simple_witness
from .intlin import positive_divisors, xgcd, xgcd_list
from .matrix import Mat2
from .rings import Integers, RingError
from .search import box_order, ordered_values


@dataclass(frozen=True)
class EqWitness:
    name: str
    inputs: dict
    values: dict
    residuals: tuple

    @property
    def exact(self) -> bool:
        return all(r == 0 for r in self.residuals)


# -- d + ct = d1 d2 with gcd(a, d1) = gcd(b, d2) = 1 --------------------------

def _splits(n: int):
    if n == 0:
        yield from ((0, 1), (1, 0), (0, -1), (-1, 0))
        return
    for p in positive_divisors(n):
        for d1 in (p, -p):
            yield d1, n // d1


def th5_8_witness(a: int, b: int, c: int, d: int, budget: int = 1000) -> EqWitness | None:
    """Find t with ``d + ct = d1 d2``, ``gcd(a, d1) = gcd(b, d2) = 1``.

    Inputs need ``gcd(a, b) = gcd(c, d) = 1``.
    """
    if gcd(a, b) != 1 or gcd(c, d) != 1:
        raise RingError("th5_8 needs gcd(a, b) = gcd(c, d) = 1")
    for t in ordered_values(budget):
        n = d + c * t
        for d1, d2 in _splits(n):
            if gcd(a, d1) == 1 and gcd(b, d2) == 1:
                return EqWitness("th5_8", {"a": a, "b": b, "c": c, "d": d},
                                 {"t": t, "d1": d1, "d2": d2},
                                 (d + c * t - d1 * d2, gcd(a, d1) - 1, gcd(b, d2) - 1))
    return None


# -- y = r + s - asq - bqr, t = 1 + q - aq - br, t in Zy + Zat ----------------

def cr3_witness(a: int, b: int, s: int, budget: int = 64) -> EqWitness | None:
    """Find (q, r) with ``t`` in the ideal generated by ``y`` and ``a t``."""
    for q, r in box_order(budget, 2):
        y = r + s - a * s * q - b * q * r
        t = 1 + q - a * q - b * r
        g, u, v = xgcd(y, a * t)
        if (g == 0 and t == 0) or (g != 0 and t % g == 0):
            k = t // g if g else 0
            gy, gat = u * k, v * k
            return EqWitness("cr3", {"a": a, "b": b, "s": s},
                             {"q": q, "r": r, "y": y, "t": t, "coef_y": gy, "coef_at": gat},
                             (gy * y + gat * a * t - t,))
    return None


def cr3_statement3(a: int, b: int, s: int, e: int, f: int) -> bool:
    """Does (e, f) satisfy: (e, f), (a, e) and (be + af, 1 - bs - a) unimodular?"""
    return gcd(e, f) == 1 and gcd(a, e) == 1 and gcd(b * e + a * f, 1 - b * s - a) == 1


def cr3_statement3_witness(a: int, b: int, s: int, budget: int = 64) -> tuple[int, int] | None:
    for e, f in box_order(budget, 2):
        if cr3_statement3(a, b, s, e, f):
            return e, f
    return None


# -- (1 - su - la)^2 + l - sul - l^2 a - z (s + t - sut) = 0 --------------------

def c14_residual(a: int, u: int, t: int, s: int, l: int, z: int) -> int:
    return (1 - s * u - l * a) ** 2 + l - s * u * l - l * l * a - z * (s + t - s * u * t)


def c14_witness(a: int, u: int, t: int, budget: int = 64) -> EqWitness | None:
    """Find (s, l, z) solving the equation above (linear in z); u != 0."""
    if u == 0:
        raise RingError("c14 needs u != 0")
    for s, l in box_order(budget, 2):
        p = (1 - s * u - l * a) ** 2 + l - s * u * l - l * l * a
        k = s + t - s * u * t
        if k == 0:
            if p != 0:
                continue
            z = 0
        elif p % k:
            continue
        else:
            z = p // k
        return EqWitness("c14", {"a": a, "u": u, "t": t}, {"s": s, "l": l, "z": z},
                         (c14_residual(a, u, t, s, l, z),))
    return None


# -- upper triangular matrices with e = 1 --------------------------------------

def c9_extension(A: Mat2, budget: int = 1000) -> ExtWitness | None:
    """Simple extension of ``[[a, b], [0, d]]`` over Z with ``e = 1``.

    With e = 1 the determinant is ``as + (b + df) t``; so f is chosen with
    ``b + df`` coprime to a (or equal to +-1 when a = 0).
    """
    if not isinstance(A.ring, Integers) or A.c != 0:
        raise RingError("c9_extension expects an upper triangular integer matrix")
    a, b, _, d = A.entries()
    for f in ordered_values(budget):
        g, s, t = xgcd(a, b + d * f)
        if g == 1:
            return simple_witness(A, 1, f, s, t, "e=1")
    return None
