"""Constructions of SL3 matrices whose top-left 2x2 block is a given matrix.

A 3x3 determinant-one matrix with top-left block ``A = [[a, b], [c, d]]``
is an *extension* of ``A``; it is *simple* when its (3,3) entry is 0.
Every simple extension has the shape::

    [[ a,  b,  f],
     [ c,  d, -e],
     [-t,  s,  0]]

and its determinant is ``a*e*s + b*e*t + c*f*s + d*f*t``. Most routines
here return an :class:`ExtWitness` carrying ``(e, f, s, t)`` and the
assembled matrix.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Any, Sequence

import numpy as np

from .intlin import crt, factorize, inverse_mod, solve_integer_system, xgcd, xgcd_list
from .matrix import (Mat2, Mat3, apply2, det2, det3, diag2, identity2, inverse2, is_non_full,
                     is_unimodular_mat, mul2, mul3, sigma, top_left)
from .poly import Poly, X, Y, Z
from .rings import (Integers, ModN, PolyZ3, Quadratic, Ring, RingError, Undecided, Unsupported,
                    elements_of_norm, irreducible_in_quadratic)
from .search import box_grid, box_order, first_in_scan_order, ordered_values, scan_key


class NotUnimodular(RingError):
    pass


class BudgetExhausted(RingError):
    """A bounded search ended without a witness."""


# ---------------------------------------------------------------------------
# assembling and checking

def assemble_extension(A: Mat2, e, f, s, t, v=None) -> Mat3:
    R = A.ring
    v = R.zero() if v is None else v
    return Mat3.of(R, [[A.a, A.b, f], [A.c, A.d, R.neg(e)], [R.neg(t), s, v]])


def border(Aplus: Mat3) -> tuple:
    """``(e, f, s, t, v)`` read off the border of an extension."""
    R = Aplus.ring
    return (R.neg(Aplus[1, 2]), Aplus[0, 2], Aplus[2, 1], R.neg(Aplus[2, 0]), Aplus[2, 2])


def eq8_value(A: Mat2, e, f, s, t):
    """``a(es) + b(et) + c(fs) + d(ft)``: determinant of the simple extension."""
    R = A.ring
    es, et, fs, ft = R.mul(e, s), R.mul(e, t), R.mul(f, s), R.mul(f, t)
    return R.dot((A.a, A.b, A.c, A.d), (es, et, fs, ft))


def nu_value(A: Mat2, e, f, s, t):
    R = A.ring
    return R.add(det2(A), R.add(R.mul(e, s), R.mul(f, t)))


@dataclass(frozen=True)
class ExtWitness:
    A: Mat2
    e: Any
    f: Any
    s: Any
    t: Any
    aplus: Mat3
    simple: bool
    route: str = ""

    def valid(self) -> bool:
        """Recheck determinant, top-left block and (3,3) entry from scratch."""
        R = self.A.ring
        if not R.eq(det3(self.aplus), R.one()):
            return False
        if top_left(self.aplus) != self.A:
            return False
        return (not self.simple) or R.is_zero(self.aplus[2, 2])


def witness_from_extension(A: Mat2, Aplus: Mat3, route: str = "") -> ExtWitness:
    e, f, s, t, v = border(Aplus)
    return ExtWitness(A, e, f, s, t, Aplus, A.ring.is_zero(v), route)


def simple_witness(A: Mat2, e, f, s, t, route: str = "") -> ExtWitness:
    return ExtWitness(A, e, f, s, t, assemble_extension(A, e, f, s, t), True, route)


def _require_unimodular(A: Mat2):
    if not is_unimodular_mat(A):
        raise NotUnimodular(f"{A} is not unimodular")


# ---------------------------------------------------------------------------
# 2x2 Smith normal form

@dataclass(frozen=True)
class Smith2:
    M: Mat2
    N: Mat2
    D: Mat2

    def holds(self) -> bool:
        return mul2(mul2(self.M, self._A), self.N) == self.D

    _A: Mat2 = field(default=None, repr=False, compare=False)


def _smith_int(a: int, b: int, c: int, d: int):
    """Integer Smith form with determinant-one transforms.

    Returns ``(M, N, (g, h))`` with ``M [[a,b],[c,d]] N = diag(g, h)``,
    ``g >= 0`` and ``g | h``.
    """
    B = [[a, b], [c, d]]
    M = [[1, 0], [0, 1]]
    N = [[1, 0], [0, 1]]

    def rows(T):  # B <- T B, M <- T M
        nonlocal B, M
        B = [[T[i][0] * B[0][j] + T[i][1] * B[1][j] for j in range(2)] for i in range(2)]
        M = [[T[i][0] * M[0][j] + T[i][1] * M[1][j] for j in range(2)] for i in range(2)]

    def cols(T):  # B <- B T, N <- N T
        nonlocal B, N
        B = [[B[i][0] * T[0][j] + B[i][1] * T[1][j] for j in range(2)] for i in range(2)]
        N = [[N[i][0] * T[0][j] + N[i][1] * T[1][j] for j in range(2)] for i in range(2)]

    while True:
        nz = [(abs(B[i][j]), i, j) for i in range(2) for j in range(2) if B[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        if i == 1:
            rows([[0, 1], [-1, 0]])
        if j == 1:
            cols([[0, -1], [1, 0]])
        p = B[0][0]
        q = B[1][0] // p
        rows([[1, 0], [-q, 1]])
        q = B[0][1] // p
        cols([[1, -q], [0, 1]])
        if B[1][0] or B[0][1]:
            continue
        if B[1][1] % p:
            rows([[1, 1], [0, 1]])
            continue
        break
    if B[0][0] < 0:
        rows([[-1, 0], [0, -1]])
    return M, N, (B[0][0], B[1][1])


def smith2(A: Mat2) -> Smith2:
    """Diagonalise ``A`` by determinant-one row and column operations.

    Over Z the result is ``diag(g, h)`` with ``g >= 0``; for unimodular
    input ``g == 1`` and ``h == det(A)``. Over Z/n the computation runs on
    integer lifts; a unit in the corner is then moved into the second
    diagonal entry so that the corner becomes 1.
    """
    R = A.ring
    if isinstance(R, Integers):
        M, N, (g, h) = _smith_int(*A.entries())
        return Smith2(Mat2.of(R, M), Mat2.of(R, N), diag2(R, g, h), A)
    if isinstance(R, ModN):
        n = R.n
        M, N, (g, h) = _smith_int(*A.entries())
        M = [[v % n for v in r] for r in M]
        N = [[v % n for v in r] for r in N]
        g, h = g % n, h % n
        if gcd(g, n) == 1 and g != 1:
            u = inverse_mod(g, n)
            M = [[u * v % n for v in M[0]], [g * v % n for v in M[1]]]
            g, h = 1, h * g % n
        return Smith2(Mat2.of(R, M), Mat2.of(R, N), diag2(R, g, h), A)
    raise Unsupported(f"smith2 works over Z and Z/n, not {R}")


def simple_extension_snf(A: Mat2) -> ExtWitness:
    """Simple extension through the Smith form.

    With ``M A N = diag(1, det A)``, the matrix
    ``sigma(M^-1) [[1,0,0],[0,det A,1],[0,-1,0]] sigma(N^-1)`` works.
    """
    R = A.ring
    sm = smith2(A)
    if not R.eq(sm.D.a, R.one()):
        raise NotUnimodular(f"{A} is not unimodular")
    o, z = R.one(), R.zero()
    core = Mat3(R, (o, z, z, z, sm.D.d, o, z, R.neg(o), z))
    aplus = mul3(mul3(sigma(inverse2(sm.M)), core), sigma(inverse2(sm.N)))
    return witness_from_extension(A, aplus, "snf")


# ---------------------------------------------------------------------------
# closed forms for special shapes

def closed_form_extension(A: Mat2) -> ExtWitness | None:
    """Try the explicit extensions available for special shapes.

    Covers a unit corner, a unimodular first row (including c = d = 0),
    diagonal matrices with coprime diagonal, and ``[[a, ab], [ac, d]]``
    with (a, d) unimodular. Returns None if no shape applies.
    """
    R = A.ring
    a, b, c, d = A.entries()
    o, z = R.one(), R.zero()
    if R.is_unit(a):
        return simple_witness(A, o, z, R.inverse(a), z, "unit-corner")
    cert = R.unimodular_certificate([a, b])
    if cert is not None:
        s, t = cert
        return simple_witness(A, o, z, s, t, "coprime-row")
    if R.is_zero(b) and R.is_zero(c):
        cert = R.unimodular_certificate([a, d])
        if cert is not None:
            e, f = cert
            return simple_witness(A, e, f, o, o, "diagonal")
    if isinstance(R, Integers) and a != 0 and b % a == 0 and c % a == 0:
        bq, cq = b // a, c // a
        cert = R.unimodular_certificate([a, d])
        if cert is not None:
            q, f = cert
            return simple_witness(A, q - cq * f * (1 - bq), f, 1 - bq, o, "multiples")
    return None


# ---------------------------------------------------------------------------
# structured construction over Z

@dataclass(frozen=True)
class PR5Data:
    g: int
    h: int
    a1: int
    c1: int
    b1: int
    d1: int
    e1: int
    f1: int
    l: int
    m: int
    w: int
    v: int
    case: str


def _pr5_wv(g, h, l, m, budget):
    um = lambda *xs: xgcd_list(list(xs))[0] == 1
    if um(g, l):
        return g, 1, "(g,l)"
    if um(g, m):
        return 1, 0, "(g,m)"
    if um(h, m):
        # w*m + v'*(h*l) = 1, v = h*v'
        _, cs = xgcd_list([m, h * l])
        return cs[0], h * cs[1], "(h,m)"
    if um(h, l):
        _, cs = xgcd_list([l, m])
        p, q = cs
        return h * q + l, h * p - m, "(h,l)"
    for w, v in box_order(budget, 2):
        if um(g, w * m + v * l) and um(w, h * v * l):
            return w, v, "search"
    raise BudgetExhausted(f"no (w, v) with max-norm <= {budget}")


def simple_extension_pr5(A: Mat2, budget: int = 25) -> tuple[ExtWitness, PR5Data]:
    """Structured construction over Z from the gcds of the two columns.

    Write ``(a, c) = g (a', c')`` and ``(b, d) = h (b', d')``. With
    ``a'e' + c'f' = 1``, ``l = b'c' - a'd'`` and ``m = b'e' + d'f'`` the
    border ``(e, f) = (w e' + c' v, w f' - a' v)`` works as soon as
    ``(g, wm + vl)`` and ``(w, hvl)`` are unimodular.
    """
    R = A.ring
    if not isinstance(R, Integers):
        raise Unsupported("the structured construction is implemented over Z")
    _require_unimodular(A)
    a, b, c, d = A.entries()
    g = gcd(a, c)
    if g == 0:
        raise RingError("first column is zero")
    a1, c1 = a // g, c // g
    h = gcd(b, d)
    if h == 0:
        b1, d1 = 0, 1
    else:
        b1, d1 = b // h, d // h
    _, (e1, f1) = xgcd_list([a1, c1])
    l = b1 * c1 - a1 * d1
    m = b1 * e1 + d1 * f1
    w, v, case = _pr5_wv(g, h, l, m, budget)
    e = w * e1 + c1 * v
    f = w * f1 - a1 * v
    p, q = a * e + c * f, b * e + d * f
    gg, (s, t) = xgcd_list([p, q])
    if gg != 1:
        raise RingError("internal: structured border is not unimodular")
    wit = simple_witness(A, e, f, s, t, "pr5")
    return wit, PR5Data(g, h, a1, c1, b1, d1, e1, f1, l, m, w, v, case)


# ---------------------------------------------------------------------------
# extension through the reduction modulo det(A)

def extend_via_reduction(A: Mat2) -> ExtWitness:
    """Extension of an integer matrix via a simple extension of A mod det(A).

    Lifting that extension gives a matrix of determinant ``1 + w det(A)``;
    putting ``-w`` in the corner fixes the determinant. The result is not
    simple in general.
    """
    R = A.ring
    if not isinstance(R, Integers):
        raise Unsupported("extend_via_reduction works over Z")
    _require_unimodular(A)
    dlt = det2(A)
    if dlt in (1, -1):
        return witness_from_extension(A, sigma(A), "sigma")
    if dlt == 0:
        col, row = nonfull_decompose(A)
        return nonfull_extension(A, col, row)
    n = abs(dlt)
    Rn = ModN(n)
    An = Mat2(Rn, *(x % n for x in A.entries()))
    wn = simple_extension_snf(An)
    e, f, s, t = int(wn.e), int(wn.f), int(wn.s), int(wn.t)
    lifted = eq8_value(A, e, f, s, t)
    w, rem = divmod(lifted - 1, dlt)
    if rem:
        raise RingError("internal: lifted determinant is not 1 modulo det(A)")
    aplus = assemble_extension(A, e, f, s, t, -w)
    return witness_from_extension(A, aplus, "reduction")


# ---------------------------------------------------------------------------
# non-full matrices

def nonfull_decompose(A: Mat2) -> tuple[tuple, tuple]:
    """Write a unimodular determinant-zero matrix as column times row."""
    R = A.ring
    _require_unimodular(A)
    if not R.is_zero(det2(A)):
        raise RingError("non-full decomposition needs det(A) = 0")
    a, b, c, d = A.entries()
    if isinstance(R, Integers):
        if (a, b) != (0, 0):
            g = gcd(a, b)
            n, q = a // g, b // g
        else:
            g = gcd(c, d)
            n, q = c // g, d // g
        l = a // n if n else b // q
        m = c // n if n else d // q
        col, row = (l, m), (n, q)
    else:
        wit = find_simple_extension(A)
        e, f, s, t = wit.e, wit.f, wit.s, wit.t
        p, r = R.unimodular_certificate([e, f])
        # M = [[e, f], [-r', p']] with det 1 needs e*p' + f*r' = 1
        M = Mat2(R, e, f, R.neg(r), p)
        u, v = R.add(R.mul(A.a, e), R.mul(A.c, f)), R.add(R.mul(A.b, e), R.mul(A.d, f))
        N = Mat2(R, s, R.neg(v), t, u)
        MAN = mul2(mul2(M, A), N)
        w = MAN.c
        col = apply2(inverse2(M), (R.one(), w))
        row = (u, v)
    if not is_non_full(A, col, row):
        raise RingError("internal: decomposition does not reproduce A")
    return col, row


def nonfull_extension(A: Mat2, col: Sequence, row: Sequence) -> ExtWitness:
    """Simple extension of ``col * row`` from Bezout data of both factors."""
    R = A.ring
    ce = R.unimodular_certificate(list(col))
    rs = R.unimodular_certificate(list(row))
    if ce is None or rs is None:
        raise NotUnimodular("the factors of a non-full decomposition must be unimodular")
    e, f = ce
    s, t = rs
    return simple_witness(A, e, f, s, t, "non-full")


# ---------------------------------------------------------------------------
# generic search

def find_simple_extension(A: Mat2, budget: int = 25) -> ExtWitness:
    """Find a simple extension by the method suited to the ring.

    Integers use the Smith form, finite rings an exhaustive scan, and
    imaginary quadratic rings a bounded scan of border rows. Raises
    :class:`BudgetExhausted` when the bounded scan finds nothing.
    """
    R = A.ring
    if isinstance(R, Integers):
        return simple_extension_snf(A)
    if R.finite:
        from .statements import finite_simple_extension
        wit = finite_simple_extension(A)
        if wit is None:
            raise NotSimplyExtendable(f"{A} has no simple extension over {R}")
        return wit
    if isinstance(R, Quadratic):
        wit = quadratic_border_search(A, budget)
        if wit is None:
            raise BudgetExhausted(f"no simple extension with border entries in box {budget}")
        return wit
    raise Unsupported(f"no simple-extension search over {R}")


class NotSimplyExtendable(RingError):
    pass


def _quadratic_unimodular_pairs(R: Quadratic, A: Mat2, bound: int):
    """Vectorised test, over all borders (e, f) in the box, of whether
    ``(ae + cf, be + df)`` generates the unit ideal.

    The ideal is the Z-span of p, wp, q, wq, which is all of Z^2 exactly
    when the 2x2 minors of those four vectors have gcd 1.
    """
    D = R.D
    grid = box_grid(bound, 4)  # columns e0, e1, f0, f1
    e0, e1, f0, f1 = (grid[:, i] for i in range(4))

    def mul(x, y0, y1):
        return x[0] * y0 + D * x[1] * y1, x[0] * y1 + x[1] * y0

    a, b, c, d = A.entries()
    ae, ce = mul(a, e0, e1), mul(c, f0, f1)
    be, de = mul(b, e0, e1), mul(d, f0, f1)
    p0, p1 = ae[0] + ce[0], ae[1] + ce[1]
    q0, q1 = be[0] + de[0], be[1] + de[1]
    cross = p0 * q1 - p1 * q0
    minors = [p0 * p0 - D * p1 * p1, q0 * q0 - D * q1 * q1, cross,
              p0 * q0 - D * p1 * q1, D * p1 * q1 - p0 * q0, -D * cross]
    g = np.zeros_like(p0)
    for mnr in minors:
        g = np.gcd(g, mnr)
    return grid, g == 1


def quadratic_border_search(A: Mat2, bound: int) -> ExtWitness | None:
    R = A.ring
    if not isinstance(R, Quadratic):
        raise Unsupported("quadratic border search needs a quadratic ring")
    grid, ok = _quadratic_unimodular_pairs(R, A, bound)
    if not ok.any():
        return None
    row = grid[ok][first_in_scan_order(grid[ok])]
    e, f = (int(row[0]), int(row[1])), (int(row[2]), int(row[3]))
    p = R.add(R.mul(A.a, e), R.mul(A.c, f))
    q = R.add(R.mul(A.b, e), R.mul(A.d, f))
    s, t = R.unimodular_certificate([p, q])
    return simple_witness(A, e, f, s, t, "quadratic-box")


def quadratic_border_count(A: Mat2, bound: int) -> tuple[int, int]:
    """(number of borders tested, number admitting a completion)."""
    grid, ok = _quadratic_unimodular_pairs(A.ring, A, bound)
    return len(grid), int(ok.sum())


def quadratic_nonfull_decompose(A: Mat2) -> tuple[tuple, tuple] | None:
    """Decide whether a determinant-zero matrix over an imaginary quadratic
    ring is a column times a row; returns the factors or None (full).

    A nonzero entry has finitely many divisors (their norms divide its
    norm), so trying every divisor as the matching column entry settles
    the question.
    """
    R = A.ring
    if not isinstance(R, Quadratic) or R.D > 0:
        raise Unsupported("fullness is decided over imaginary quadratic rings")
    if not R.is_zero(det2(A)):
        raise RingError("fullness test expects det(A) = 0")
    ents = A.entries()
    nonzero = [(R.norm(v), k) for k, v in enumerate(ents) if not R.is_zero(v)]
    if not nonzero:
        z = R.zero()
        return (z, z), (z, z)
    nrm, k = min(nonzero)
    i, j = divmod(k, 2)
    entry = ents[k]
    for dn in range(1, nrm + 1):
        if nrm % dn:
            continue
        for u in elements_of_norm(R, dn):
            rj = R.divide(u, entry)
            if rj is None:
                continue
            col, row = [None, None], [None, None]
            col[i], row[j] = u, rj
            ci = R.divide(rj, ents[2 * (1 - i) + j])
            rj2 = R.divide(u, ents[2 * i + (1 - j)])
            if ci is None or rj2 is None:
                continue
            col[1 - i], row[1 - j] = ci, rj2
            if is_non_full(A, col, row):
                return tuple(col), tuple(row)
    return None


# ---------------------------------------------------------------------------
# lifting determinant-zero matrices through t-adic approximations

def _sym_mod(x: int, m: int) -> int:
    r = x % m
    return r - m if r > m // 2 else r


def lift_det_zero(A: Mat2, t: int, k: int) -> list[Mat2]:
    """Matrices ``B_0 = A, B_1, ..., B_k`` with ``B_n = B_{n-1} mod t^(2^(n-1))``
    and ``det(B_n) = 0 mod t^(2^n)``.

    One step uses ``det(B + T X) = det(B) + T(aw + dx - bz - cy) mod T^2``
    for ``X = [[x, y], [z, w]]``; the linear form is solved with the
    entries' Bezout combination, which is invertible modulo t.
    """
    R = A.ring
    if not isinstance(R, Integers):
        raise Unsupported("lift_det_zero works over Z")
    if t < 2 or k < 0:
        raise RingError("need t >= 2 and k >= 0")
    if det2(A) % t:
        raise RingError("t must divide det(A)")
    _require_unimodular(A)
    out = [A]
    B = A
    for n in range(1, k + 1):
        T = t ** (2 ** (n - 1))
        a, b, c, d = B.entries()
        s = det2(B) // T
        g, (ca, cb, cc, cd) = xgcd_list([a, b, c, d])
        kk = (-s * inverse_mod(g, T)) % T if T > 1 else 0
        w, z, y, x = ca * kk, -cb * kk, -cc * kk, cd * kk
        w, z, y, x = (_sym_mod(v, T) for v in (w, z, y, x))
        B = Mat2(R, a + T * x, b + T * y, c + T * z, d + T * w)
        out.append(B)
    return out


# ---------------------------------------------------------------------------
# characteristic values nu = det(A) + es + ft

@dataclass
class NuReport:
    A: Mat2
    bound: int
    values: list[int]
    witnesses: dict[int, tuple[int, int, int, int]]
    progression: tuple[int, int] | None  # (residue, modulus) for diagonal A
    base: int | None = None

    def in_progression(self, v: int) -> bool:
        if self.progression is None:
            return False
        r, m = self.progression
        return v == r if m == 0 else (v - r) % m == 0


def nu_enumerate(A: Mat2, bound: int) -> NuReport:
    """All values ``det(A) + es + ft`` over borders in the box of the given
    max-norm, each with its first witness in scan order.

    For a border row (e, f) the completions (s, t) form a line, so only
    the points of that line inside the box are visited.
    """
    R = A.ring
    if not isinstance(R, Integers):
        raise Unsupported("nu_enumerate works over Z")
    a, b, c, d = A.entries()
    dlt = det2(A)
    best: dict[int, tuple] = {}
    B = bound
    for e in range(-B, B + 1):
        for f in range(-B, B + 1):
            p, q = a * e + c * f, b * e + d * f
            g, s0, t0 = xgcd(p, q)
            if g != 1:
                continue
            # solutions: s = s0 + k q, t = t0 - k p
            lo, hi = -10 ** 18, 10 ** 18
            for base, step in ((s0, q), (t0, -p)):
                if step == 0:
                    if abs(base) > B:
                        lo, hi = 1, 0
                    continue
                k1, k2 = sorted(((-B - base) / step, (B - base) / step))
                lo = max(lo, int(np.ceil(k1)))
                hi = min(hi, int(np.floor(k2)))
            if p == 0 or q == 0:
                # one coordinate is free within the box
                if lo > hi:
                    continue
                lo, hi = max(lo, -2 * B - abs(s0) - abs(t0)), min(hi, 2 * B + abs(s0) + abs(t0))
            for kk in range(lo, hi + 1):
                s, t = s0 + kk * q, t0 - kk * p
                if abs(s) > B or abs(t) > B:
                    continue
                nu = dlt + e * s + f * t
                cand = (e, f, s, t)
                old = best.get(nu)
                if old is None or scan_key(cand) < scan_key(old):
                    best[nu] = cand
    prog, base = None, None
    if b == 0 and c == 0:
        _, E0, F0 = xgcd(a, d)
        base = a * d + E0 + F0
        mod = abs(d - a)
        prog = (base % mod if mod else base, mod)
    return NuReport(A, bound, sorted(best), best, prog, base)


# ---------------------------------------------------------------------------
# universal matrices over Z[x, y, z]

def universal_matrix(name: str) -> Mat2:
    """The four matrices D, E, F, G over Z[x, y, z] (by letter)."""
    P = PolyZ3()
    one, zero = Poly.const(1), Poly()
    u = one - Y * Z
    mats = {
        "D": (X * u, Y, zero, (one - X) * u),
        "E": (X, Y, zero, (one - X) * u * u),
        "F": (X, Y, zero, (one - X) * u),
        "G": (X, Y, zero, one - X - Y * Z),
    }
    if name not in mats:
        raise RingError(f"unknown universal matrix {name!r}")
    return Mat2(P, *mats[name])


def evaluate_hom(M: Mat2, ring: Ring, images: Sequence) -> Mat2:
    """Image of a polynomial matrix under x, y, z -> images (in ``ring``)."""
    if not isinstance(M.ring, PolyZ3):
        raise RingError("evaluate_hom expects a matrix over Z[x,y,z]")
    for v in images:
        ring.check(v)
    ev = [p.evaluate(images, ring.one(), ring.add, ring.mul, ring.from_int) for p in M.entries()]
    return Mat2(ring, *ev)


def substitute_matrix(M: Mat2, images: Sequence[Poly]) -> Mat2:
    return Mat2(M.ring, *(p.substitute(images) for p in M.entries()))


@dataclass(frozen=True)
class Companion:
    A: Mat2
    M: Mat2
    triangular: Mat2  # M A = [[g, u], [0, h]]
    split: tuple[int, int, int]  # (a, b, c) with g = ac, h = bc
    bezout: tuple[int, int, int, int]  # (a', b', c', u')
    D: Mat2
    phi: tuple[int, int, int]

    def matches_universal(self) -> bool:
        return evaluate_hom(universal_matrix("D"), self.A.ring, self.phi) == self.D


def companion_test_matrix(A: Mat2) -> Companion:
    """Companion matrix of an integer matrix, obtained from the universal
    matrix D at an integer point.

    Triangularise ``M A = [[g, u], [0, h]]``, write ``g = ac`` and
    ``h = bc`` with (a, b) coprime, choose ``aa' + bb' = 1`` and
    ``cc' + uu' = 1``; then ``[[aa'cc', u], [0, bb'cc']]`` is D at
    ``(aa', u, u')``.
    """
    R = A.ring
    if not isinstance(R, Integers):
        raise Unsupported("companion_test_matrix works over Z")
    _require_unimodular(A)
    a, b, c, d = A.entries()
    g0, p, q = xgcd(a, c)
    if g0 == 0:
        M = identity2(R)
    else:
        M = Mat2(R, p, q, -c // g0, a // g0)
    T = mul2(M, A)
    g, u, h = T.a, T.b, T.d
    cg = gcd(g, h)
    if cg == 0:
        aq, bq = 1, 0
    else:
        aq, bq = g // cg, h // cg
    g1, (aq1, bq1) = xgcd_list([aq, bq])
    g2, (c1, u1) = xgcd_list([cg, u])
    if g1 != 1 or g2 != 1:
        raise RingError("internal: companion Bezout data missing")
    x = aq * aq1
    D = Mat2(R, x * cg * c1, u, 0, bq * bq1 * cg * c1)
    return Companion(A, M, T, (aq, bq, cg), (aq1, bq1, c1, u1), D, (x, u, u1))


# ---------------------------------------------------------------------------
# symmetric determinant-zero matrices

@dataclass(frozen=True)
class PellResult:
    e: Any
    f: Any
    unit: Any
    pair: tuple
    witness: ExtWitness


def pell_simple_extendable(A: Mat2, box: int = 64) -> PellResult | None:
    """Look for (e, f) with ``a e^2 - c f^2`` a unit, for symmetric
    ``A = [[a, b], [b, c]]`` of determinant zero.

    Such a pair makes ``(ae - bf, be - cf)`` unimodular because
    ``a e^2 - c f^2 = e(ae - bf) + f(be - cf)``, which gives a simple
    extension. Not finding one is not a refutation.
    """
    R = A.ring
    if not R.eq(A.b, A.c):
        raise RingError("pell_simple_extendable expects a symmetric matrix")
    if not R.is_zero(det2(A)):
        raise RingError("pell_simple_extendable expects det(A) = 0")
    a, b, _, c = A.entries()
    if R.finite:
        cands = ((e, f) for e in R.elements() for f in R.elements())
    elif isinstance(R, Integers):
        cands = box_order(box, 2)
    else:
        raise Unsupported(f"pell search is not available over {R}")
    for e, f in cands:
        val = R.sub(R.mul(a, R.mul(e, e)), R.mul(c, R.mul(f, f)))
        if not R.is_unit(val):
            continue
        inv = R.inverse(val)
        pair = (R.sub(R.mul(a, e), R.mul(b, f)), R.sub(R.mul(b, e), R.mul(c, f)))
        wit = simple_witness(A, e, R.neg(f), R.mul(e, inv), R.mul(f, inv), "pell")
        return PellResult(e, f, val, pair, wit)
    return None


# ---------------------------------------------------------------------------
# a determinant-zero matrix with no simple extension

@dataclass
class Ex11Certificate:
    k: int
    q: int
    ring: Quadratic
    B: Mat2
    det_zero: bool
    unimodular: bool
    two_irreducible: bool
    norm_two_elements: list
    two_divides: dict
    full: bool
    box: int
    borders_tested: int
    borders_completing: int

    @property
    def ok(self) -> bool:
        return (self.det_zero and self.unimodular and self.two_irreducible
                and not self.norm_two_elements and not any(self.two_divides.values())
                and self.full and self.borders_completing == 0)


def ex11_matrix(k: int) -> Mat2:
    q = 4 * k + 1
    R = Quadratic(-q)
    return Mat2(R, (2 * k + 1, 0), (1, -1), (1, 1), (2, 0))


def ex11_certificate(k: int, box: int = 10) -> Ex11Certificate:
    """Certificate that ``[[2k+1, 1-w], [1+w, 2]]`` over Z[w], w^2 = -(4k+1),
    is full and hence has no simple extension.

    ``2`` is irreducible (there is no element of norm 2) and divides
    neither ``1 + w`` nor ``1 - w``; a column-times-row factorisation
    would force one of these divisibilities. The bounded border scan is a
    consistency check on top.
    """
    if k < 1:
        raise RingError("k must be positive")
    B = ex11_matrix(k)
    R = B.ring
    two = (2, 0)
    irr = irreducible_in_quadratic(R, two)
    tested, completing = quadratic_border_count(B, box)
    return Ex11Certificate(
        k=k, q=-R.D, ring=R, B=B,
        det_zero=R.is_zero(det2(B)),
        unimodular=is_unimodular_mat(B),
        two_irreducible=irr.irreducible,
        norm_two_elements=elements_of_norm(R, 2),
        two_divides={"1+w": R.divide(two, (1, 1)) is not None,
                     "1-w": R.divide(two, (1, -1)) is not None},
        full=quadratic_nonfull_decompose(B) is None,
        box=box, borders_tested=tested, borders_completing=completing,
    )
