"""2x2 and 3x3 matrices over the rings of :mod:`sl3ext.rings`.

Column vectors throughout: a matrix acts on the left of a column.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .rings import ModN, Integers, Ring, RingError, RingMismatch, parse_ring


@dataclass(frozen=True)
class Mat2:
    ring: Ring
    a: Any
    b: Any
    c: Any
    d: Any

    def __post_init__(self):
        for v in self.entries():
            self.ring.check(v)

    @classmethod
    def of(cls, ring: Ring, rows: Sequence[Sequence]) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(ring, a, b, c, d)

    @classmethod
    def ints(cls, ring: Ring, rows: Sequence[Sequence[int]]) -> "Mat2":
        (a, b), (c, d) = rows
        f = ring.from_int
        return cls(ring, f(a), f(b), f(c), f(d))

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def rows(self) -> list[list]:
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self):
        f = self.ring.format
        return f"[[{f(self.a)}, {f(self.b)}], [{f(self.c)}, {f(self.d)}]]"


@dataclass(frozen=True)
class Mat3:
    ring: Ring
    m: tuple  # 9 entries, row-major

    def __post_init__(self):
        if len(self.m) != 9:
            raise RingError("a 3x3 matrix needs nine entries")
        for v in self.m:
            self.ring.check(v)

    @classmethod
    def of(cls, ring: Ring, rows: Sequence[Sequence]) -> "Mat3":
        return cls(ring, tuple(v for r in rows for v in r))

    @classmethod
    def ints(cls, ring: Ring, rows: Sequence[Sequence[int]]) -> "Mat3":
        return cls(ring, tuple(ring.from_int(v) for r in rows for v in r))

    def __getitem__(self, ij):
        i, j = ij
        return self.m[3 * i + j]

    def rows(self) -> list[list]:
        return [list(self.m[3 * i:3 * i + 3]) for i in range(3)]

    def __str__(self):
        f = self.ring.format
        return "[" + ", ".join("[" + ", ".join(f(v) for v in r) + "]" for r in self.rows()) + "]"


def _same_ring(*mats):
    r = mats[0].ring
    for m in mats[1:]:
        if m.ring != r:
            raise RingMismatch(f"matrices over {r} and {m.ring} cannot be combined")
    return r


def det2(A: Mat2):
    R = A.ring
    return R.sub(R.mul(A.a, A.d), R.mul(A.b, A.c))


def det3(A: Mat3):
    R = A.ring
    m = A.rows()
    total = R.zero()
    for j, sign in ((0, 1), (1, -1), (2, 1)):
        cols = [k for k in range(3) if k != j]
        minor = R.sub(R.mul(m[1][cols[0]], m[2][cols[1]]), R.mul(m[1][cols[1]], m[2][cols[0]]))
        term = R.mul(m[0][j], minor)
        total = R.add(total, term) if sign > 0 else R.sub(total, term)
    return total


def mul2(A: Mat2, B: Mat2) -> Mat2:
    R = _same_ring(A, B)
    dot = lambda x, y, z, w: R.add(R.mul(x, y), R.mul(z, w))
    return Mat2(R, dot(A.a, B.a, A.b, B.c), dot(A.a, B.b, A.b, B.d),
                dot(A.c, B.a, A.d, B.c), dot(A.c, B.b, A.d, B.d))


def mul3(A: Mat3, B: Mat3) -> Mat3:
    R = _same_ring(A, B)
    out = []
    for i in range(3):
        for j in range(3):
            out.append(R.sum(R.mul(A[i, k], B[k, j]) for k in range(3)))
    return Mat3(R, tuple(out))


def transpose2(A: Mat2) -> Mat2:
    return Mat2(A.ring, A.a, A.c, A.b, A.d)


def transpose3(A: Mat3) -> Mat3:
    return Mat3(A.ring, tuple(A[j, i] for i in range(3) for j in range(3)))


def identity2(R: Ring) -> Mat2:
    return Mat2(R, R.one(), R.zero(), R.zero(), R.one())


def identity3(R: Ring) -> Mat3:
    o, z = R.one(), R.zero()
    return Mat3(R, (o, z, z, z, o, z, z, z, o))


def diag2(R: Ring, x, y) -> Mat2:
    return Mat2(R, x, R.zero(), R.zero(), y)


def adjugate2(A: Mat2) -> Mat2:
    R = A.ring
    return Mat2(R, A.d, R.neg(A.b), R.neg(A.c), A.a)


def inverse2(A: Mat2) -> Mat2:
    R = A.ring
    u = R.inverse(det2(A))
    adj = adjugate2(A)
    return Mat2(R, *(R.mul(u, v) for v in adj.entries()))


def theta(A: Mat3) -> Mat2:
    """Top-left 2x2 block of a determinant-one 3x3 matrix."""
    R = A.ring
    if not R.eq(det3(A), R.one()):
        raise RingError("theta is defined on matrices of determinant one")
    return Mat2(R, A[0, 0], A[0, 1], A[1, 0], A[1, 1])


def top_left(A: Mat3) -> Mat2:
    return Mat2(A.ring, A[0, 0], A[0, 1], A[1, 0], A[1, 1])


def sigma(M: Mat2) -> Mat3:
    """Pad an invertible 2x2 matrix to a determinant-one 3x3 matrix."""
    R = M.ring
    dinv = R.inverse(det2(M))
    z = R.zero()
    return Mat3(R, (M.a, M.b, z, M.c, M.d, z, z, z, dinv))


def kernel_gens(A: Mat2) -> tuple[tuple, tuple]:
    """Two vectors spanning the kernel of a determinant-zero matrix."""
    R = A.ring
    if not R.is_zero(det2(A)):
        raise RingError("kernel generators are returned for determinant-zero matrices only")
    return (R.neg(A.b), A.a), (R.neg(A.d), A.c)


def apply2(A: Mat2, v: Sequence) -> tuple:
    R = A.ring
    return (R.add(R.mul(A.a, v[0]), R.mul(A.b, v[1])), R.add(R.mul(A.c, v[0]), R.mul(A.d, v[1])))


def reduce_mod(A, m: int):
    """Image of an integer matrix in Z/m."""
    if not isinstance(A.ring, Integers):
        raise RingError("reduce_mod expects an integer matrix")
    if m < 2:
        raise RingError("modulus must be at least 2")
    R = ModN(m)
    if isinstance(A, Mat2):
        return Mat2(R, *(v % m for v in A.entries()))
    return Mat3(R, tuple(v % m for v in A.m))


def is_unimodular_mat(A: Mat2) -> bool:
    """True iff the four entries generate the unit ideal."""
    return A.ring.is_unimodular(list(A.entries()))


def is_non_full(A: Mat2, col: Sequence, row: Sequence) -> bool:
    """Check that ``A == col * row`` (a column times a row)."""
    R = A.ring
    prods = [R.mul(col[i], row[j]) for i in range(2) for j in range(2)]
    return all(R.eq(x, y) for x, y in zip(prods, A.entries()))


@dataclass(frozen=True)
class Equivalence:
    """``M * A * N == result``."""

    M: Mat2
    A: Mat2
    N: Mat2
    result: Mat2

    def holds(self) -> bool:
        return mul2(mul2(self.M, self.A), self.N) == self.result


def equivalence(M: Mat2, A: Mat2, N: Mat2) -> Equivalence:
    return Equivalence(M, A, N, mul2(mul2(M, A), N))


# -- text formats -----------------------------------------------------------

def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return parts


def parse_matrix(ring: Ring | str, text: str):
    """Parse ``"a,b;c,d"`` (2x2) or ``"a,b,c;d,e,f;g,h,i"`` (3x3)."""
    if isinstance(ring, str):
        ring = parse_ring(ring)
    rows = [_split_top(r, ",") for r in _split_top(text.strip(), ";")]
    shape = {len(r) for r in rows}
    if len(rows) == 2 and shape == {2}:
        return Mat2.of(ring, [[ring.parse(v) for v in r] for r in rows])
    if len(rows) == 3 and shape == {3}:
        return Mat3.of(ring, [[ring.parse(v) for v in r] for r in rows])
    raise RingError(f"matrix text {text!r} is neither 2x2 nor 3x3")


def format_matrix(A) -> str:
    f = A.ring.format
    return ";".join(",".join(f(v) for v in r) for r in A.rows())
