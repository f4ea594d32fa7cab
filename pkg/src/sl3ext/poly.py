"""Sparse polynomials in Z[x, y, z]."""
from __future__ import annotations

from typing import Any, Callable, Iterable, Mapping

Exp = tuple[int, int, int]
VARS = ("x", "y", "z")


class Poly:
    """Immutable polynomial stored as ``{(i, j, k): coefficient}``.

    Zero coefficients are never stored, so two polynomials are equal
    exactly when their term dictionaries are equal.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Exp, int] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            if c:
                clean[tuple(e)] = int(c)
        self.terms: dict[Exp, int] = clean
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, name: str) -> "Poly":
        e = [0, 0, 0]
        e[VARS.index(name)] = 1
        return cls({tuple(e): 1})

    def _coerce(self, other: Any) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exp, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out, base = Poly.const(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def constant(self) -> int | None:
        """The value if the polynomial is constant, else None."""
        if not self.terms:
            return 0
        if list(self.terms) == [(0, 0, 0)]:
            return self.terms[(0, 0, 0)]
        return None

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def leading(self) -> tuple[Exp, int]:
        e = max(self.terms)
        return e, self.terms[e]

    def divide_exact(self, divisor: "Poly") -> "Poly | None":
        """Quotient if ``divisor`` divides ``self`` in Z[x,y,z], else None.

        Plain division by leading terms in lex order; over a domain the
        leading term of any multiple of the divisor is divisible by the
        divisor's leading term, so a stuck step proves non-divisibility.
        """
        if divisor.is_zero():
            return Poly() if self.is_zero() else None
        de, dc = divisor.leading()
        rem, quot = self, Poly()
        while not rem.is_zero():
            re_, rc = rem.leading()
            if any(r < d for r, d in zip(re_, de)) or rc % dc:
                return None
            t = Poly({tuple(r - d for r, d in zip(re_, de)): rc // dc})
            quot = quot + t
            rem = rem - t * divisor
        return quot

    def evaluate(self, images: Iterable[Any], one: Any, add: Callable, mul: Callable,
                 from_int: Callable) -> Any:
        """Evaluate with ring operations supplied by the caller."""
        imgs = list(images)
        total = from_int(0)
        cache: dict[tuple[int, int], Any] = {}

        def power(v: int, k: int):
            key = (v, k)
            if key not in cache:
                acc = one
                for _ in range(k):
                    acc = mul(acc, imgs[v])
                cache[key] = acc
            return cache[key]

        for e, c in sorted(self.terms.items()):
            term = from_int(c)
            for v, k in enumerate(e):
                if k:
                    term = mul(term, power(v, k))
            total = add(total, term)
        return total

    def substitute(self, images: Iterable["Poly"]) -> "Poly":
        return self.evaluate(images, Poly.const(1), lambda a, b: a + b,
                             lambda a, b: a * b, Poly.const)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), t[0]), reverse=False):
            mono = "*".join(
                v if k == 1 else f"{v}**{k}" for v, k in zip(VARS, e) if k
            )
            if not mono:
                s = str(abs(c))
            elif abs(c) == 1:
                s = mono
            else:
                s = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", s))
        out = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
        for sign, s in parts[1:]:
            out += f" {sign} {s}"
        return out


X = Poly.var("x")
Y = Poly.var("y")
Z = Poly.var("z")
