"""Exact commutative rings used throughout the package.

Five families are supported:

=============  ==========================  ===========================
specifier      ring                        element representation
=============  ==========================  ===========================
``Z``          the integers                ``int``
``Z/<n>``      integers modulo n (n >= 2)  ``int`` in ``[0, n)``
``Q[<D>]``     Z[w] with w*w = D           ``(a, b)`` meaning a + b*w
``ZXYZ``       Z[x, y, z]                  :class:`~sl3ext.poly.Poly`
``(S)x(T)``    direct product              ``(left, right)``
=============  ==========================  ===========================

Elements are plain Python values; the ring object does all arithmetic.
"""
from __future__ import annotations

import ast
import itertools
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Any, Iterator, Sequence

from .intlin import factorize, gcd_list, solve_integer_system, xgcd, xgcd_list
from .poly import Poly


class RingError(ValueError):
    """Bad input for a ring operation."""


class Unsupported(RingError):
    """The operation is not available for this ring family."""


class Undecided(RingError):
    """The question could not be settled by the available procedure."""


class RingMismatch(RingError):
    """Operands belong to different rings."""


class Ring:
    """Base class; subclasses are frozen dataclasses and therefore hashable."""

    finite = False
    domain = True

    # -- basic arithmetic ---------------------------------------------
    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, k: int):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero())

    def contains(self, a) -> bool:
        raise NotImplementedError

    def check(self, a):
        if not self.contains(a):
            raise RingMismatch(f"{a!r} is not an element of {self}")
        return a

    def sum(self, values):
        acc = self.zero()
        for v in values:
            acc = self.add(acc, v)
        return acc

    def dot(self, xs, ys):
        return self.sum(self.mul(x, y) for x, y in zip(xs, ys))

    def power(self, a, k: int):
        out = self.one()
        for _ in range(k):
            out = self.mul(out, a)
        return out

    # -- predicates ------------------------------------------------------
    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inverse(self, a):
        raise NotImplementedError

    def unimodular_certificate(self, xs: Sequence) -> list | None:
        """Coefficients ``c`` with ``sum(c_i * x_i) == 1``, or None if the
        entries generate a proper ideal."""
        raise NotImplementedError

    def is_unimodular(self, xs: Sequence) -> bool:
        return self.unimodular_certificate(xs) is not None

    def is_reduced(self) -> bool:
        return True

    # -- finite rings ----------------------------------------------------
    @property
    def size(self) -> int:
        raise Unsupported(f"{self} is infinite")

    def elements(self) -> list:
        raise Unsupported(f"{self} is infinite; enumeration needs a finite ring")

    # -- text ------------------------------------------------------------
    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        return parse_element(self, text)


@dataclass(frozen=True)
class Integers(Ring):
    def __str__(self):
        return "Z"

    def from_int(self, k):
        return int(k)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def contains(self, a):
        return isinstance(a, int) and not isinstance(a, bool)

    def is_unit(self, a):
        return a in (1, -1)

    def inverse(self, a):
        if a not in (1, -1):
            raise RingError(f"{a} is not a unit in Z")
        return a

    def unimodular_certificate(self, xs):
        g, coeffs = xgcd_list(list(xs))
        return coeffs if g == 1 else None


@dataclass(frozen=True)
class ModN(Ring):
    n: int

    finite = True

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise RingError(f"modulus must be an integer >= 2, got {self.n!r}")

    @property
    def domain(self):  # type: ignore[override]
        f = factorize(self.n)
        return len(f) == 1 and next(iter(f.values())) == 1

    def __str__(self):
        return f"Z/{self.n}"

    def from_int(self, k):
        return int(k) % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def contains(self, a):
        return isinstance(a, int) and not isinstance(a, bool) and 0 <= a < self.n

    def is_unit(self, a):
        return gcd(a, self.n) == 1

    def inverse(self, a):
        g, x, _ = xgcd(a, self.n)
        if g != 1:
            raise RingError(f"{a} is not a unit in {self}")
        return x % self.n

    def unimodular_certificate(self, xs):
        xs = list(xs)
        g, coeffs = xgcd_list(xs + [self.n])
        if g != 1:
            return None
        return [c % self.n for c in coeffs[:-1]]

    def is_reduced(self):
        return all(k == 1 for k in factorize(self.n).values())

    @property
    def size(self):
        return self.n

    def elements(self):
        return list(range(self.n))


def _is_square(d: int) -> bool:
    return d >= 0 and isqrt(d) ** 2 == d


@dataclass(frozen=True)
class Quadratic(Ring):
    """Z[w] with w^2 = D for a non-square integer D."""

    D: int

    def __post_init__(self):
        if not isinstance(self.D, int) or _is_square(self.D):
            raise RingError(f"Q[{self.D}]: D must be a non-square integer")

    def __str__(self):
        return f"Q[{self.D}]"

    def from_int(self, k):
        return (int(k), 0)

    def gen(self):
        return (0, 1)

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def neg(self, a):
        return (-a[0], -a[1])

    def sub(self, a, b):
        return (a[0] - b[0], a[1] - b[1])

    def mul(self, a, b):
        return (a[0] * b[0] + self.D * a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def conj(self, a):
        return (a[0], -a[1])

    def norm(self, a) -> int:
        return a[0] * a[0] - self.D * a[1] * a[1]

    def contains(self, a):
        return (isinstance(a, tuple) and len(a) == 2
                and all(isinstance(v, int) and not isinstance(v, bool) for v in a))

    def _require_imaginary(self, what: str):
        if self.D > 0:
            raise Unsupported(f"{what} over real quadratic rings (D > 0) is unsupported")

    def is_unit(self, a):
        self._require_imaginary("unit test")
        if self.D == -1:
            return self.norm(a) == 1
        return a in ((1, 0), (-1, 0))

    def inverse(self, a):
        if not self.is_unit(a):
            raise RingError(f"{self.format(a)} is not a unit in {self}")
        return self.conj(a) if self.norm(a) == 1 else self.neg(self.conj(a))

    def divide(self, a, b):
        """b / a if exact, else None."""
        if a == (0, 0):
            return (0, 0) if b == (0, 0) else None
        nrm = self.norm(a)
        num = self.mul(b, self.conj(a))
        if num[0] % nrm or num[1] % nrm:
            return None
        return (num[0] // nrm, num[1] // nrm)

    def unimodular_certificate(self, xs):
        # the ideal generated by xs is the Z-span of every x and w*x
        xs = list(xs)
        cols = []
        for x in xs:
            cols.append(x)
            cols.append(self.mul(self.gen(), x))
        rows = [[c[0] for c in cols], [c[1] for c in cols]]
        sol = solve_integer_system(rows, [1, 0])
        if sol is None:
            return None
        return [(sol[2 * i], sol[2 * i + 1]) for i in range(len(xs))]

    def format(self, a):
        x, y = a
        if y == 0:
            return str(x)
        sign = "+" if y > 0 else "-"
        return f"{x}{sign}{abs(y)}*w"


@dataclass(frozen=True)
class PolyZ3(Ring):
    """Z[x, y, z]."""

    max_degree = 4

    def __str__(self):
        return "ZXYZ"

    def from_int(self, k):
        return Poly.const(k)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def contains(self, a):
        return isinstance(a, Poly)

    def is_unit(self, a):
        return a.constant() in (1, -1)

    def inverse(self, a):
        if not self.is_unit(a):
            raise RingError(f"{a} is not a unit in Z[x,y,z]")
        return a

    def unimodular_certificate(self, xs):
        """Search a certificate of bounded degree.

        Refutation uses integer specialisations: if the entries evaluated
        at some integer point have a common factor, no certificate exists.
        """
        xs = list(xs)
        for pt in itertools.product(range(-2, 3), repeat=3):
            vals = [p.evaluate(pt, 1, lambda u, v: u + v, lambda u, v: u * v, int) for p in xs]
            if gcd_list(vals) != 1:
                return None
        for deg in range(self.max_degree + 1):
            cert = _poly_certificate(xs, deg)
            if cert is not None:
                return cert
        raise Undecided(
            "no unimodularity certificate of degree <= "
            f"{self.max_degree} and no refuting specialisation found"
        )


def _monomials(deg: int) -> list[tuple[int, int, int]]:
    return [(i, j, k) for i in range(deg + 1) for j in range(deg + 1 - i)
            for k in range(deg + 1 - i - j)]


def _poly_certificate(xs: list[Poly], deg: int) -> list[Poly] | None:
    monos = _monomials(deg)
    targets: dict[tuple, int] = {}
    columns = []
    for p in xs:
        for m in monos:
            prod = p * Poly({m: 1})
            columns.append(prod)
            for e in prod.terms:
                targets.setdefault(e, len(targets))
    targets.setdefault((0, 0, 0), len(targets))
    rows = [[0] * len(columns) for _ in targets]
    for j, col in enumerate(columns):
        for e, c in col.terms.items():
            rows[targets[e]][j] = c
    rhs = [0] * len(targets)
    rhs[targets[(0, 0, 0)]] = 1
    sol = solve_integer_system(rows, rhs)
    if sol is None:
        return None
    k = len(monos)
    return [Poly({m: sol[i * k + j] for j, m in enumerate(monos)}) for i in range(len(xs))]


@dataclass(frozen=True)
class Product(Ring):
    left: Ring
    right: Ring

    domain = False

    def __post_init__(self):
        if _product_depth(self) > 2:
            raise RingError("product rings may be nested at most two deep")

    @property
    def finite(self):  # type: ignore[override]
        return self.left.finite and self.right.finite

    def __str__(self):
        return f"({self.left})x({self.right})"

    def from_int(self, k):
        return (self.left.from_int(k), self.right.from_int(k))

    def add(self, a, b):
        return (self.left.add(a[0], b[0]), self.right.add(a[1], b[1]))

    def neg(self, a):
        return (self.left.neg(a[0]), self.right.neg(a[1]))

    def sub(self, a, b):
        return (self.left.sub(a[0], b[0]), self.right.sub(a[1], b[1]))

    def mul(self, a, b):
        return (self.left.mul(a[0], b[0]), self.right.mul(a[1], b[1]))

    def eq(self, a, b):
        return self.left.eq(a[0], b[0]) and self.right.eq(a[1], b[1])

    def contains(self, a):
        return (isinstance(a, tuple) and len(a) == 2
                and self.left.contains(a[0]) and self.right.contains(a[1]))

    def is_unit(self, a):
        return self.left.is_unit(a[0]) and self.right.is_unit(a[1])

    def inverse(self, a):
        return (self.left.inverse(a[0]), self.right.inverse(a[1]))

    def unimodular_certificate(self, xs):
        xs = list(xs)
        cl = self.left.unimodular_certificate([x[0] for x in xs])
        cr = self.right.unimodular_certificate([x[1] for x in xs])
        if cl is None or cr is None:
            return None
        return list(zip(cl, cr))

    def is_reduced(self):
        return self.left.is_reduced() and self.right.is_reduced()

    @property
    def size(self):
        return self.left.size * self.right.size

    def elements(self):
        return [(u, v) for u in self.left.elements() for v in self.right.elements()]

    def format(self, a):
        return f"({self.left.format(a[0])},{self.right.format(a[1])})"


def _product_depth(r: Ring) -> int:
    if isinstance(r, Product):
        return 1 + max(_product_depth(r.left), _product_depth(r.right))
    return 0


# ---------------------------------------------------------------------------
# module level API

def parse_ring(spec: str) -> Ring:
    """Parse a ring specifier such as ``Z/12`` or ``(Z/2)x(Z/3)``."""
    s = spec.strip().replace(" ", "")
    if not s:
        raise RingError("empty ring specifier")
    if s.startswith("("):
        depth = 0
        for i, ch in enumerate(s):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0:
                break
        else:
            raise RingError(f"unbalanced parentheses in {spec!r}")
        left, rest = s[1:i], s[i + 1:]
        if not rest.startswith("x(") or not rest.endswith(")"):
            raise RingError(f"malformed product specifier {spec!r}")
        return Product(parse_ring(left), parse_ring(rest[2:-1]))
    if s == "Z":
        return Integers()
    if s == "ZXYZ":
        return PolyZ3()
    if s.startswith("Z/"):
        try:
            n = int(s[2:])
        except ValueError:
            raise RingError(f"bad modulus in {spec!r}") from None
        return ModN(n)
    if s.startswith("Q[") and s.endswith("]"):
        try:
            d = int(s[2:-1])
        except ValueError:
            raise RingError(f"bad discriminant in {spec!r}") from None
        return Quadratic(d)
    raise RingError(f"unknown ring specifier {spec!r}")


def parse_element(ring: Ring, text: str):
    """Parse an element literal (integers, ``a+b*w``, polynomials in x,y,z,
    or ``(u,v)`` for products)."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError:
        raise RingError(f"cannot parse element {text!r}") from None
    return _eval_node(ring, tree.body, text)


def _eval_node(ring: Ring, node, text):
    if isinstance(node, ast.Tuple):
        if not isinstance(ring, Product) or len(node.elts) != 2:
            raise RingError(f"tuple literal {text!r} needs a product ring")
        return (_eval_node(ring.left, node.elts[0], text),
                _eval_node(ring.right, node.elts[1], text))
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return ring.from_int(node.value)
    if isinstance(node, ast.Name):
        if node.id == "w" and isinstance(ring, Quadratic):
            return ring.gen()
        if node.id in ("x", "y", "z") and isinstance(ring, PolyZ3):
            return Poly.var(node.id)
        raise RingError(f"symbol {node.id!r} is not available in {ring}")
    if isinstance(node, ast.UnaryOp):
        v = _eval_node(ring, node.operand, text)
        if isinstance(node.op, ast.USub):
            return ring.neg(v)
        if isinstance(node.op, ast.UAdd):
            return v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)
                    and node.right.value >= 0):
                raise RingError(f"exponent must be a non-negative integer in {text!r}")
            return ring.power(_eval_node(ring, node.left, text), node.right.value)
        a = _eval_node(ring, node.left, text)
        b = _eval_node(ring, node.right, text)
        if isinstance(node.op, ast.Add):
            return ring.add(a, b)
        if isinstance(node.op, ast.Sub):
            return ring.sub(a, b)
        if isinstance(node.op, ast.Mult):
            return ring.mul(a, b)
    raise RingError(f"unsupported syntax in element {text!r}")


def is_unit(ring: Ring, a) -> bool:
    return ring.is_unit(ring.check(a))


def is_unimodular_tuple(ring: Ring, xs: Sequence) -> bool:
    """True iff the entries generate the unit ideal."""
    for x in xs:
        ring.check(x)
    return ring.is_unimodular(xs)


def gcd_bezout(ring: Ring, a, b) -> tuple[Any, Any, Any]:
    """``(g, x, y)`` with ``a*x + b*y == g`` generating the ideal (a, b).

    Integers give ``g >= 0`` (so gcd(0, 0) = 0). Over Z/n the gcd is the
    divisor of n generating the same ideal.
    """
    if isinstance(ring, Integers):
        return xgcd(a, b)
    if isinstance(ring, ModN):
        g0, x0, y0 = xgcd(a, b)
        g, u, _ = xgcd(g0, ring.n)
        return g % ring.n, (x0 * u) % ring.n, (y0 * u) % ring.n
    raise Unsupported(f"gcd_bezout is only available over Z and Z/n, not {ring}")


def divides(ring: Ring, a, b):
    """The quotient ``q`` with ``a*q == b`` if ``a`` divides ``b``, else None."""
    ring.check(a)
    ring.check(b)
    if isinstance(ring, Integers):
        if a == 0:
            return 0 if b == 0 else None
        return b // a if b % a == 0 else None
    if isinstance(ring, Quadratic):
        return ring.divide(a, b)
    if isinstance(ring, PolyZ3):
        return b.divide_exact(a)
    if ring.finite:
        for q in ring.elements():
            if ring.eq(ring.mul(a, q), b):
                return q
        return None
    raise Unsupported(f"divisibility is not available over {ring}")


def norm(ring: Ring, a) -> int:
    if not isinstance(ring, Quadratic):
        raise Unsupported("norm is defined for quadratic rings only")
    return ring.norm(ring.check(a))


def elements_of_norm(ring: Quadratic, n: int) -> list[tuple[int, int]]:
    """All a + b*w with norm n (D < 0, n >= 0)."""
    ring._require_imaginary("norm enumeration")
    out = []
    bmax = isqrt(n // -ring.D) if n >= 0 else -1
    for b in range(-bmax, bmax + 1):
        rest = n + ring.D * b * b
        if rest < 0:
            continue
        a = isqrt(rest)
        if a * a == rest:
            out.extend({(a, b), (-a, b)})
    return sorted(out)


@dataclass
class IrreducibilityCertificate:
    element: tuple[int, int]
    irreducible: bool
    factor: tuple | None
    cofactor: tuple | None
    norms_checked: list[int]


def irreducible_in_quadratic(ring: Quadratic, a) -> IrreducibilityCertificate:
    """Decide irreducibility of a nonzero non-unit in an imaginary quadratic ring.

    Any proper factor has norm strictly between 1 and norm(a) dividing
    norm(a); there are finitely many such elements and each is tested.
    """
    if not isinstance(ring, Quadratic):
        raise Unsupported("irreducibility is decided in quadratic rings only")
    ring._require_imaginary("irreducibility")
    ring.check(a)
    n = ring.norm(a)
    if a == (0, 0) or ring.is_unit(a):
        raise RingError("irreducibility is asked of nonzero non-units")
    checked = []
    for d in range(2, n):
        if n % d:
            continue
        checked.append(d)
        for b in elements_of_norm(ring, d):
            q = ring.divide(b, a)
            if q is not None:
                return IrreducibilityCertificate(a, False, b, q, checked)
    return IrreducibilityCertificate(a, True, None, None, checked)


def enumerate_elements(ring: Ring) -> Iterator:
    """Elements of a finite ring in canonical ascending order."""
    if not ring.finite:
        raise Unsupported(f"{ring} is infinite")
    return iter(ring.elements())
