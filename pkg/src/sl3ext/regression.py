"""Regression criteria with runtime limits.

Each criterion returns a :class:`CriterionResult`; the CLI ``verify``
command and the acceptance tests both run these.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from math import gcd
from typing import Callable

from . import extend
from .classes import classify, revalidate_counterexample
from .extend import (companion_test_matrix, ex11_certificate, evaluate_hom, lift_det_zero,
                     nu_enumerate, pell_simple_extendable, simple_extension_snf,
                     substitute_matrix, universal_matrix)
from .matrix import Mat2, Mat3, det2, det3, mul2, theta
from .poly import Poly, X, Y, Z
from .rings import Integers, ModN, PolyZ3
from .statements import verify_th8_chain
from .witnesses import c14_witness, cr3_witness, th5_8_witness

ZZ = Integers()


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    seconds: float
    limit: float
    detail: str

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return (f"[{mark}] criterion {self.number:2d} {self.name:<16s} "
                f"{self.seconds:7.2f}s / {self.limit:g}s  {self.detail}")


# -- 1: worked extensions ----------------------------------------------------

WORKED = [
    # (A, (e, f, s, t), displayed extension)
    ([[0, 3], [2, 6]], (1, -1, 1, -1), [[0, 3, -1], [2, 6, -1], [1, 1, 0]]),
    ([[6, -10], [0, -15]], (1, -1, 1, -1), [[6, -10, -1], [0, -15, -1], [1, 1, 0]]),
    ([[15, 6], [10, 14]], (-1, -2, -1, 1), [[15, 6, -2], [10, 14, 1], [-1, -1, 0]]),
    ([[30, 42], [70, 105]], (-3, 1, 1, -1), [[30, 42, 1], [70, 105, 3], [1, 1, 0]]),
]


def _worked() -> tuple[bool, str]:
    notes = []
    ok = True
    for rows, (e, f, s, t), shown in WORKED:
        A = Mat2.ints(ZZ, rows)
        built = extend.assemble_extension(A, e, f, s, t)
        good = (built == Mat3.ints(ZZ, shown) and det3(built) == 1 and theta(built) == A
                and built[2, 2] == 0)
        ok &= good
        notes.append(f"det(A)={det2(A)}:{'ok' if good else 'BAD'}")
    # the e = 1 family [[a, b, -1], [0, 1-a+b, -1], [1, 1, 0]] has determinant 1
    fam = all(det3(Mat3.ints(ZZ, [[a, b, -1], [0, 1 - a + b, -1], [1, 1, 0]])) == 1
              for a in range(-12, 13) for b in range(-12, 13))
    nu = nu_value_check()
    ok &= fam and nu
    notes.append(f"family:{'ok' if fam else 'BAD'} nu=149:{'ok' if nu else 'BAD'}")
    return ok, " ".join(notes)


def nu_value_check() -> bool:
    A = Mat2.ints(ZZ, [[15, 6], [10, 14]])
    return extend.nu_value(A, -1, -2, -1, 1) == 149


# -- 2: nu values ------------------------------------------------------------

def nu_oracle(a: int, d: int, bound: int) -> set[int]:
    """Realisable values for diag(a, d): ad + E + F with aE + dF = 1,
    E = es and F = ft products of box entries."""
    prods = {x * y for x in range(-bound, bound + 1) for y in range(-bound, bound + 1)}
    out = set()
    for E in prods:
        r = 1 - a * E
        if r % d == 0 and r // d in prods:
            out.add(a * d + E + r // d)
    return out


def _nu() -> tuple[bool, str]:
    rep = nu_enumerate(Mat2.ints(ZZ, [[7, 0], [0, 11]]), 40)
    vals = set(rep.values)
    mult4 = all(v % 4 == 0 for v in vals)
    oracle = nu_oracle(7, 11, 40)
    small = {v for v in range(-40, 41, 4)} & oracle
    rep5 = nu_enumerate(Mat2.ints(ZZ, [[1, 0], [0, 5]]), 10)
    ok = (mult4 and vals == oracle and small <= vals and rep.progression == (0, 4)
          and rep5.progression == (2, 4) and all(v % 4 == 2 for v in rep5.values))
    return ok, (f"{len(vals)} values, multiples of 4: {mult4}, oracle match: {vals == oracle}, "
                f"progressions {rep.progression} {rep5.progression}")


# -- 3: Smith route on random matrices -----------------------------------------

def random_unimodular(rng: random.Random, bound: int) -> Mat2:
    while True:
        a, b, c, d = (rng.randint(-bound, bound) for _ in range(4))
        if gcd(gcd(a, b), gcd(c, d)) == 1:
            return Mat2(ZZ, a, b, c, d)


def _snf(seed: int = 1) -> tuple[bool, str]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(1000):
        A = random_unimodular(rng, 10 ** 6)
        w = simple_extension_snf(A)
        if not (det3(w.aplus) == 1 and theta(w.aplus) == A and w.aplus[2, 2] == 0):
            bad += 1
    return bad == 0, f"{bad} failures in 1000"


# -- 4: the statement chain over Z/n ---------------------------------------------

def _chain() -> tuple[bool, str]:
    ok = True
    total = 0
    for n in range(2, 13):
        rep = verify_th8_chain(ModN(n))
        total += rep.matrices
        ok &= rep.ok and rep.exhaustive and all(v == rep.matrices for v in rep.holds_counts.values())
    return ok, f"{total} matrices over Z/2..Z/12"


# -- 5: lifting ----------------------------------------------------------------

def _lift(seed: int = 5) -> tuple[bool, str]:
    rng = random.Random(seed)
    count = bad = 0
    while count < 100:
        A = random_unimodular(rng, 50)
        if det2(A) % 5:
            continue
        count += 1
        Bs = lift_det_zero(A, 5, 5)
        for n in range(1, 6):
            prev, cur = Bs[n - 1], Bs[n]
            m = 5 ** (2 ** (n - 1))
            if any((u - v) % m for u, v in zip(cur.entries(), prev.entries())):
                bad += 1
            if det2(cur) % (5 ** (2 ** n)):
                bad += 1
    return bad == 0, f"{bad} failed steps over {count} matrices"


# -- 6: a full determinant-zero matrix ------------------------------------------------

def _ex11() -> tuple[bool, str]:
    certs = [ex11_certificate(k) for k in (1, 2, 3)]
    return all(c.ok for c in certs), ", ".join(
        f"k={c.k}: {'ok' if c.ok else 'BAD'} ({c.borders_tested} borders)" for c in certs)


# -- 7: universal matrices ------------------------------------------------------------

def _universal(seed: int = 7) -> tuple[bool, str]:
    P = PolyZ3()
    D, E, F, G = (universal_matrix(k) for k in "DEFG")
    one = Poly.const(1)
    left = Mat2(P, one, Poly(), Z * (X - 1) * (1 - Y * Z), one)
    right = Mat2(P, one, Poly(), X * Z, one)
    ident = [
        mul2(mul2(left, D), right) == E,
        substitute_matrix(F, [X, Y, 2 * Z - Y * Z * Z]) == E,
        evaluate_hom(D, ZZ, (2, 3, 1)) == Mat2.ints(ZZ, [[-4, 3], [0, 2]]),
        evaluate_hom(G, ZZ, (1, 0, 0)) == Mat2.ints(ZZ, [[1, 0], [0, 0]]),
    ]
    rng = random.Random(seed)
    comp_ok = 0
    for _ in range(100):
        comp_ok += companion_test_matrix(random_unimodular(rng, 1000)).matches_universal()
    return all(ident) and comp_ok == 100, f"identities {sum(ident)}/4, companion {comp_ok}/100"


# -- 8: equation witnesses -------------------------------------------------------------

def _witness(seed: int = 8) -> tuple[bool, str]:
    rng = random.Random(seed)
    r = lambda: rng.randint(-20, 20)
    counts = {"th5_8": 0, "cr3": 0, "c14": 0}
    while counts["th5_8"] < 200:
        a, b, c, d = r(), r(), r(), r()
        if gcd(a, b) != 1 or gcd(c, d) != 1:
            continue
        w = th5_8_witness(a, b, c, d)
        counts["th5_8"] += w is not None and w.exact
    for _ in range(200):
        w = cr3_witness(r(), r(), r())
        counts["cr3"] += w is not None and w.exact
    n = 0
    while n < 200:
        a, u, t = r(), r(), r()
        if u == 0:
            continue
        n += 1
        w = c14_witness(a, u, t)
        counts["c14"] += w is not None and w.exact
    return all(v == 200 for v in counts.values()), str(counts)


# -- 9: symmetric determinant-zero matrices ---------------------------------------------

def _pell(seed: int = 9) -> tuple[bool, str]:
    rng = random.Random(seed)
    found = good = 0
    for _ in range(100):
        while True:
            g, h = rng.randint(-20, 20), rng.randint(-20, 20)
            if gcd(g, h) == 1:
                break
        u = rng.choice((1, -1))
        A = Mat2(ZZ, g * g * u, g * h * u, g * h * u, h * h * u)
        res = pell_simple_extendable(A)
        if res is not None:
            found += 1
            good += res.witness.valid() and det3(res.witness.aplus) == 1
    return found == 100 and good == 100, f"found {found}/100, valid extensions {good}"


# -- 10: ring classes ----------------------------------------------------------------

CENSUS = ("PI2", "SE2", "E2", "Z2", "WZ2", "U2", "V2")


def _classes() -> tuple[bool, str]:
    reports = [classify(ModN(n)) for n in range(2, 17)]
    missing = [(str(r.ring), c) for r in reports for c in CENSUS if not r.member(c)]
    violations = [(str(r.ring), v) for r in reports for v in r.containment_violations()]
    # fabricated non-members must not survive revalidation
    R = ModN(6)
    fakes = [("SE2", {"A": Mat2.ints(R, [[1, 0], [0, 1]])}),
             ("Z2", {"A": Mat2.ints(R, [[1, 2], [3, 0]])}),
             ("U2", {"a": 1, "b": 0, "c": 2}),
             ("V2", {"a": 1, "b": 1, "c": 1})]
    rejected = sum(not revalidate_counterexample(R, name, cx) for name, cx in fakes)
    ok = not missing and not violations and rejected == len(fakes)
    return ok, (f"non-members {missing or 'none'}, containment violations {len(violations)}, "
                f"fake counterexamples rejected {rejected}/{len(fakes)}")


CRITERIA: list[tuple[int, str, float, Callable[[], tuple[bool, str]]]] = [
    (1, "worked-examples", 1.0, _worked),
    (2, "nu-values", 5.0, _nu),
    (3, "smith-route", 10.0, _snf),
    (4, "statement-chain", 60.0, _chain),
    (5, "lifting", 5.0, _lift),
    (6, "full-matrix", 10.0, _ex11),
    (7, "universal", 2.0, _universal),
    (8, "equations", 30.0, _witness),
    (9, "symmetric", 10.0, _pell),
    (10, "ring-classes", 120.0, _classes),
]


def run_criterion(number: int) -> CriterionResult:
    for num, name, limit, fn in CRITERIA:
        if num == number:
            t0 = time.perf_counter()
            try:
                ok, detail = fn()
            except Exception as exc:  # a crash is a failure, reported by name
                ok, detail = False, f"error: {exc!r}"
            dt = time.perf_counter() - t0
            return CriterionResult(num, name, ok and dt < limit, dt, limit, detail)
    raise KeyError(number)


def select(only: str | None) -> list[int]:
    if not only:
        return [c[0] for c in CRITERIA]
    out = []
    for tok in only.split(","):
        tok = tok.strip()
        for num, name, _, _ in CRITERIA:
            if tok == str(num) or tok == name:
                if num not in out:
                    out.append(num)
                break
        else:
            raise KeyError(tok)
    return out
