"""Membership of finite rings in classes defined by extension properties.

Every class is a universally quantified statement over finitely many
tuples, so for a finite ring membership is decided by running through
all of them; a failure is reported with the offending tuple, which
:func:`revalidate_counterexample` can recheck by brute force.

Matrix classes (over unimodular 2x2 matrices A):

========  ===================================================
PI2       det A = 0  =>  A has an extension
E2        every A has an extension
SE2       every A has a simple extension
E2T       triangular A have extensions
SE2T      triangular A have simple extensions
SE2SYM    symmetric A have simple extensions
Z2        some unimodular B = A (mod det A) has det B = 0
WZ2       same, B not required to be unimodular
WSU2      A N is symmetric for some invertible N
========  ===================================================

Unit-group classes U2, WU2, W2, WW2, the equation classes V2, WV2 and
J21, and the stable range flags sr1, fsr15 and asr1 are documented at
their checkers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .finite import FiniteRing, finite_ring, first_hits
from .matrix import Mat2, det2
from .rings import Ring, RingError, Unsupported
from .statements import _statement_scan

MATRIX_SIZE_LIMIT = 16
J21_SIZE_LIMIT = 6

CONTAINMENTS = (
    ("SE2", "SE2T"), ("SE2", "E2"), ("E2", "WZ2"), ("SE2", "Z2"),
    ("V2", "WV2"), ("U2", "WU2"), ("E2", "E2T"), ("SE2T", "E2T"), ("Z2", "WZ2"),
    ("SE2", "SE2SYM"),
)


@dataclass
class ClassVerdict:
    name: str
    member: bool
    counterexample: dict | None = None
    checked: int = 0
    skipped: str = ""


@dataclass
class ClassReport:
    ring: Ring
    verdicts: dict[str, ClassVerdict] = field(default_factory=dict)
    flags: dict[str, bool] = field(default_factory=dict)

    def member(self, name: str) -> bool:
        return self.verdicts[name].member

    def containment_violations(self) -> list[tuple[str, str]]:
        out = []
        for p, q in CONTAINMENTS:
            vp, vq = self.verdicts.get(p), self.verdicts.get(q)
            if vp and vq and not vp.skipped and not vq.skipped and vp.member and not vq.member:
                out.append((p, q))
        return out


def _mat(fr: FiniteRing, idx) -> Mat2:
    return Mat2(fr.ring, *(fr.value(i) for i in idx))


# ---------------------------------------------------------------------------
# matrix classes

def _extendable_hits(fr: FiniteRing, mats: np.ndarray) -> np.ndarray:
    """(e, f) with ``(ae + cf, be + df, det A)`` unimodular: then s, t, v
    complete an extension with corner v."""
    um3 = fr.unimodular_mask(3)
    mul, add = fr.mul, fr.add
    dets = fr.det(mats[:, 0], mats[:, 1], mats[:, 2], mats[:, 3])

    def pred(rows, blk):
        m = mats[rows]
        a, b, c, d = (m[:, i][:, None] for i in range(4))
        e, f = blk[:, 0][None, :], blk[:, 1][None, :]
        return um3[add[mul[a, e], mul[c, f]], add[mul[b, e], mul[d, f]], dets[rows][:, None]]

    return first_hits(len(mats), fr.pairs(), pred)


def _wsu_hits(fr: FiniteRing, mats: np.ndarray) -> np.ndarray:
    mul, add = fr.mul, fr.add

    def pred(rows, blk):
        m = mats[rows]
        a, b, c, d = (m[:, i][:, None] for i in range(4))
        n1, n2, n3, n4 = (blk[:, i][None, :] for i in range(4))
        return add[mul[a, n2], mul[b, n4]] == add[mul[c, n1], mul[d, n3]]

    return first_hits(len(mats), fr.gl2_quads(), pred)


def _matrix_class(fr: FiniteRing, name: str) -> ClassVerdict:
    mats = fr.unimodular_quads()
    if name in ("PI2",):
        mats = mats[fr.det(mats[:, 0], mats[:, 1], mats[:, 2], mats[:, 3]) == fr.zero]
    if name in ("E2T", "SE2T"):
        mats = mats[mats[:, 2] == fr.zero]
    if name == "SE2SYM":
        mats = mats[mats[:, 1] == mats[:, 2]]
    if name in ("SE2", "SE2T", "SE2SYM"):
        _, hits = _statement_scan(fr, mats, 2)
    elif name in ("E2", "E2T", "PI2"):
        hits = _extendable_hits(fr, mats)
    elif name == "Z2":
        _, hits = _statement_scan(fr, mats, 7)
    elif name == "WZ2":
        _, hits = _statement_scan(fr, mats, 10)
    elif name == "WSU2":
        hits = _wsu_hits(fr, mats)
    else:
        raise RingError(f"unknown matrix class {name}")
    bad = np.nonzero(hits < 0)[0]
    if bad.size:
        return ClassVerdict(name, False, {"A": _mat(fr, mats[bad[0]])}, len(mats))
    return ClassVerdict(name, True, None, len(mats))


# ---------------------------------------------------------------------------
# unit-group classes

def _u2(fr: FiniteRing, squares_only: bool) -> ClassVerdict:
    """U2: for (a, b) unimodular and any c the product map
    U(R/ac) x U(R/bc) -> U(R/c) is onto. WU2: its image contains every
    square of U(R/c)."""
    name = "WU2" if squares_only else "U2"
    um2 = fr.unimodular_mask(2)
    seen: dict = {}
    checked = 0
    for a, b in zip(*np.nonzero(um2)):
        for c in range(fr.N):
            ac, bc = fr.mul[a, c], fr.mul[b, c]
            key = (ac, bc, c)
            checked += 1
            if key not in seen:
                Qc = fr.quotient([c])
                Ha = Qc.image(np.nonzero(fr.quotient([ac]).unit_mask)[0])
                Hb = Qc.image(np.nonzero(fr.quotient([bc]).unit_mask)[0])
                prod = set(Qc.canon[fr.mul[np.ix_(Ha, Hb)]].ravel().tolist())
                units = Qc.unit_reps()
                if squares_only:
                    target = set(Qc.canon[fr.mul[units, units]].tolist())
                else:
                    target = set(units.tolist())
                seen[key] = target <= prod
            if not seen[key]:
                return ClassVerdict(name, False, {"a": fr.value(a), "b": fr.value(b),
                                                  "c": fr.value(c)}, checked)
    return ClassVerdict(name, True, None, checked)


def _w2(fr: FiniteRing) -> ClassVerdict:
    """W2: for (a, b) unimodular and any c, the image of U(R/abc) in
    U(R/a) x U(R/b) is the product of its two projections."""
    um2 = fr.unimodular_mask(2)
    checked = 0
    for a, b in zip(*np.nonzero(um2)):
        Qa, Qb = fr.quotient([a]), fr.quotient([b])
        for c in range(fr.N):
            checked += 1
            abc = fr.mul[fr.mul[a, b], c]
            xs = np.nonzero(fr.quotient([abc]).unit_mask)[0]
            pairs = {(int(u), int(v)) for u, v in zip(Qa.canon[xs], Qb.canon[xs])}
            ia = {u for u, _ in pairs}
            ib = {v for _, v in pairs}
            if len(pairs) != len(ia) * len(ib):
                return ClassVerdict("W2", False, {"a": fr.value(a), "b": fr.value(b),
                                                  "c": fr.value(c)}, checked)
    return ClassVerdict("W2", True, None, checked)


def _ww2_ok(fr: FiniteRing, a: int, b: int, c: int) -> bool:
    one_minus_a = fr.sub[fr.one, a]
    Q1, Q2 = fr.quotient([a, c]), fr.quotient([one_minus_a, c])
    b0 = int(Q1.canon[b])
    b1inv = Q2.inverse(b)
    xa = set(Q1.image(np.nonzero(fr.quotient([a]).unit_mask)[0]).tolist())
    y1 = set(Q2.image(np.nonzero(fr.quotient([one_minus_a]).unit_mask)[0]).tolist())
    for z in np.nonzero(fr.quotient([c]).unit_mask)[0]:
        u = int(Q1.canon[fr.mul[b0, Q1.inverse(z)]])
        v = int(Q2.canon[fr.mul[b1inv, Q2.inverse(z)]])
        if u in xa and v in y1:
            return True
    return False


def _ww2(fr: FiniteRing) -> ClassVerdict:
    """WW2: for (b, c) unimodular and any a, with U = U(R/(a,c)) x
    U(R/(1-a,c)), the pair (b, b^-1) lies in the product of the images of
    U(R/a) x U(R/(1-a)) and of U(R/c) (embedded diagonally)."""
    um2 = fr.unimodular_mask(2)
    checked = 0
    for b, c in zip(*np.nonzero(um2)):
        for a in range(fr.N):
            checked += 1
            if not _ww2_ok(fr, a, int(b), int(c)):
                return ClassVerdict("WW2", False, {"a": fr.value(a), "b": fr.value(b),
                                                   "c": fr.value(c)}, checked)
    return ClassVerdict("WW2", True, None, checked)


# ---------------------------------------------------------------------------
# equation classes

def _unimodular_triples(fr: FiniteRing) -> np.ndarray:
    return np.argwhere(fr.unimodular_mask(3))


def _v2_hits(fr: FiniteRing, triples: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """V2: for (a, b, c) unimodular some (x, y, z, w) with xw = yz solves
    ``(1 - ax)(1 - cw) = y(b + acz)``."""
    mul, sub, add = fr.mul, fr.sub, fr.add
    one = fr.one
    cands = fr.det_zero_quads()

    def pred(rows, blk):
        t = triples[rows]
        a, b, c = (t[:, i][:, None] for i in range(3))
        x, y, z, w = (blk[:, i][None, :] for i in range(4))
        lhs = mul[sub[one, mul[a, x]], sub[one, mul[c, w]]]
        rhs = mul[y, add[b, mul[mul[a, c], z]]]
        return lhs == rhs

    return cands, first_hits(len(triples), cands, pred)


def _wv2_sets(fr: FiniteRing, triples: np.ndarray) -> np.ndarray:
    """Admissible values of ``a'c'b + a z1 + c z2`` for each triple."""
    um2 = fr.unimodular_mask(2)
    out = np.zeros((len(triples), fr.N), dtype=bool)
    for i, (a, b, c) in enumerate(triples):
        ua = np.nonzero(um2[a])[0]
        uc = np.nonzero(um2[c])[0]
        vals = np.unique(fr.mul[fr.mul[np.ix_(ua, uc)].ravel(), b])
        ideal = np.nonzero(fr.ideal_mask([a, c]))[0]
        out[i, fr.add[np.ix_(vals, ideal)].ravel()] = True
    return out


def _wv2_hits(fr: FiniteRing, triples: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """WV2 asks for x, y, z1, z2, w, a', c', a'', c'' with
    ``(a, a'a'')``, ``(c, c'c'')`` and ``(a''-ax, y, S, c''-cw)``
    unimodular and ``(a''-ax)(c''-cw) = yS`` where
    ``S = a'c'b + a z1 + c z2``.

    Replacing a'' by a'' - ax keeps every condition, so x = w = 0 loses
    nothing; the search then runs over ``P = a''``, ``Q = c''``, y and S
    with ``PQ = yS``.
    """
    um2 = fr.unimodular_mask(2)
    um4 = fr.unimodular_mask(4)
    svals = _wv2_sets(fr, triples)
    cands = fr.det_zero_quads()  # (P, y, S, Q) with PQ - yS = 0

    def pred(rows, blk):
        t = triples[rows]
        a, c = t[:, 0][:, None], t[:, 2][:, None]
        P, y, S, Q = (blk[:, i][None, :] for i in range(4))
        ok = um2[a, P] & um2[c, Q] & um4[P, y, S, Q]
        return ok & svals[rows][:, blk[:, 2]]

    return cands, first_hits(len(triples), cands, pred)


def wv2_full_witness(fr: FiniteRing, a: int, b: int, c: int, cand) -> dict:
    """Expand a reduced WV2 hit into all nine variables (as indices)."""
    P, y, S, Q = (int(v) for v in cand)
    um2 = fr.unimodular_mask(2)
    for a1 in np.nonzero(um2[a])[0]:
        for c1 in np.nonzero(um2[c])[0]:
            base = fr.mul[fr.mul[a1, c1], b]
            for z1 in range(fr.N):
                for z2 in range(fr.N):
                    if fr.add[base, fr.add[fr.mul[a, z1], fr.mul[c, z2]]] == S:
                        return {"x": fr.zero, "y": y, "z1": z1, "z2": z2, "w": fr.zero,
                                "a1": int(a1), "c1": int(c1), "a2": P, "c2": Q}
    raise RingError("internal: WV2 witness could not be expanded")


def wv2_conditions(fr: FiniteRing, a, b, c, v: dict) -> bool:
    """The defining WV2 conditions, evaluated literally (indices)."""
    mul, add, sub = fr.mul, fr.add, fr.sub
    um2, um4 = fr.unimodular_mask(2), fr.unimodular_mask(4)
    p = sub[v["a2"], mul[a, v["x"]]]
    q = sub[v["c2"], mul[c, v["w"]]]
    s = add[add[mul[mul[v["a1"], v["c1"]], b], mul[a, v["z1"]]], mul[c, v["z2"]]]
    return bool(um4[p, v["y"], s, q] and um2[a, mul[v["a1"], v["a2"]]]
                and um2[c, mul[v["c1"], v["c2"]]] and mul[p, q] == mul[v["y"], s])


def _triple_class(fr: FiniteRing, name: str) -> ClassVerdict:
    triples = _unimodular_triples(fr)
    if name == "V2":
        _, hits = _v2_hits(fr, triples)
    else:
        _, hits = _wv2_hits(fr, triples)
    bad = np.nonzero(hits < 0)[0]
    if bad.size:
        a, b, c = triples[bad[0]]
        return ClassVerdict(name, False, {"a": fr.value(a), "b": fr.value(b), "c": fr.value(c)},
                            len(triples))
    return ClassVerdict(name, True, None, len(triples))


def _j21(fr: FiniteRing, weak: bool) -> ClassVerdict:
    """J21: whenever ``ax + by + cz + dw = alpha`` is solvable, it has a
    solution with ``xy - zw = Delta`` for every Delta. WJ21 asks this
    only for unimodular (a, b, c, d)."""
    name = "WJ21" if weak else "J21"
    if fr.N > J21_SIZE_LIMIT:
        return ClassVerdict(name, False, None, 0, skipped=f"|R| > {J21_SIZE_LIMIT}")
    q = fr.all_quads()
    x, y, z, w = q[:, 0], q[:, 1], q[:, 2], q[:, 3]
    quad = fr.sub[fr.mul[x, y], fr.mul[z, w]]
    um4 = fr.unimodular_mask(4)
    checked = 0
    for a, b, c, d in q:
        if weak and not um4[a, b, c, d]:
            continue
        checked += 1
        lin = fr.add[fr.add[fr.mul[a, x], fr.mul[b, y]], fr.add[fr.mul[c, z], fr.mul[d, w]]]
        seen = np.zeros((fr.N, fr.N), dtype=bool)
        seen[lin, quad] = True
        solvable = seen.any(axis=1)
        bad = solvable & ~seen.all(axis=1)
        if bad.any():
            alpha = int(np.nonzero(bad)[0][0])
            delta = int(np.nonzero(~seen[alpha])[0][0])
            return ClassVerdict(name, False, {
                "a": fr.value(a), "b": fr.value(b), "c": fr.value(c), "d": fr.value(d),
                "alpha": fr.value(alpha), "Delta": fr.value(delta)}, checked)
    return ClassVerdict(name, True, None, checked)


# ---------------------------------------------------------------------------
# stable range flags

def stable_range_flags(ring: Ring) -> dict[str, bool]:
    """sr1: U(R) -> U(R/b) onto for all b. fsr15: U(R/c) -> U(R/(b,c))
    onto for all b and all c != 0. asr1: the same for c outside the
    Jacobson radical."""
    fr = finite_ring(ring)
    units = np.nonzero(fr.units)[0]
    sr1 = all(np.array_equal(fr.quotient([b]).image(units), fr.quotient([b]).unit_reps())
              for b in range(fr.N))
    jac = fr.jacobson_mask()
    fsr, asr = True, True
    for c in range(fr.N):
        if c == fr.zero:
            continue
        uc = np.nonzero(fr.quotient([c]).unit_mask)[0]
        for b in range(fr.N):
            Qbc = fr.quotient([b, c])
            onto = np.array_equal(Qbc.image(uc), Qbc.unit_reps())
            if not onto:
                fsr = False
                if not jac[c]:
                    asr = False
    return {"sr1": sr1, "fsr15": fsr, "asr1": asr}


# ---------------------------------------------------------------------------
# entry points

CLASS_NAMES = ("PI2", "E2", "SE2", "E2T", "SE2T", "SE2SYM", "Z2", "WZ2", "WSU2",
               "U2", "WU2", "W2", "WW2", "V2", "WV2", "J21", "WJ21")
MATRIX_CLASSES = ("PI2", "E2", "SE2", "E2T", "SE2T", "SE2SYM", "Z2", "WZ2", "WSU2")


def check_class(ring: Ring, name: str) -> ClassVerdict:
    if not ring.finite:
        raise Unsupported("class membership is decided for finite rings")
    fr = finite_ring(ring)
    if name in MATRIX_CLASSES:
        if fr.N > MATRIX_SIZE_LIMIT:
            return ClassVerdict(name, False, None, 0, skipped=f"|R| > {MATRIX_SIZE_LIMIT}")
        return _matrix_class(fr, name)
    if name in ("U2", "WU2"):
        return _u2(fr, name == "WU2")
    if name == "W2":
        return _w2(fr)
    if name == "WW2":
        return _ww2(fr)
    if name in ("V2", "WV2"):
        return _triple_class(fr, name)
    if name in ("J21", "WJ21"):
        return _j21(fr, name == "WJ21")
    raise RingError(f"unknown class {name!r}")


def classify(ring: Ring, classes: tuple[str, ...] = CLASS_NAMES) -> ClassReport:
    rep = ClassReport(ring)
    for name in classes:
        rep.verdicts[name] = check_class(ring, name)
    rep.flags = stable_range_flags(ring)
    return rep


# ---------------------------------------------------------------------------
# counterexample revalidation (literal brute force, scalar ring operations)

def _all_tuples(ring: Ring, k: int):
    return itertools.product(ring.elements(), repeat=k)


def revalidate_counterexample(ring: Ring, name: str, cx: dict) -> bool:
    """True iff the reported tuple really violates the class definition."""
    R = ring
    one = R.one()
    if name in MATRIX_CLASSES:
        A: Mat2 = cx["A"]
        a, b, c, d = A.entries()
        dl = det2(A)
        if not R.is_unimodular(list(A.entries())):
            return False
        if name == "PI2" and not R.is_zero(dl):
            return False
        if name in ("E2T", "SE2T") and not R.is_zero(c):
            return False
        if name == "SE2SYM" and not R.eq(b, c):
            return False
        if name in ("SE2", "SE2T", "SE2SYM", "E2", "E2T", "PI2"):
            corner = [R.zero()] if name.startswith("SE") else R.elements()
            for e, f, s, t in _all_tuples(R, 4):
                base = R.dot((a, b, c, d), (R.mul(e, s), R.mul(e, t), R.mul(f, s), R.mul(f, t)))
                for v in corner:
                    if R.eq(R.add(base, R.mul(v, dl)), one):
                        return False
            return True
        if name in ("Z2", "WZ2"):
            for C in _all_tuples(R, 4):
                congruent = all(any(R.eq(R.mul(dl, q), R.sub(u, v)) for q in R.elements())
                                for u, v in zip(C, A.entries()))
                det0 = R.is_zero(R.sub(R.mul(C[0], C[3]), R.mul(C[1], C[2])))
                if congruent and det0 and (name == "WZ2" or R.is_unimodular(list(C))):
                    return False
            return True
        if name == "WSU2":
            for n1, n2, n3, n4 in _all_tuples(R, 4):
                if not R.is_unit(R.sub(R.mul(n1, n4), R.mul(n2, n3))):
                    continue
                if R.eq(R.add(R.mul(a, n2), R.mul(b, n4)), R.add(R.mul(c, n1), R.mul(d, n3))):
                    return False
            return True
    fr = finite_ring(ring)
    idx = {k: fr.to_index(v) for k, v in cx.items() if k in "abcd"}
    if name in ("V2", "WV2"):
        a, b, c = idx["a"], idx["b"], idx["c"]
        if not fr.unimodular_mask(3)[a, b, c]:
            return False
        if name == "V2":
            for x, y, z, w in _all_tuples(R, 4):
                if not R.eq(R.mul(x, w), R.mul(y, z)):
                    continue
                av, bv, cv = cx["a"], cx["b"], cx["c"]
                lhs = R.mul(R.sub(one, R.mul(av, x)), R.sub(one, R.mul(cv, w)))
                rhs = R.mul(y, R.add(bv, R.mul(R.mul(av, cv), z)))
                if R.eq(lhs, rhs):
                    return False
            return True
        cands, hits = _wv2_hits(fr, np.array([[a, b, c]]))
        return hits[0] < 0
    if name in ("U2", "WU2", "W2"):
        return not _unit_tuple_ok(R, name, cx["a"], cx["b"], cx["c"])
    if name == "WW2":
        return not _ww2_ok(FiniteRing(ring), idx["a"], idx["b"], idx["c"])
    if name in ("J21", "WJ21"):
        target = (cx["alpha"], cx["Delta"])
        solvable, hit = False, False
        for x, y, z, w in _all_tuples(R, 4):
            lin = R.dot((cx["a"], cx["b"], cx["c"], cx["d"]), (x, y, z, w))
            if R.eq(lin, target[0]):
                solvable = True
                if R.eq(R.sub(R.mul(x, y), R.mul(z, w)), target[1]):
                    hit = True
                    break
        return solvable and not hit
    raise RingError(f"unknown class {name!r}")


def _scalar_ideal(R: Ring, gens) -> frozenset:
    members = {R.zero()}
    for g in gens:
        members = {R.add(m, R.mul(g, r)) for m in members for r in R.elements()}
    return frozenset(members)


def _scalar_units_mod(R: Ring, ideal: frozenset) -> list:
    one = R.one()
    return [x for x in R.elements()
            if any(R.sub(R.mul(x, y), one) in ideal for y in R.elements())]


def _unit_tuple_ok(R: Ring, name: str, a, b, c) -> bool:
    """U2 / WU2 / W2 condition for one tuple, with cosets as explicit sets."""
    coset = lambda I, x: frozenset(R.add(x, i) for i in I)
    if name == "W2":
        Ia, Ib = _scalar_ideal(R, [a]), _scalar_ideal(R, [b])
        units = _scalar_units_mod(R, _scalar_ideal(R, [R.mul(R.mul(a, b), c)]))
        pairs = {(coset(Ia, x), coset(Ib, x)) for x in units}
        return len(pairs) == len({p for p, _ in pairs}) * len({q for _, q in pairs})
    Ic = _scalar_ideal(R, [c])
    ha = _scalar_units_mod(R, _scalar_ideal(R, [R.mul(a, c)]))
    hb = _scalar_units_mod(R, _scalar_ideal(R, [R.mul(b, c)]))
    prod = {coset(Ic, R.mul(x, y)) for x in ha for y in hb}
    uc = _scalar_units_mod(R, Ic)
    target = {coset(Ic, R.mul(x, x)) for x in uc} if name == "WU2" else {coset(Ic, x) for x in uc}
    return target <= prod


def classify_sweep(rings: list[Ring], classes: tuple[str, ...] = CLASS_NAMES,
                   workers: int = 1) -> list[ClassReport]:
    """Classify several rings; with ``workers > 1`` rings are split across
    processes and the reports come back in input order."""
    if workers <= 1 or len(rings) <= 1:
        return [classify(r, classes) for r in rings]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(classify, rings, [classes] * len(rings)))
