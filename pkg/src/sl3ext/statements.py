"""Ten equivalent-or-nearly-equivalent properties of a unimodular 2x2 matrix.

For ``A = [[a, b], [c, d]]`` with ``delta = ad - bc`` the statements are

1. A is equivalent to ``diag(1, delta)``;
2. A has a simple extension;
3. some (e, f) makes ``(ae + cf, be + df)`` unimodular;
4. ``ax + by + cz + dw = 1`` for a non-full ``[[x, y], [z, w]]``;
5. ``ax + by + cz + dw = 1`` with ``xw - yz = 0``;
6. some unimodular B has ``det B = 0``, ``delta B + A`` unimodular and
   ``det(delta B + A) = 0``;
7. some unimodular ``C = A (mod delta)`` has ``det C = 0``;
8. some B has ``det B = det(delta B + A) = 0``;
9. ``ax + by + cz + dw - delta (xw - yz) = 1`` has a solution;
10. some ``C = A (mod delta)`` has ``det C = 0``.

Over any commutative ring 1-4 are equivalent, 4 implies 5, 5-8 are
equivalent, and 8 => 9 => 10; 10 => 9 holds in reduced rings.

Finite rings are decided exhaustively; every scan runs on index tables
for many matrices at once. Over Z every statement is witnessed
constructively or by a bounded scan.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from .extend import (BudgetExhausted, ExtWitness, eq8_value, nonfull_decompose,
                     quadratic_border_search, quadratic_nonfull_decompose, simple_extension_snf,
                     simple_witness, smith2)
from .finite import FiniteRing, finite_ring, first_hits
from .intlin import crt, factorize, gcd_list, inverse_mod, xgcd, xgcd_list
from .matrix import (Mat2, apply2, det2, diag2, inverse2, is_non_full, is_unimodular_mat, mul2)
from .rings import Integers, Quadratic, Ring, RingError, Unsupported, divides
from .search import box_grid, box_order, first_in_scan_order

STATEMENTS = tuple(range(1, 11))

EQUIVALENT_BLOCKS = ((1, 2, 3, 4), (5, 6, 7, 8))
IMPLICATIONS = ((4, 5), (8, 9), (9, 10))

DEFAULT_BUDGET = 25
RESIDUE_BUDGET = 10 ** 4


def implication_edges(reduced: bool) -> list[tuple[int, int]]:
    edges = []
    for block in EQUIVALENT_BLOCKS:
        for i in block:
            for j in block:
                if i != j:
                    edges.append((i, j))
    edges += list(IMPLICATIONS)
    if reduced:
        edges.append((10, 9))
    return edges


@dataclass
class StatementStatus:
    k: int
    status: str  # "holds", "fails" or "unknown"
    witness: dict | None = None
    note: str = ""
    route: str = ""

    @property
    def holds(self) -> bool:
        return self.status == "holds"


@dataclass
class StatementReport:
    A: Mat2
    delta: Any
    statuses: list[StatementStatus] = field(default_factory=list)

    def status(self, k: int) -> StatementStatus:
        return self.statuses[k - 1]


# ---------------------------------------------------------------------------
# witness revalidation (scalar code, independent of the search kernels)

def _linear(A: Mat2, x, y, z, w):
    R = A.ring
    return R.dot(A.entries(), (x, y, z, w))


def _congruent(A: Mat2, C: Mat2, delta) -> bool:
    R = A.ring
    return all(divides(R, delta, R.sub(u, v)) is not None
               for u, v in zip(C.entries(), A.entries()))


def revalidate(A: Mat2, k: int, wit: dict) -> bool:
    """Re-substitute a witness into the defining condition of statement k."""
    R = A.ring
    one, zero = R.one(), R.zero()
    dl = det2(A)
    if k == 1:
        M, N = wit["M"], wit["N"]
        return (R.eq(det2(M), one) and R.eq(det2(N), one)
                and mul2(mul2(M, A), N) == diag2(R, one, dl))
    if k == 2:
        return wit["extension"].valid() and wit["extension"].simple
    if k == 3:
        e, f, s, t = wit["e"], wit["f"], wit["s"], wit["t"]
        p = R.add(R.mul(A.a, e), R.mul(A.c, f))
        q = R.add(R.mul(A.b, e), R.mul(A.d, f))
        return R.eq(R.add(R.mul(p, s), R.mul(q, t)), one) and R.is_unimodular([p, q])
    if k == 4:
        X = wit["X"]
        return R.eq(_linear(A, *X.entries()), one) and is_non_full(X, wit["col"], wit["row"])
    if k == 5:
        X = wit["X"]
        return R.eq(_linear(A, *X.entries()), one) and R.is_zero(det2(X))
    if k == 6:
        B, C = wit["B"], wit["C"]
        expect = Mat2(R, *(R.add(R.mul(dl, u), v) for u, v in zip(B.entries(), A.entries())))
        return (C == expect and is_unimodular_mat(B) and is_unimodular_mat(C)
                and R.is_zero(det2(B)) and R.is_zero(det2(C)))
    if k == 7:
        C = wit["C"]
        return is_unimodular_mat(C) and R.is_zero(det2(C)) and _congruent(A, C, dl)
    if k == 8:
        B = wit["B"]
        C = Mat2(R, *(R.add(R.mul(dl, u), v) for u, v in zip(B.entries(), A.entries())))
        return R.is_zero(det2(B)) and R.is_zero(det2(C))
    if k == 9:
        X = wit["X"]
        val = R.sub(_linear(A, *X.entries()), R.mul(dl, det2(X)))
        return R.eq(val, one)
    if k == 10:
        C = wit["C"]
        return R.is_zero(det2(C)) and _congruent(A, C, dl)
    raise RingError(f"no statement {k}")


# ---------------------------------------------------------------------------
# finite rings: batched exhaustive scans

def _cols(mats: np.ndarray, rows: np.ndarray):
    m = mats[rows]
    return tuple(m[:, i][:, None] for i in range(4))


def _statement_scan(fr: FiniteRing, mats: np.ndarray, k: int):
    """Candidates and first-hit indices for statement k on every matrix."""
    mul, add, sub = fr.mul, fr.add, fr.sub
    one = fr.one
    dets = fr.det(mats[:, 0], mats[:, 1], mats[:, 2], mats[:, 3])
    um2 = fr.unimodular_mask(2)
    n = len(mats)

    def lin(a, b, c, d, x, y, z, w):
        return add[add[mul[a, x], mul[b, y]], add[mul[c, z], mul[d, w]]]

    if k in (1, 4):  # column (s, t): A (s, t)^T unimodular
        cands = fr.pairs()

        def pred(rows, blk):
            a, b, c, d = _cols(mats, rows)
            s, t = blk[:, 0][None, :], blk[:, 1][None, :]
            return um2[add[mul[a, s], mul[b, t]], add[mul[c, s], mul[d, t]]]
    elif k in (2, 3):  # row (e, f): (e, f) A unimodular
        cands = fr.pairs()

        def pred(rows, blk):
            a, b, c, d = _cols(mats, rows)
            e, f = blk[:, 0][None, :], blk[:, 1][None, :]
            return um2[add[mul[a, e], mul[c, f]], add[mul[b, e], mul[d, f]]]
    elif k == 5:
        cands = fr.det_zero_quads()

        def pred(rows, blk):
            x, y, z, w = (blk[:, i][None, :] for i in range(4))
            return lin(*_cols(mats, rows), x, y, z, w) == one
    elif k in (6, 7, 8, 10):
        um4 = fr.unimodular_mask(4)
        cands = {6: fr.unimodular_det_zero_quads(), 8: fr.det_zero_quads()}.get(k, fr.all_quads())

        def pred(rows, blk):
            dl = dets[rows][:, None]
            c_ = [add[mul[dl, blk[:, i][None, :]], mats[rows][:, i][:, None]] for i in range(4)]
            ok = fr.det(*c_) == fr.zero
            if k in (6, 7):
                ok &= um4[c_[0], c_[1], c_[2], c_[3]]
            return ok
    elif k == 9:
        cands = fr.triples()
        div = fr.division_table()

        def pred(rows, blk):
            a, b, c, d = _cols(mats, rows)
            dl = dets[rows][:, None]
            x, y, z = (blk[:, i][None, :] for i in range(3))
            coef = sub[d, mul[dl, x]]
            rhs = sub[sub[sub[sub[one, mul[a, x]], mul[b, y]], mul[c, z]], mul[dl, mul[y, z]]]
            return div[coef, rhs] >= 0
    else:
        raise RingError(f"no statement {k}")
    return cands, first_hits(n, cands, pred)


def _mat(fr: FiniteRing, idx) -> Mat2:
    return Mat2(fr.ring, *(fr.value(i) for i in idx))


def _finite_witness(fr: FiniteRing, m: np.ndarray, k: int, cand: np.ndarray) -> dict:
    """Turn a candidate (indices) into a witness in ring values."""
    R = fr.ring
    A = _mat(fr, m)
    a, b, c, d = A.entries()
    dl = det2(A)
    val = [fr.value(i) for i in cand]
    if k in (1, 4):
        s, t = val
        col = apply2(A, (s, t))
        e, f = R.unimodular_certificate(list(col))  # (e, f) A (s, t)^T = 1
        if k == 4:
            X = Mat2(R, R.mul(e, s), R.mul(e, t), R.mul(f, s), R.mul(f, t))
            return {"X": X, "col": (e, f), "row": (s, t)}
        return _equivalence_witness(A, e, f, s, t)
    if k in (2, 3):
        e, f = val
        p, q = R.add(R.mul(a, e), R.mul(c, f)), R.add(R.mul(b, e), R.mul(d, f))
        s, t = R.unimodular_certificate([p, q])
        if k == 2:
            return {"extension": simple_witness(A, e, f, s, t, "exhaustive")}
        return {"e": e, "f": f, "s": s, "t": t}
    if k in (5,):
        return {"X": Mat2(R, *val)}
    if k == 9:
        x, y, z = val
        coef = R.sub(d, R.mul(dl, x))
        rhs = R.sub(R.sub(R.sub(R.sub(R.one(), R.mul(a, x)), R.mul(b, y)), R.mul(c, z)),
                    R.mul(dl, R.mul(y, z)))
        w = fr.value(fr.division_table()[fr.to_index(coef), fr.to_index(rhs)])
        return {"X": Mat2(R, x, y, z, w)}
    B = Mat2(R, *val)
    C = Mat2(R, *(R.add(R.mul(dl, u), v) for u, v in zip(B.entries(), A.entries())))
    if k == 6:
        return {"B": B, "C": C}
    if k == 8:
        return {"B": B}
    return {"C": C, "X": B}


def _equivalence_witness(A: Mat2, e, f, s, t) -> dict:
    """M, N of determinant one with M A N = diag(1, det A), built from a
    row (e, f) and column (s, t) with (e, f) A (s, t)^T = 1."""
    R = A.ring
    p, r = R.unimodular_certificate([e, f])
    M = Mat2(R, e, f, R.neg(r), p)
    u, v = R.unimodular_certificate([s, t])
    N = Mat2(R, s, R.neg(v), t, u)
    T = mul2(mul2(M, A), N)
    M = mul2(Mat2(R, R.one(), R.zero(), R.neg(T.c), R.one()), M)
    N = mul2(N, Mat2(R, R.one(), R.neg(T.b), R.zero(), R.one()))
    return {"M": M, "N": N}


def _to_indices(fr: FiniteRing, A: Mat2) -> np.ndarray:
    return np.array([[fr.to_index(v) for v in A.entries()]], dtype=np.intp)


def _check_finite(A: Mat2, k: int) -> StatementStatus:
    fr = finite_ring(A.ring)
    m = _to_indices(fr, A)
    cands, hits = _statement_scan(fr, m, k)
    if hits[0] < 0:
        return StatementStatus(k, "fails", {"exhausted": len(cands)},
                               note=f"all {len(cands)} candidates rejected", route="exhaustive")
    wit = _finite_witness(fr, m[0], k, cands[hits[0]])
    return StatementStatus(k, "holds", wit, route="exhaustive")


def finite_simple_extension(A: Mat2) -> ExtWitness | None:
    st = _check_finite(A, 2)
    return st.witness["extension"] if st.holds else None


def finite_statement_table(ring: Ring, mats: np.ndarray | None = None) -> tuple[np.ndarray, dict]:
    """Decide all ten statements for many matrices (index quadruples).

    Returns ``(holds, scans)`` where ``holds[i, k-1]`` tells whether
    statement k holds for matrix i and ``scans[k] = (cands, hits)``.
    """
    fr = finite_ring(ring)
    if mats is None:
        mats = fr.unimodular_quads()
    holds = np.zeros((len(mats), 10), dtype=bool)
    scans = {}
    for k in STATEMENTS:
        cands, hits = _statement_scan(fr, mats, k)
        holds[:, k - 1] = hits >= 0
        scans[k] = (cands, hits)
    return holds, scans


# ---------------------------------------------------------------------------
# integers

def _int_box_linear(A: Mat2, budget: int, twisted: bool):
    """First (x, y, z, w) in scan order with ``ax+by+cz+dw = 1`` and
    ``xw = yz`` (plain) or ``ax+by+cz+dw - delta(xw - yz) = 1`` (twisted)."""
    a, b, c, d = A.entries()
    dl = a * d - b * c
    g = box_grid(budget, 3).astype(object) if budget > 10 ** 5 else box_grid(budget, 3)
    x, y, z = g[:, 0], g[:, 1], g[:, 2]
    if twisted:
        coef = d - dl * x
        rhs = 1 - a * x - b * y - c * z - dl * y * z
    else:
        coef = np.full_like(x, d)
        rhs = 1 - a * x - b * y - c * z
    safe = np.where(coef == 0, 1, coef)
    divisible = np.where(coef == 0, rhs == 0, rhs % safe == 0)
    w = np.where(coef == 0, 0, rhs // safe)
    if not twisted:
        # xw = yz must hold as well; with coef == 0, w is only pinned by xw = yz
        free = coef == 0
        xs = np.where(x == 0, 1, x)
        w_free = np.where((x != 0) & ((y * z) % xs == 0), (y * z) // xs, 0)
        w = np.where(free, w_free, w)
        divisible &= (x * w == y * z)
    ok = divisible & (np.abs(w) <= budget)
    if not ok.any():
        return None
    rows = np.stack([x[ok], y[ok], z[ok], w[ok]], axis=1)
    return tuple(int(v) for v in rows[first_in_scan_order(rows)])


def _residue_nonfull(A: Mat2, dl: int):
    """A column and a row over Z whose product C is unimodular, has
    determinant 0 and agrees with A modulo delta.

    Modulo each prime power q dividing delta some entry of A is a unit,
    which pins down a factorisation of A mod q; the factors are glued by
    the Chinese remainder theorem and lifted to coprime integer pairs.
    """
    n = abs(dl)
    a, b, c, d = A.entries()
    pieces = []
    for p, e in factorize(n).items():
        q = p ** e
        au, bu, cu, du = (v % q for v in (a, b, c, d))
        if au % p:
            col, row = (1, cu * inverse_mod(au, q)), (au, bu)
        elif bu % p:
            col, row = (1, du * inverse_mod(bu, q)), (au, bu)
        elif cu % p:
            col, row = (au * inverse_mod(cu, q), 1), (cu, du)
        else:
            col, row = (bu * inverse_mod(du, q), 1), (cu, du)
        pieces.append((q, col, row))
    mods = [q for q, _, _ in pieces]
    glue = lambda sel: tuple(crt([sel(pc)[i] % pc[0] for pc in pieces], mods) for i in range(2))
    col = _coprime_lift(glue(lambda pc: pc[1]), n)
    row = _coprime_lift(glue(lambda pc: pc[2]), n)
    return col, row


def _coprime_lift(v: tuple[int, int], n: int) -> tuple[int, int]:
    """Integers congruent to v modulo n with gcd 1 (v unimodular mod n)."""
    x, y = v
    if y == 0:
        y = n
    k = 0
    while xgcd(x + k * n, y)[0] != 1:
        k += 1
    return x + k * n, y


def _check_integers(A: Mat2, k: int, budget: int, residue_budget: int,
                    cache: dict) -> StatementStatus:
    R = A.ring
    a, b, c, d = A.entries()
    dl = det2(A)

    def get(j):
        if j not in cache:
            cache[j] = _check_integers(A, j, budget, residue_budget, cache)
        return cache[j]

    if k == 1:
        sm = smith2(A)
        return StatementStatus(1, "holds", {"M": sm.M, "N": sm.N}, route="smith")
    if k == 2:
        return StatementStatus(2, "holds", {"extension": simple_extension_snf(A)}, route="smith")
    if k == 3:
        for e, f in box_order(min(budget, 3), 2):
            g, s, t = xgcd(a * e + c * f, b * e + d * f)
            if g == 1:
                return StatementStatus(3, "holds", {"e": e, "f": f, "s": s, "t": t}, route="box")
        w = get(2).witness["extension"]
        return StatementStatus(3, "holds", {"e": w.e, "f": w.f, "s": w.s, "t": w.t},
                               route="from 2")
    if k == 4:
        for n_, q in box_order(budget, 2):
            g, l, m = xgcd(a * n_ + b * q, c * n_ + d * q)
            if g == 1:
                X = Mat2(R, l * n_, l * q, m * n_, m * q)
                return StatementStatus(4, "holds", {"X": X, "col": (l, m), "row": (n_, q)},
                                       route="box")
        w = get(2).witness["extension"]
        X = Mat2(R, w.e * w.s, w.e * w.t, w.f * w.s, w.f * w.t)
        return StatementStatus(4, "holds", {"X": X, "col": (w.e, w.f), "row": (w.s, w.t)},
                               route="from 2")
    if k in (5, 9):
        found = _int_box_linear(A, budget, twisted=(k == 9))
        if found is not None:
            return StatementStatus(k, "holds", {"X": Mat2(R, *found)}, route="box")
        X = get(4).witness["X"] if k == 5 else get(5).witness["X"]
        return StatementStatus(k, "holds", {"X": X}, route=f"from {4 if k == 5 else 5}")
    if k in (6, 8):
        x, y, z, w = get(5).witness["X"].entries()
        B = Mat2(R, -w, z, y, -x)
        C = Mat2(R, *(dl * u + v for u, v in zip(B.entries(), A.entries())))
        wit = {"B": B, "C": C} if k == 6 else {"B": B}
        return StatementStatus(k, "holds", wit, route="from 5")
    if k == 7:
        if dl == 0:
            return StatementStatus(7, "holds", {"C": A}, route="degenerate")
        if abs(dl) == 1:
            return StatementStatus(7, "holds", {"C": Mat2(R, 1, 0, 0, 0)}, route="degenerate")
        if abs(dl) <= residue_budget:
            (l, m), (n_, q) = _residue_nonfull(A, dl)
            C = Mat2(R, l * n_, l * q, m * n_, m * q)
            return StatementStatus(7, "holds", {"C": C}, route="residue")
        return StatementStatus(7, "holds", {"C": get(6).witness["C"]}, route="from 6")
    if k == 10:
        x, y, z, w = get(9).witness["X"].entries()
        C = Mat2(R, a - dl * w, b + dl * z, c + dl * y, d - dl * x)
        return StatementStatus(10, "holds", {"C": C}, route="from 9")
    raise RingError(f"no statement {k}")


# ---------------------------------------------------------------------------
# imaginary quadratic rings: statements 2 and 3 only

def _check_quadratic(A: Mat2, k: int, budget: int) -> StatementStatus:
    R = A.ring
    if k not in (2, 3) or R.D > 0:
        return StatementStatus(k, "unknown", note=f"not decided over {R}")
    wit = quadratic_border_search(A, budget)
    if wit is not None:
        data = ({"extension": wit} if k == 2 else
                {"e": wit.e, "f": wit.f, "s": wit.s, "t": wit.t})
        return StatementStatus(k, "holds", data, route="box")
    if R.is_zero(det2(A)) and quadratic_nonfull_decompose(A) is None:
        return StatementStatus(k, "fails", {"full": True}, route="fullness",
                               note="determinant zero and not a column times a row")
    return StatementStatus(k, "unknown", {"budget": budget}, note="box exhausted")


# ---------------------------------------------------------------------------
# public entry points

def check_statement(A: Mat2, k: int, budget: int = DEFAULT_BUDGET,
                    residue_budget: int = RESIDUE_BUDGET) -> StatementStatus:
    if k not in STATEMENTS:
        raise RingError(f"statement index must be 1..10, got {k}")
    if not is_unimodular_mat(A):
        raise RingError(f"{A} is not unimodular")
    R = A.ring
    if R.finite:
        return _check_finite(A, k)
    if isinstance(R, Integers):
        return _check_integers(A, k, budget, residue_budget, {})
    if isinstance(R, Quadratic):
        return _check_quadratic(A, k, budget)
    raise Unsupported(f"statements are not decided over {R}")


def check_all(A: Mat2, budget: int = DEFAULT_BUDGET,
              residue_budget: int = RESIDUE_BUDGET) -> StatementReport:
    if not is_unimodular_mat(A):
        raise RingError(f"{A} is not unimodular")
    rep = StatementReport(A, det2(A))
    R = A.ring
    if isinstance(R, Integers):
        cache: dict = {}
        for k in STATEMENTS:
            if k not in cache:
                cache[k] = _check_integers(A, k, budget, residue_budget, cache)
        rep.statuses = [cache[k] for k in STATEMENTS]
    elif isinstance(R, Quadratic):
        two = _check_quadratic(A, 2, budget)
        three = _check_quadratic(A, 3, 0) if two.status == "fails" else None
        if three is None:
            three = StatementStatus(3, two.status, two.witness and (
                {"e": two.witness["extension"].e, "f": two.witness["extension"].f,
                 "s": two.witness["extension"].s, "t": two.witness["extension"].t}
                if two.holds else two.witness), two.note, two.route)
        rep.statuses = [two if k == 2 else three if k == 3 else _check_quadratic(A, k, budget)
                        for k in STATEMENTS]
    else:
        rep.statuses = [check_statement(A, k, budget, residue_budget) for k in STATEMENTS]
    _propagate_failures(rep)
    return rep


def _propagate_failures(rep: StatementReport) -> None:
    """Statements in one equivalence block share their truth value, so a
    refuted member refutes the undecided ones."""
    for block in EQUIVALENT_BLOCKS:
        failed = [k for k in block if rep.status(k).status == "fails"]
        if not failed:
            continue
        for k in block:
            if rep.status(k).status == "unknown":
                rep.statuses[k - 1] = StatementStatus(k, "fails", None, route="equivalence",
                                                      note=f"equivalent to statement {failed[0]}")


def th2_2_witness(A: Mat2, budget: int = DEFAULT_BUDGET) -> tuple[Mat2, Mat2] | None:
    """A unimodular C with ``A + det(A) C`` unimodular and
    ``det C = det(A + det(A) C) = 0``; returns ``(C, A + det(A) C)``."""
    st = check_statement(A, 6, budget)
    if not st.holds:
        return None
    return st.witness["B"], st.witness["C"]


@dataclass
class ChainReport:
    ring: Ring
    matrices: int
    exhaustive: bool
    reduced: bool
    holds_counts: dict[int, int]
    violations: list[tuple[Mat2, int, int]]
    revalidated: int
    revalidation_failures: list[tuple[Mat2, int]]

    @property
    def ok(self) -> bool:
        return not self.violations and not self.revalidation_failures


def verify_th8_chain(ring: Ring, sample: int | None = None, seed: int = 0,
                     revalidate_count: int | None = 200) -> ChainReport:
    """Decide all ten statements on Um(M_2(R)) (or a random sample of it)
    and check every implication of the chain.

    Witnesses of ``revalidate_count`` matrices (all if None) are replayed
    through :func:`revalidate`.
    """
    if not ring.finite:
        raise Unsupported("the chain is verified over finite rings")
    fr = finite_ring(ring)
    mats = fr.unimodular_quads()
    exhaustive = sample is None or sample >= len(mats)
    if not exhaustive:
        rng = np.random.default_rng(seed)
        mats = mats[np.sort(rng.choice(len(mats), size=sample, replace=False))]
    holds, scans = finite_statement_table(ring, mats)
    reduced = ring.is_reduced()
    violations = []
    for i, j in implication_edges(reduced):
        bad = np.nonzero(holds[:, i - 1] & ~holds[:, j - 1])[0]
        violations += [(_mat(fr, mats[r]), i, j) for r in bad]
    if revalidate_count is None or revalidate_count >= len(mats):
        picks = np.arange(len(mats))
    else:
        picks = np.random.default_rng(seed + 1).choice(len(mats), size=revalidate_count,
                                                       replace=False)
    failures = []
    count = 0
    for r in picks:
        A = _mat(fr, mats[r])
        for k in STATEMENTS:
            cands, hits = scans[k]
            if hits[r] < 0:
                continue
            wit = _finite_witness(fr, mats[r], k, cands[hits[r]])
            count += 1
            if not revalidate(A, k, wit):
                failures.append((A, k))
    return ChainReport(ring, len(mats), exhaustive, reduced,
                       {k: int(holds[:, k - 1].sum()) for k in STATEMENTS},
                       violations, count, failures)
