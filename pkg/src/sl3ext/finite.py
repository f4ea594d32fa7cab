"""Table-driven arithmetic for finite rings.

Every finite ring here is Z/n or a product of such rings. Elements are
numbered by their position in canonical order, and addition and
multiplication become lookups into small numpy tables. The exhaustive
searches of the statement and class modules run on these indices, many
matrices at a time.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from math import gcd
from typing import Callable, Iterable

import numpy as np

from .intlin import xgcd_list
from .rings import ModN, Product, Ring, Unsupported


def _moduli(ring: Ring) -> list[int]:
    if isinstance(ring, ModN):
        return [ring.n]
    if isinstance(ring, Product):
        return _moduli(ring.left) + _moduli(ring.right)
    raise Unsupported(f"{ring} is not a finite ring")


def _flatten(ring: Ring, value) -> list[int]:
    if isinstance(ring, ModN):
        return [value]
    return _flatten(ring.left, value[0]) + _flatten(ring.right, value[1])


class FiniteRing:
    """Lookup tables for a finite ring.

    Attributes
    ----------
    elems : list
        Ring values in canonical order; index ``i`` stands for ``elems[i]``.
    add, mul : ndarray
        ``N x N`` tables of indices.
    """

    def __init__(self, ring: Ring):
        if not ring.finite:
            raise Unsupported(f"{ring} is infinite")
        self.ring = ring
        self.elems = ring.elements()
        self.N = N = len(self.elems)
        self.index = {v: i for i, v in enumerate(self.elems)}
        self.moduli = _moduli(ring)
        self.residues = np.array([_flatten(ring, v) for v in self.elems], dtype=np.int64)
        self.zero = self.index[ring.zero()]
        self.one = self.index[ring.one()]
        self.add = np.array([[self.index[ring.add(a, b)] for b in self.elems] for a in self.elems],
                            dtype=np.intp)
        self.mul = np.array([[self.index[ring.mul(a, b)] for b in self.elems] for a in self.elems],
                            dtype=np.intp)
        self.neg = np.array([self.index[ring.neg(a)] for a in self.elems], dtype=np.intp)
        self.sub = self.add[:, self.neg]
        self.units = np.array([ring.is_unit(a) for a in self.elems])
        self._cache: dict = {}

    # -- index helpers -------------------------------------------------
    def to_index(self, value) -> int:
        return self.index[value]

    def value(self, i: int):
        return self.elems[int(i)]

    def det(self, a, b, c, d):
        return self.sub[self.mul[a, d], self.mul[b, c]]

    def from_residues(self, res: Iterable[int]) -> int:
        res = [r % m for r, m in zip(res, self.moduli)]
        return self._residue_index()[tuple(res)]

    def _residue_index(self) -> dict:
        if "resindex" not in self._cache:
            self._cache["resindex"] = {tuple(int(v) for v in r): i
                                       for i, r in enumerate(self.residues)}
        return self._cache["resindex"]

    # -- unimodularity ---------------------------------------------------
    def unimodular_mask(self, k: int) -> np.ndarray:
        """Boolean array of shape ``(N,)*k``: do the k entries generate R?"""
        key = ("um", k)
        if key not in self._cache:
            ok = np.ones((self.N,) * k, dtype=bool)
            for ci, m in enumerate(self.moduli):
                g = np.full((self.N,) * k, m, dtype=np.int64)
                for axis in range(k):
                    shape = [1] * k
                    shape[axis] = self.N
                    g = np.gcd(g, self.residues[:, ci].reshape(shape))
                ok &= g == 1
            self._cache[key] = ok
        return self._cache[key]

    def bezout(self, xs) -> list[int] | None:
        """Indices ``c`` with ``sum(c_i x_i) == 1`` (componentwise extended gcd)."""
        coeffs_by_comp = []
        for ci, m in enumerate(self.moduli):
            vals = [int(self.residues[x, ci]) for x in xs]
            g, co = xgcd_list(vals + [m])
            if g != 1:
                return None
            coeffs_by_comp.append([c % m for c in co[:-1]])
        return [self.from_residues([cc[i] for cc in coeffs_by_comp]) for i in range(len(xs))]

    def bezout_table(self, k: int) -> np.ndarray:
        """For every unimodular k-tuple, Bezout coefficients as indices
        (``-1`` where the tuple is not unimodular)."""
        key = ("bez", k)
        if key not in self._cache:
            table = np.full((self.N,) * k + (k,), -1, dtype=np.intp)
            mask = self.unimodular_mask(k)
            for tup in zip(*np.nonzero(mask)):
                table[tup] = self.bezout([int(t) for t in tup])
            self._cache[key] = table
        return self._cache[key]

    def division_table(self) -> np.ndarray:
        """``div[k, r]`` is some w with ``k*w == r``, or -1 if none exists."""
        if "div" not in self._cache:
            div = np.full((self.N, self.N), -1, dtype=np.intp)
            for k in range(self.N):
                for w in range(self.N - 1, -1, -1):
                    div[k, self.mul[k, w]] = w
            self._cache["div"] = div
        return self._cache["div"]

    # -- ideals and quotients ---------------------------------------------
    def ideal_mask(self, gens: Iterable[int]) -> np.ndarray:
        """Membership mask of the ideal generated by ``gens``."""
        mask = np.zeros(self.N, dtype=bool)
        mask[self.zero] = True
        for g in gens:
            principal = np.zeros(self.N, dtype=bool)
            principal[self.mul[g]] = True
            members = np.nonzero(mask)[0]
            sums = self.add[np.ix_(members, np.nonzero(principal)[0])]
            mask = np.zeros(self.N, dtype=bool)
            mask[sums.ravel()] = True
        return mask

    def quotient(self, gens: Iterable[int]) -> "Quotient":
        mask = self.ideal_mask(gens)
        key = ("quot", mask.tobytes())
        if key not in self._cache:
            self._cache[key] = Quotient(self, mask)
        return self._cache[key]

    def jacobson_mask(self) -> np.ndarray:
        """x lies in the Jacobson radical iff 1 - x*r is a unit for every r."""
        if "jac" not in self._cache:
            vals = self.sub[self.one][self.mul]  # vals[x, r] = 1 - x*r
            self._cache["jac"] = self.units[vals].all(axis=1)
        return self._cache["jac"]

    def nilradical_trivial(self) -> bool:
        for x in range(self.N):
            if x == self.zero:
                continue
            p = x
            for _ in range(self.N):
                p = self.mul[p, x]
                if p == self.zero:
                    return False
        return True

    # -- matrix lists ----------------------------------------------------
    def all_quads(self) -> np.ndarray:
        if "quads" not in self._cache:
            r = np.arange(self.N)
            q = np.stack(np.meshgrid(r, r, r, r, indexing="ij"), axis=-1).reshape(-1, 4)
            self._cache["quads"] = q
        return self._cache["quads"]

    def quads_where(self, name: str, pred: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
        key = ("quads", name)
        if key not in self._cache:
            q = self.all_quads()
            self._cache[key] = q[pred(q)]
        return self._cache[key]

    def det_zero_quads(self) -> np.ndarray:
        return self.quads_where("det0", lambda q: self.det(q[:, 0], q[:, 1], q[:, 2], q[:, 3])
                                == self.zero)

    def unimodular_quads(self) -> np.ndarray:
        um4 = self.unimodular_mask(4)
        return self.quads_where("um", lambda q: um4[q[:, 0], q[:, 1], q[:, 2], q[:, 3]])

    def unimodular_det_zero_quads(self) -> np.ndarray:
        um4 = self.unimodular_mask(4)
        d0 = self.det_zero_quads()
        key = ("quads", "um_det0")
        if key not in self._cache:
            self._cache[key] = d0[um4[d0[:, 0], d0[:, 1], d0[:, 2], d0[:, 3]]]
        return self._cache[key]

    def gl2_quads(self) -> np.ndarray:
        return self.quads_where("gl", lambda q: self.units[self.det(q[:, 0], q[:, 1], q[:, 2],
                                                                    q[:, 3])])

    def pairs(self) -> np.ndarray:
        r = np.arange(self.N)
        return np.stack(np.meshgrid(r, r, indexing="ij"), axis=-1).reshape(-1, 2)

    def triples(self) -> np.ndarray:
        r = np.arange(self.N)
        return np.stack(np.meshgrid(r, r, r, indexing="ij"), axis=-1).reshape(-1, 3)


class Quotient:
    """R / I for an ideal given by its membership mask.

    Cosets are represented by their smallest element index.
    """

    def __init__(self, fr: FiniteRing, mask: np.ndarray):
        self.fr = fr
        self.mask = mask
        members = np.nonzero(mask)[0]
        self.canon = fr.add[:, members].min(axis=1)
        reps = np.unique(self.canon)
        self.reps = reps
        # x is a unit mod I iff x*y - 1 lies in I for some y
        prod_minus_one = fr.sub[fr.mul, fr.one]
        hit = mask[prod_minus_one]
        self.unit_mask = hit.any(axis=1)
        self._inv = np.where(self.unit_mask, hit.argmax(axis=1), -1)

    def unit_reps(self) -> np.ndarray:
        return np.unique(self.canon[self.unit_mask])

    def image(self, xs: np.ndarray) -> np.ndarray:
        return np.unique(self.canon[xs])

    def inverse(self, x: int) -> int:
        y = self._inv[x]
        if y < 0:
            raise ValueError("not a unit modulo the ideal")
        return int(self.canon[y])


@lru_cache(maxsize=64)
def finite_ring(ring: Ring) -> FiniteRing:
    return FiniteRing(ring)


def first_hits(n_rows: int, candidates: np.ndarray,
               predicate: Callable[[np.ndarray, np.ndarray], np.ndarray],
               chunk: int = 64, max_chunk: int = 4096, cells: int = 4_000_000) -> np.ndarray:
    """For each row find the first candidate (in order) accepted by ``predicate``.

    ``predicate(rows, cands)`` receives row indices and a block of
    candidates and returns a ``len(rows) x len(cands)`` boolean matrix.
    Rows stop being searched once they have a hit; the block size grows
    as the remaining rows get harder. Returns -1 for rows with no hit.
    """
    hits = np.full(n_rows, -1, dtype=np.int64)
    active = np.arange(n_rows)
    start = 0
    total = len(candidates)
    while active.size and start < total:
        size = max(1, min(chunk, cells // active.size))
        block = candidates[start:start + size]
        ok = predicate(active, block)
        found = ok.any(axis=1)
        hits[active[found]] = start + ok[found].argmax(axis=1)
        active = active[~found]
        start += len(block)
        chunk = min(chunk * 4, max_chunk)
    return hits
