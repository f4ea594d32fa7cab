from __future__ import annotations

import itertools
from math import gcd

import numpy as np
import pytest

from sl3ext.finite import FiniteRing, finite_ring, first_hits
from sl3ext.rings import Integers, ModN, Product, Unsupported

FINITE = [ModN(6), ModN(8), ModN(9), Product(ModN(2), ModN(4)), Product(ModN(3), ModN(3))]


def scalar_ideal(R, gens):
    out = {R.zero()}
    for g in gens:
        out = {R.add(m, R.mul(g, r)) for m in out for r in R.elements()}
    return out


@pytest.mark.parametrize("R", FINITE, ids=str)
def test_tables_match_scalar_arithmetic(R):
    fr = FiniteRing(R)
    for i, a in enumerate(fr.elems):
        for j, b in enumerate(fr.elems):
            assert fr.value(fr.add[i, j]) == R.add(a, b)
            assert fr.value(fr.mul[i, j]) == R.mul(a, b)
            assert fr.value(fr.sub[i, j]) == R.sub(a, b)
    assert [fr.value(u) for u in np.nonzero(fr.units)[0]] == [a for a in fr.elems if R.is_unit(a)]


@pytest.mark.parametrize("R", FINITE, ids=str)
def test_unimodular_mask_matches_ideal_generation(R):
    fr = finite_ring(R)
    mask = fr.unimodular_mask(2)
    for i, j in itertools.product(range(fr.N), repeat=2):
        expected = R.one() in scalar_ideal(R, [fr.value(i), fr.value(j)])
        assert mask[i, j] == expected
        if expected:
            c = fr.bezout([i, j])
            assert fr.add[fr.mul[c[0], i], fr.mul[c[1], j]] == fr.one


def test_bezout_table_three():
    fr = finite_ring(ModN(12))
    table = fr.bezout_table(3)
    for tup in [(4, 6, 3), (2, 3, 0), (8, 9, 0)]:
        c = table[tup]
        assert sum(int(x) * int(y) for x, y in zip(c, tup)) % 12 == 1
    assert (table[2, 4, 6] == -1).all()


def test_division_table():
    fr = finite_ring(ModN(12))
    div = fr.division_table()
    for k in range(12):
        for r in range(12):
            w = div[k, r]
            solvable = any(k * x % 12 == r for x in range(12))
            assert (w >= 0) == solvable
            if w >= 0:
                assert k * w % 12 == r


def test_quotient_units():
    R = ModN(12)
    fr = finite_ring(R)
    Q = fr.quotient([fr.to_index(4)])  # Z/12 / (4) = Z/4
    assert len(Q.reps) == 4
    assert sorted(fr.value(u) % 4 for u in Q.unit_reps()) == [1, 3]
    assert Q.inverse(fr.to_index(3)) == fr.to_index(3)


def test_jacobson_and_nilradical():
    fr = finite_ring(ModN(12))
    assert sorted(fr.value(i) for i in np.nonzero(fr.jacobson_mask())[0]) == [0, 6]
    assert not fr.nilradical_trivial()
    assert finite_ring(ModN(30)).nilradical_trivial()


def test_quad_families_counts():
    n = 6
    fr = finite_ring(ModN(n))
    um = fr.unimodular_quads()
    brute = [q for q in itertools.product(range(n), repeat=4)
             if gcd(gcd(gcd(q[0], q[1]), gcd(q[2], q[3])), n) == 1]
    assert len(um) == len(brute)
    assert len(fr.det_zero_quads()) == sum((a * d - b * c) % n == 0
                                          for a, b, c, d in itertools.product(range(n), repeat=4))
    assert len(fr.gl2_quads()) == 288  # |GL_2(Z/6)| = 6 * 48


def test_first_hits_matches_naive_scan():
    rng = np.random.default_rng(1)
    table = rng.random((40, 500)) < 0.01
    cands = np.arange(500)
    hits = first_hits(40, cands, lambda rows, blk: table[np.ix_(rows, blk)], chunk=7)
    for i in range(40):
        nz = np.nonzero(table[i])[0]
        assert hits[i] == (nz[0] if nz.size else -1)


def test_infinite_ring_rejected():
    with pytest.raises(Unsupported):
        FiniteRing(Integers())
