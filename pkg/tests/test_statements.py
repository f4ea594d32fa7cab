from __future__ import annotations

import itertools
from math import gcd

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from sl3ext.finite import finite_ring
from sl3ext.matrix import Mat2, det2
from sl3ext.rings import Integers, ModN, Product, Quadratic, RingError, Unsupported, PolyZ3
from sl3ext.poly import X, Y
from sl3ext.statements import (EQUIVALENT_BLOCKS, check_all, check_statement,
                               finite_statement_table, implication_edges, revalidate,
                               th2_2_witness, verify_th8_chain)

ZZ = Integers()


def scalar_oracle(R, A: Mat2, k: int) -> bool:
    """Literal existence check for statements 2, 5, 8, 9, 10."""
    a, b, c, d = A.entries()
    dl = det2(A)
    one = R.one()
    E = R.elements()
    quads = list(itertools.product(E, repeat=4))
    lin = lambda x, y, z, w: R.dot((a, b, c, d), (x, y, z, w))
    det = lambda x, y, z, w: R.sub(R.mul(x, w), R.mul(y, z))
    if k == 2:
        return any(R.eq(R.dot((a, b, c, d), (R.mul(e, s), R.mul(e, t), R.mul(f, s), R.mul(f, t))), one)
                   for e, f, s, t in quads)
    if k == 5:
        return any(R.is_zero(det(*q)) and R.eq(lin(*q), one) for q in quads)
    if k == 8:
        return any(R.is_zero(det(*q)) and
                   R.is_zero(det(*(R.add(v, R.mul(dl, u)) for u, v in zip(q, (a, b, c, d)))))
                   for q in quads)
    if k == 9:
        return any(R.eq(R.sub(lin(*q), R.mul(dl, det(*q))), one) for q in quads)
    if k == 10:
        return any(R.is_zero(det(*(R.add(v, R.mul(dl, u)) for u, v in zip(q, (a, b, c, d)))))
                   for q in quads)
    raise ValueError(k)


@pytest.mark.parametrize("R", [ModN(4), Product(ModN(2), ModN(2))], ids=str)
def test_scans_agree_with_scalar_oracle_on_all_matrices(R):
    fr = finite_ring(R)
    mats = fr.all_quads()
    holds, _ = finite_statement_table(R, mats)
    for i, q in enumerate(mats):
        A = Mat2(R, *(fr.value(v) for v in q))
        for k in (2, 5, 8, 9, 10):
            assert holds[i, k - 1] == scalar_oracle(R, A, k), (A, k)
    # non-unimodular matrices make statement 5 fail: the scans do refute
    assert not holds[:, 4].all()


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 8, 9, 12])
def test_chain_over_residue_rings(n):
    rep = verify_th8_chain(ModN(n))
    assert rep.ok and rep.exhaustive
    assert set(rep.holds_counts.values()) == {rep.matrices}
    assert rep.revalidated > 0


def test_chain_matrix_counts():
    # |Um(M_2(Z/n))| from the scalar definition
    for n in (4, 6, 10):
        brute = sum(gcd(gcd(gcd(a, b), gcd(c, d)), n) == 1
                    for a, b, c, d in itertools.product(range(n), repeat=4))
        assert verify_th8_chain(ModN(n), revalidate_count=0).matrices == brute
    assert verify_th8_chain(ModN(12), revalidate_count=0).matrices == 19200


def test_chain_sampled_product_ring():
    rep = verify_th8_chain(Product(ModN(4), ModN(3)), sample=300)
    assert rep.ok and not rep.exhaustive and rep.matrices == 300


def test_implication_edges():
    plain = implication_edges(False)
    assert (4, 5) in plain and (8, 9) in plain and (9, 10) in plain
    assert (10, 9) not in plain and (10, 9) in implication_edges(True)
    for block in EQUIVALENT_BLOCKS:
        for i, j in itertools.permutations(block, 2):
            assert (i, j) in plain


ent = st.integers(-10**4, 10**4)


@given(ent, ent, ent, ent)
def test_integer_statements_all_hold_with_valid_witnesses(a, b, c, d):
    assume(gcd(gcd(a, b), gcd(c, d)) == 1)
    A = Mat2(ZZ, a, b, c, d)
    rep = check_all(A)
    for st_ in rep.statuses:
        assert st_.holds, st_
        assert revalidate(A, st_.k, st_.witness), st_


@pytest.mark.parametrize("rows", [[[2, 1], [1, 1]], [[0, 1], [1, 0]], [[2, 4], [3, 6]],
                                  [[15, 6], [10, 14]], [[7, 0], [0, 11]], [[30, 42], [70, 105]],
                                  [[123457, 2], [3, 10**9 + 7]]])
def test_integer_statements_edge_cases(rows):
    A = Mat2.ints(ZZ, rows)
    for st_ in check_all(A).statuses:
        assert st_.holds and revalidate(A, st_.k, st_.witness)


def test_revalidate_rejects_wrong_witnesses():
    A = Mat2.ints(ZZ, [[15, 6], [10, 14]])
    rep = check_all(A)
    w5 = rep.status(5).witness
    bad = Mat2(ZZ, *(x + 1 for x in w5["X"].entries()))
    assert not revalidate(A, 5, {"X": bad})
    assert not revalidate(A, 10, {"C": A})
    assert not revalidate(A, 7, {"C": Mat2.ints(ZZ, [[1, 0], [0, 0]])})


def test_th2_2_witness():
    A = Mat2.ints(ZZ, [[15, 6], [10, 14]])
    B, C = th2_2_witness(A)
    assert det2(B) == 0 and det2(C) == 0
    assert C == Mat2(ZZ, *(u * 150 + v for u, v in zip(B.entries(), A.entries())))


def test_quadratic_statements():
    R = Quadratic(-5)
    A = Mat2(R, (3, 0), (1, -1), (1, 1), (2, 0))
    rep = check_all(A)
    assert [rep.status(k).status for k in (1, 2, 3, 4)] == ["fails"] * 4
    assert rep.status(2).route == "fullness"
    ok = check_statement(Mat2(R, (1, 0), (0, 1), (0, 0), (1, 0)), 2)
    assert ok.holds and revalidate(ok.witness["extension"].A, 2, ok.witness)


def test_errors():
    with pytest.raises(RingError):
        check_statement(Mat2.ints(ZZ, [[2, 0], [0, 2]]), 2)
    with pytest.raises(RingError):
        check_statement(Mat2.ints(ZZ, [[1, 0], [0, 1]]), 11)
    with pytest.raises(Unsupported):
        check_statement(Mat2(PolyZ3(), X, Y, 1 + X, Y), 2)
