from __future__ import annotations

from math import gcd

import pytest
from hypothesis import assume, given, strategies as st

from sl3ext.extend import (BudgetExhausted, NotSimplyExtendable, NotUnimodular,
                           closed_form_extension, companion_test_matrix, evaluate_hom,
                           ex11_certificate, ex11_matrix, extend_via_reduction,
                           find_simple_extension, lift_det_zero, nonfull_decompose,
                           nonfull_extension, nu_enumerate, pell_simple_extendable,
                           quadratic_border_count, quadratic_border_search,
                           quadratic_nonfull_decompose, simple_extension_pr5,
                           simple_extension_snf, smith2, universal_matrix)
from sl3ext.matrix import Mat2, det2, det3, is_non_full, mul2, theta
from sl3ext.poly import Poly, X, Y, Z
from sl3ext.rings import Integers, ModN, PolyZ3, Quadratic, Unsupported

ZZ = Integers()
ent = st.integers(-10**9, 10**9)


def unimodular(a, b, c, d):
    return gcd(gcd(a, b), gcd(c, d)) == 1


@given(ent, ent, ent, ent)
def test_smith_form(a, b, c, d):
    A = Mat2(ZZ, a, b, c, d)
    sm = smith2(A)
    assert sm.holds()
    assert det2(sm.M) == 1 and det2(sm.N) == 1
    g, h = sm.D.a, sm.D.d
    assert sm.D.b == sm.D.c == 0 and g >= 0
    assert g == gcd(gcd(a, b), gcd(c, d))
    if g:
        assert h % g == 0


@given(ent, ent, ent, ent)
def test_snf_route(a, b, c, d):
    assume(unimodular(a, b, c, d))
    A = Mat2(ZZ, a, b, c, d)
    w = simple_extension_snf(A)
    assert w.valid() and w.simple
    assert det3(w.aplus) == 1 and theta(w.aplus) == A and w.aplus[2, 2] == 0


@given(st.integers(-300, 300), st.integers(-300, 300), st.integers(-300, 300),
       st.integers(-300, 300))
def test_structured_route(a, b, c, d):
    assume(unimodular(a, b, c, d) and (a, c) != (0, 0))
    A = Mat2(ZZ, a, b, c, d)
    w, data = simple_extension_pr5(A)
    assert w.valid() and w.simple
    assert gcd(data.g, data.w * data.m + data.v * data.l) == 1


def test_structured_route_diagonal():
    w, data = simple_extension_pr5(Mat2.ints(ZZ, [[7, 0], [0, 11]]))
    assert (data.w, data.v, data.case) == (7, 1, "(g,l)")
    assert w.valid()


@given(st.integers(-500, 500), st.integers(-500, 500), st.integers(-500, 500),
       st.integers(-500, 500))
def test_reduction_route(a, b, c, d):
    assume(unimodular(a, b, c, d))
    A = Mat2(ZZ, a, b, c, d)
    w = extend_via_reduction(A)
    assert w.valid()
    assert det3(w.aplus) == 1 and theta(w.aplus) == A


def test_reduction_route_degenerate_determinants():
    for rows in ([[2, 1], [1, 1]], [[1, 1], [0, -1]], [[2, 4], [3, 6]], [[0, 3], [0, 2]]):
        w = extend_via_reduction(Mat2.ints(ZZ, rows))
        assert w.valid()


def test_closed_forms():
    cases = {
        "unit-corner": [[1, 5], [7, 2]],
        "coprime-row": [[4, 9], [6, 6]],
        "diagonal": [[4, 0], [0, 9]],
        "multiples": [[4, 8], [12, 9]],
    }
    for route, rows in cases.items():
        w = closed_form_extension(Mat2.ints(ZZ, rows))
        assert w.route == route and w.valid()
    assert closed_form_extension(Mat2.ints(ZZ, [[6, 10], [15, 0]])) is None


def test_not_unimodular():
    with pytest.raises(NotUnimodular):
        simple_extension_snf(Mat2.ints(ZZ, [[2, 4], [6, 8]]))


def test_nonfull_decompose_integers():
    A = Mat2.ints(ZZ, [[6, -10], [-9, 15]])
    col, row = nonfull_decompose(A)
    assert is_non_full(A, col, row)
    assert nonfull_extension(A, col, row).valid()


def test_finite_extension_search():
    R = ModN(12)
    A = Mat2.ints(R, [[4, 3], [0, 0]])
    w = find_simple_extension(A)
    assert w.valid() and w.simple


def test_quadratic_full_matrix_has_no_simple_extension_in_box():
    A = ex11_matrix(1)
    assert quadratic_nonfull_decompose(A) is None
    assert quadratic_border_search(A, 3) is None
    with pytest.raises(BudgetExhausted):
        find_simple_extension(A, 2)
    tested, completing = quadratic_border_count(A, 2)
    assert tested == 5 ** 4 and completing == 0  # rows (e, f) in the box


def test_quadratic_search_finds_extension():
    R = Quadratic(-5)
    A = Mat2(R, (1, 0), (0, 1), (0, 0), (1, 0))
    w = quadratic_border_search(A, 2)
    assert w is not None and w.valid()
    # (1, w) times (1 + w, 2)
    B = Mat2(R, (1, 1), (2, 0), (-5, 1), (0, 2))
    assert R.is_zero(det2(B))
    col, row = quadratic_nonfull_decompose(B)
    assert is_non_full(B, col, row)


def test_lift_known_sequence():
    Bs = lift_det_zero(Mat2.ints(ZZ, [[1, 1], [1, 6]]), 5, 3)
    assert Bs[1] == Mat2.ints(ZZ, [[1, 1], [1, 1]])
    assert all(det2(B) % 5 ** (2 ** n) == 0 for n, B in enumerate(Bs))


@given(st.integers(-40, 40), st.integers(-40, 40), st.integers(-40, 40), st.integers(-40, 40),
       st.sampled_from([2, 3, 5, 6, 7]))
def test_lift_moduli_double(a, b, c, d, t):
    assume(unimodular(a, b, c, d) and (a * d - b * c) % t == 0)
    Bs = lift_det_zero(Mat2(ZZ, a, b, c, d), t, 4)
    for n in range(1, 5):
        m = t ** (2 ** (n - 1))
        assert all((x - y) % m == 0 for x, y in zip(Bs[n].entries(), Bs[n - 1].entries()))
        assert det2(Bs[n]) % (t ** (2 ** n)) == 0


def product_set_oracle(a, d, bound):
    prods = {x * y for x in range(-bound, bound + 1) for y in range(-bound, bound + 1)}
    return {a * d + E + (1 - a * E) // d for E in prods
            if (1 - a * E) % d == 0 and (1 - a * E) // d in prods}


def test_nu_values_agree_with_product_oracle():
    rep = nu_enumerate(Mat2.ints(ZZ, [[7, 0], [0, 11]]), 40)
    assert set(rep.values) == product_set_oracle(7, 11, 40)
    assert len(rep.values) == 35
    assert all(v % 4 == 0 for v in rep.values)
    assert rep.progression == (0, 4)
    assert 0 not in rep.values  # es = -212 needs a factor above the box
    for v, (e, f, s, t) in rep.witnesses.items():
        assert 7 * e * s + 11 * f * t == 1 and 77 + e * s + f * t == v
    assert nu_enumerate(Mat2.ints(ZZ, [[1, 0], [0, 5]]), 10).progression == (2, 4)


def test_universal_identities():
    P = PolyZ3()
    D, E, F = universal_matrix("D"), universal_matrix("E"), universal_matrix("F")
    one = Poly.const(1)
    L = Mat2(P, one, Poly(), Z * (X - 1) * (1 - Y * Z), one)
    Rm = Mat2(P, one, Poly(), X * Z, one)
    assert mul2(mul2(L, D), Rm) == E
    from sl3ext.extend import substitute_matrix
    assert substitute_matrix(F, [X, Y, 2 * Z - Y * Z * Z]) == E
    for name in "DEFG":
        M = universal_matrix(name)
        assert P.is_unimodular(list(M.entries()))


def test_universal_evaluations():
    assert evaluate_hom(universal_matrix("D"), ZZ, (2, 3, 1)) == Mat2.ints(ZZ, [[-4, 3], [0, 2]])
    assert evaluate_hom(universal_matrix("G"), ZZ, (1, 0, 0)) == Mat2.ints(ZZ, [[1, 0], [0, 0]])


@given(st.integers(-10**4, 10**4), st.integers(-10**4, 10**4), st.integers(-10**4, 10**4),
       st.integers(-10**4, 10**4))
def test_companion_matches_universal(a, b, c, d):
    assume(unimodular(a, b, c, d))
    comp = companion_test_matrix(Mat2(ZZ, a, b, c, d))
    assert comp.matches_universal()
    assert mul2(comp.M, comp.A) == comp.triangular


def test_companion_known():
    comp = companion_test_matrix(Mat2.ints(ZZ, [[15, 6], [10, 14]]))
    assert comp.D == Mat2.ints(ZZ, [[-15, -8], [0, 0]]) and comp.phi == (1, -8, -2)


def test_pell():
    res = pell_simple_extendable(Mat2.ints(ZZ, [[1, 2], [2, 4]]))
    assert res.witness.valid()
    res = pell_simple_extendable(Mat2.ints(ZZ, [[-4, 2], [2, -1]]))
    assert res is not None and res.witness.valid()
    # a e^2 - c f^2 = 4e^2 - 9f^2 = (2e - 3f)(2e + 3f) is never a unit
    assert pell_simple_extendable(Mat2.ints(ZZ, [[4, 6], [6, 9]]), box=20) is None


@pytest.mark.parametrize("k", [1, 2, 3])
def test_ex11_certificate(k):
    cert = ex11_certificate(k)
    assert cert.ok
    assert cert.det_zero and cert.two_irreducible and cert.full
    assert cert.norm_two_elements == []
    assert not any(cert.two_divides.values())
    assert cert.borders_completing == 0


def test_unsupported_ring():
    A = Mat2(PolyZ3(), X, Y, Z, Poly.const(1))
    with pytest.raises(Unsupported):
        find_simple_extension(A)


@given(st.integers(-40, 40), st.integers(-40, 40), st.sampled_from([1, -1]))
def test_symmetric_det_zero_always_simply_extendable(g, h, u):
    # det of the simple extension is u (ge + hf)(gs + ht), so a border always exists,
    # while a e^2 - c f^2 = u (ge - hf)(ge + hf) is a unit only for |g| <= 1 or |h| <= 1
    assume(gcd(g, h) == 1)
    A = Mat2(ZZ, g * g * u, g * h * u, g * h * u, h * h * u)
    assert simple_extension_snf(A).valid()
    found = pell_simple_extendable(A, box=8) is not None
    assert found == (abs(g) <= 1 or abs(h) <= 1)
