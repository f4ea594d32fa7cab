from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from sl3ext.extend import assemble_extension, border, eq8_value
from sl3ext.matrix import (Mat2, Mat3, adjugate2, det2, det3, inverse2, kernel_gens,
                           apply2, mul2, mul3, parse_matrix, format_matrix, reduce_mod, sigma,
                           theta, transpose2, transpose3, equivalence, is_non_full)
from sl3ext.rings import Integers, ModN, Quadratic, RingError

ZZ = Integers()
v = st.integers(-50, 50)
mat2 = st.tuples(v, v, v, v).map(lambda t: Mat2(ZZ, *t))
mat3 = st.tuples(*[v] * 9).map(lambda t: Mat3(ZZ, t))


@given(mat3, mat3)
def test_det3_multiplicative_and_transpose(A, B):
    assert det3(mul3(A, B)) == det3(A) * det3(B)
    assert det3(transpose3(A)) == det3(A)


@given(mat2, v, v, v, v, v)
def test_extension_determinant_formula(A, e, f, s, t, w):
    # det of [[a, b, f], [c, d, -e], [-t, s, w]] is the bilinear form plus w det(A)
    Ap = assemble_extension(A, e, f, s, t, w)
    assert det3(Ap) == eq8_value(A, e, f, s, t) + w * det2(A)
    assert border(Ap) == (e, f, s, t, w)
    if det3(Ap) == 1:
        assert theta(Ap) == A


@given(mat2)
def test_adjugate(A):
    P = mul2(A, adjugate2(A))
    assert P == Mat2(ZZ, det2(A), 0, 0, det2(A))
    assert transpose2(transpose2(A)) == A


def test_sigma_and_theta():
    M = Mat2.ints(ZZ, [[2, 1], [1, 1]])
    S = sigma(M)
    assert det3(S) == 1
    assert mul2(M, inverse2(M)) == Mat2.ints(ZZ, [[1, 0], [0, 1]])
    R = ModN(7)
    Sm = sigma(Mat2.ints(R, [[3, 0], [0, 1]]))
    assert det3(Sm) == 1
    with pytest.raises(RingError):
        theta(Mat3.ints(ZZ, [[2, 0, 0], [0, 1, 0], [0, 0, 1]]))
    A = Mat2.ints(ZZ, [[15, 6], [10, 14]])
    assert theta(assemble_extension(A, -1, -2, -1, 1)) == A


def test_sigma_conjugation_preserves_extensions():
    # sigma(M) A+ sigma(N) extends M A N
    A = Mat2.ints(ZZ, [[15, 6], [10, 14]])
    Ap = assemble_extension(A, -1, -2, -1, 1)
    M = Mat2.ints(ZZ, [[2, 1], [1, 1]])
    N = Mat2.ints(ZZ, [[1, 3], [0, 1]])
    B = mul3(mul3(sigma(M), Ap), sigma(N))
    assert det3(B) == 1 and theta(B) == mul2(mul2(M, A), N)


def test_kernel_and_non_full():
    A = Mat2.ints(ZZ, [[2, 4], [3, 6]])
    for k in kernel_gens(A):
        assert apply2(A, k) == (0, 0)
    assert is_non_full(A, (2, 3), (1, 2))
    assert not is_non_full(A, (1, 1), (1, 2))


def test_equivalence_record():
    A = Mat2.ints(ZZ, [[15, 6], [10, 14]])
    M = Mat2.ints(ZZ, [[1, -1], [-2, 3]])
    N = Mat2.ints(ZZ, [[1, 0], [0, 1]])
    eq = equivalence(M, A, N)
    assert eq.holds


def test_parse_and_format():
    A = parse_matrix("Q[-5]", "3,1-1*w;1+1*w,2")
    assert A.ring == Quadratic(-5) and A.b == (1, -1)
    assert parse_matrix(ZZ, format_matrix(Mat2.ints(ZZ, [[1, -2], [3, 4]]))) == \
        Mat2.ints(ZZ, [[1, -2], [3, 4]])
    B = parse_matrix("(Z/2)x(Z/3)", "(1,2),(0,0);(0,1),(1,1)")
    assert B.a == (1, 2)
    C = parse_matrix(ZZ, "1,0,0;0,1,0;0,0,1")
    assert isinstance(C, Mat3) and det3(C) == 1
    for bad in ("1,2;3", "1,2,3;4,5,6", "a,b;c,d", ""):
        with pytest.raises(RingError):
            parse_matrix(ZZ, bad)


def test_reduce_mod():
    A = Mat2.ints(ZZ, [[15, 6], [10, 14]])
    assert reduce_mod(A, 4) == Mat2.ints(ModN(4), [[3, 2], [2, 2]])
