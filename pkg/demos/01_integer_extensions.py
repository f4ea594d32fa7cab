"""Completing 2x2 integer matrices to 3x3 matrices of determinant one.

Run: python3 demos/01_integer_extensions.py
"""
from __future__ import annotations

from sl3ext import Integers, Mat2, det2, det3, theta
from sl3ext.extend import (assemble_extension, extend_via_reduction, nu_value,
                           simple_extension_pr5, simple_extension_snf)

ZZ = Integers()

# A unimodular matrix: its entries generate Z, but det(A) = 150.
A = Mat2.ints(ZZ, [[15, 6], [10, 14]])
print("A =", A.rows(), " det =", det2(A))

# A border (e, f, s, t) gives a 3x3 matrix with a zero corner. Its
# determinant is a(es) + b(et) + c(fs) + d(ft).
Ap = assemble_extension(A, -1, -2, -1, 1)
print("hand-picked border ->", Ap.rows(), "det", det3(Ap))
print("top-left block is A again:", theta(Ap) == A)
print("det(A) + es + ft =", nu_value(A, -1, -2, -1, 1))

# The Smith form gives a border for any unimodular integer matrix.
w = simple_extension_snf(A)
print("\nSmith route:", w.aplus.rows(), "valid:", w.valid())

# The structured construction works from the column gcds instead.
w, data = simple_extension_pr5(Mat2.ints(ZZ, [[7, 0], [0, 11]]))
print("structured route on diag(7, 11): case", data.case, "border", (w.e, w.f, w.s, w.t))

# Reducing modulo det(A) and lifting back yields an extension whose
# corner is usually nonzero.
w = extend_via_reduction(Mat2.ints(ZZ, [[30, 42], [70, 105]]))
print("reduction route:", w.aplus.rows(), "simple:", w.simple, "det", det3(w.aplus))

# Entries far past 64 bits are fine.
big = Mat2.ints(ZZ, [[10**30 + 1, 2], [3, 10**30 + 7]])
w = simple_extension_snf(big)
print("\n30-digit entries still give det", det3(w.aplus))
