"""Universal test matrices over Z[x, y, z] and the companion matrix of an
integer matrix obtained by evaluating one of them.

Run: python3 demos/06_universal_matrices.py
"""
from __future__ import annotations

from sl3ext import Integers, Mat2, PolyZ3
from sl3ext.extend import companion_test_matrix, evaluate_hom, substitute_matrix, universal_matrix
from sl3ext.matrix import mul2
from sl3ext.poly import Poly, X, Y, Z

P = PolyZ3()
for name in "DEFG":
    M = universal_matrix(name)
    print(name, [[str(p) for p in row] for row in M.rows()],
          "unimodular:", P.is_unimodular(list(M.entries())))

one = Poly.const(1)
left = Mat2(P, one, Poly(), Z * (X - 1) * (1 - Y * Z), one)
right = Mat2(P, one, Poly(), X * Z, one)
print("\nE equals L D R:", mul2(mul2(left, universal_matrix("D")), right) == universal_matrix("E"))
print("F with z -> 2z - yz^2 equals E:",
      substitute_matrix(universal_matrix("F"), [X, Y, 2 * Z - Y * Z * Z]) == universal_matrix("E"))

ZZ = Integers()
comp = companion_test_matrix(Mat2.ints(ZZ, [[15, 6], [10, 14]]))
print("\ncompanion of [[15, 6], [10, 14]]:", comp.D.rows(), "at point", comp.phi)
print("D evaluated there:", evaluate_hom(universal_matrix("D"), ZZ, comp.phi).rows())
