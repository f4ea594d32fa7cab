"""Values det(A) + es + ft over all borders of diagonal matrices, and
lifting a matrix whose determinant is divisible by t to ones whose
determinant is divisible by ever higher powers of t.

Run: python3 demos/04_characteristic_values_and_lifting.py
"""
from __future__ import annotations

from collections import Counter

from sl3ext import Integers, Mat2, det2
from sl3ext.extend import lift_det_zero, nu_enumerate

ZZ = Integers()

rep = nu_enumerate(Mat2.ints(ZZ, [[7, 0], [0, 11]]), 40)
print("diag(7, 11), box 40:", len(rep.values), "values")
print("  residues mod 4:", Counter(v % 4 for v in rep.values))
print("  smallest few:", sorted(rep.values, key=abs)[:8])
print("  progression (residue, modulus):", rep.progression)
v = sorted(rep.values, key=abs)[0]
print(f"  {v} comes from border (e, f, s, t) = {rep.witnesses[v]}")

rep = nu_enumerate(Mat2.ints(ZZ, [[1, 0], [0, 5]]), 10)
print("\ndiag(1, 5): progression", rep.progression,
      " residues:", sorted({v % 4 for v in rep.values}))

# Each step doubles the exponent: det(B_n) is divisible by 5^(2^n).
A = Mat2.ints(ZZ, [[3, 7], [2, 13]])
print("\nA =", A.rows(), "det", det2(A))
for n, B in enumerate(lift_det_zero(A, 5, 4)):
    d = det2(B)
    print(f"  B_{n} = {B.rows()}  det = {d}  divisible by 5^{2 ** n}: {d % 5 ** (2 ** n) == 0}")
