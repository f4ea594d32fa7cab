"""A determinant-zero matrix over Z[sqrt(-5)] with no simple extension,
and why a bounded search alone could never prove that.

Run: python3 demos/03_full_matrix_certificate.py
"""
from __future__ import annotations

from sl3ext import Quadratic
from sl3ext.extend import ex11_certificate, quadratic_border_count
from sl3ext.rings import elements_of_norm

for k in (1, 2, 3):
    cert = ex11_certificate(k)
    R = cert.ring
    print(f"k={k}: ring {R}, B = {[[R.format(v) for v in row] for row in cert.B.rows()]}")
    print(f"   det 0: {cert.det_zero}   elements of norm 2: {cert.norm_two_elements}")
    print(f"   2 irreducible: {cert.two_irreducible}   2 divides 1+w / 1-w: {cert.two_divides}")
    print(f"   full (not a column times a row): {cert.full}")
    print(f"   border rows tried in box {cert.box}: {cert.borders_tested}, completing: "
          f"{cert.borders_completing}   -> certificate ok: {cert.ok}")

# The argument: if B were a column times a row, the ideal (2, 1+w) would be
# principal, generated by an element of norm 2. There are none.
print("\nnorm-2 elements of Z[sqrt(-5)]:", elements_of_norm(Quadratic(-5), 2))
tested, hits = quadratic_border_count(ex11_certificate(1).B, 3)
print(f"box 3 scan: {tested} rows, {hits} completions")
