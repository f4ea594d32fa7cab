"""The ten statements tied to simple extendability, decided by exhaustive
search over Z/n and checked against the implications between them.

Run: python3 demos/02_statements_over_finite_rings.py
"""
from __future__ import annotations

import time

from sl3ext import Mat2, ModN, check_all, verify_th8_chain
from sl3ext.extend import ExtWitness
from sl3ext.matrix import format_matrix
from sl3ext.statements import implication_edges

# One matrix over Z/12, each statement with the witness the scan found first.
A = Mat2.ints(ModN(12), [[4, 3], [0, 0]])


def show(v):
    if isinstance(v, ExtWitness):
        return "[" + format_matrix(v.aplus) + "]"
    if isinstance(v, Mat2):
        return "[" + format_matrix(v) + "]"
    return str(v)


for st in check_all(A).statuses:
    wit = ", ".join(f"{k}={show(v)}" for k, v in st.witness.items())
    print(f"  ({st.k:2d}) {st.status:5s} {wit}")

# Z/12 is not reduced (6^2 = 0), so the edge 10 -> 9 is not claimed there.
print("\nedges over Z/12:", implication_edges(ModN(12).is_reduced()))

# The whole chain on every unimodular matrix for small moduli.
print("\n  n  matrices  violations  revalidated  seconds")
for n in range(2, 13):
    t0 = time.perf_counter()
    rep = verify_th8_chain(ModN(n))
    print(f"{n:3d} {rep.matrices:9d} {len(rep.violations):11d} {rep.revalidated:12d}"
          f"  {time.perf_counter() - t0:6.2f}")
