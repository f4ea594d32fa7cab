"""Membership of Z/n in the ring classes defined by extension and
unit-lifting conditions, with a check of every containment.

Run: python3 demos/05_ring_classes.py
"""
from __future__ import annotations

import time

from sl3ext import Mat2, ModN
from sl3ext.classes import CLASS_NAMES, classify_sweep, revalidate_counterexample

t0 = time.perf_counter()
reports = classify_sweep([ModN(n) for n in range(2, 17)])
print("ring  " + " ".join(f"{c:>6s}" for c in CLASS_NAMES))
for rep in reports:
    cells = ["  skip" if v.skipped else ("     1" if v.member else "     0")
             for v in rep.verdicts.values()]
    print(f"{str(rep.ring):5s} " + " ".join(cells), " violations:", rep.containment_violations())
print(f"{time.perf_counter() - t0:.1f}s")

# Every reported counterexample is rechecked by plain brute force; a
# made-up one does not survive.
fake = {"A": Mat2.ints(ModN(6), [[1, 0], [0, 1]])}
print("\nidentity over Z/6 as an SE2 counterexample:",
      revalidate_counterexample(ModN(6), "SE2", fake))
