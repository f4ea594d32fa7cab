from __future__ import annotations

import pytest

from sl3ext.classes import (CLASS_NAMES, CONTAINMENTS, check_class, classify, classify_sweep,
                            revalidate_counterexample, stable_range_flags)
from sl3ext.matrix import Mat2
from sl3ext.rings import Integers, ModN, Product, RingError, Unsupported


@pytest.mark.parametrize("n", range(2, 17))
def test_residue_rings_are_members(n):
    rep = classify(ModN(n))
    for name, v in rep.verdicts.items():
        assert v.member or v.skipped, (n, name)
    assert rep.containment_violations() == []
    assert all(rep.flags.values())


def test_j21_skipped_on_large_rings():
    v = check_class(ModN(7), "J21")
    assert v.skipped and v.checked == 0
    assert check_class(ModN(4), "J21").member
    assert check_class(ModN(6), "WJ21").member


def test_product_ring():
    rep = classify(Product(ModN(2), ModN(2)))
    assert rep.containment_violations() == []
    assert rep.member("SE2") and rep.member("V2") and rep.member("U2")


def test_containment_list_is_well_formed():
    for p, q in CONTAINMENTS:
        assert p in CLASS_NAMES and q in CLASS_NAMES


@pytest.mark.parametrize("name,cx", [
    ("SE2", {"A": Mat2.ints(ModN(6), [[1, 0], [0, 1]])}),
    ("E2", {"A": Mat2.ints(ModN(6), [[2, 3], [0, 0]])}),
    ("PI2", {"A": Mat2.ints(ModN(6), [[2, 3], [0, 0]])}),
    ("Z2", {"A": Mat2.ints(ModN(6), [[1, 2], [3, 0]])}),
    ("WZ2", {"A": Mat2.ints(ModN(6), [[5, 0], [0, 1]])}),
    ("WSU2", {"A": Mat2.ints(ModN(6), [[1, 1], [2, 3]])}),
    ("U2", {"a": 1, "b": 0, "c": 2}),
    ("WU2", {"a": 1, "b": 3, "c": 4}),
    ("W2", {"a": 2, "b": 3, "c": 1}),
    ("WW2", {"a": 0, "b": 1, "c": 0}),
    ("V2", {"a": 1, "b": 1, "c": 1}),
    ("WV2", {"a": 0, "b": 1, "c": 0}),
    ("J21", {"a": 1, "b": 0, "c": 0, "d": 0, "alpha": 1, "Delta": 2}),
])
def test_fake_counterexamples_are_rejected(name, cx):
    assert not revalidate_counterexample(ModN(6), name, cx)


def test_stable_range_flags():
    assert stable_range_flags(ModN(12)) == {"sr1": True, "fsr15": True, "asr1": True}


def test_sweep_is_deterministic_across_workers():
    rings = [ModN(n) for n in (4, 6, 9)]
    one = classify_sweep(rings, ("SE2", "U2", "V2"), workers=1)
    two = classify_sweep(rings, ("SE2", "U2", "V2"), workers=2)
    assert [r.verdicts for r in one] == [r.verdicts for r in two]


def test_errors():
    with pytest.raises(Unsupported):
        check_class(Integers(), "SE2")
    with pytest.raises(RingError):
        check_class(ModN(4), "XX2")
