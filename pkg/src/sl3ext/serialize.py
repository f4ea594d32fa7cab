"""JSON encoding. Ring elements become strings in the literal syntax of
their ring, so integers of any size survive as decimal strings."""
from __future__ import annotations

import json
from dataclasses import fields, is_dataclass
from typing import Any

from .extend import ExtWitness
from .matrix import Mat2, Mat3
from .rings import Ring

SCHEMA = "1"


def encode(value: Any, ring: Ring | None = None) -> Any:
    if isinstance(value, (Mat2, Mat3)):
        return [[value.ring.format(v) for v in row] for row in value.rows()]
    if isinstance(value, ExtWitness):
        R = value.A.ring
        return {"e": R.format(value.e), "f": R.format(value.f), "s": R.format(value.s),
                "t": R.format(value.t), "extension": encode(value.aplus),
                "simple": value.simple, "route": value.route}
    if isinstance(value, Ring):
        return str(value)
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, str):
        return value
    if ring is not None and ring.contains(value):
        return ring.format(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {str(k): encode(v, ring) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v, ring) for v in value]
    if is_dataclass(value):
        return {f.name: encode(getattr(value, f.name), ring) for f in fields(value)
                if not f.name.startswith("_")}
    return str(value)


def dumps(payload: dict, ring: Ring | None = None) -> str:
    body = {"schema": SCHEMA}
    body.update(encode(payload, ring))
    return json.dumps(body, indent=2, sort_keys=False)


def matrix_from_json(ring: Ring, rows: list[list[str]]):
    if len(rows) == 2:
        return Mat2.of(ring, [[ring.parse(v) for v in r] for r in rows])
    return Mat3.of(ring, [[ring.parse(v) for v in r] for r in rows])
