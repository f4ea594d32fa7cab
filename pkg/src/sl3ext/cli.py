"""Command-line front end. JSON goes to standard output, diagnostics and
timings to standard error.

Exit codes: 0 decided (either way), 2 unknown or budget exhausted,
3 input error.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
import time
from typing import Any, Callable

from . import regression
from .classes import CLASS_NAMES, classify, classify_sweep
from .extend import (BudgetExhausted, NotSimplyExtendable, NotUnimodular, companion_test_matrix,
                     extend_via_reduction, find_simple_extension, lift_det_zero, nu_enumerate,
                     pell_simple_extendable, quadratic_nonfull_decompose, simple_extension_pr5,
                     simple_extension_snf)
from .matrix import Mat2, det2, det3, parse_matrix, theta
from .rings import Integers, ModN, Quadratic, Undecided, Unsupported, parse_ring
from .serialize import dumps
from .statements import DEFAULT_BUDGET, check_all
from .witnesses import c9_extension, c14_witness, cr3_witness, th5_8_witness

EXIT_DECIDED, EXIT_UNKNOWN, EXIT_INPUT = 0, 2, 3


class InputError(Exception):
    pass


def _ring_and_matrix(args) -> tuple[Any, Mat2]:
    if not args.matrix:
        raise InputError("--matrix is required")
    ring = parse_ring(args.ring)
    A = parse_matrix(ring, args.matrix)
    if not isinstance(A, Mat2):
        raise InputError("expected a 2x2 matrix")
    return ring, A


def _ints(text: str, n: int) -> list[int]:
    try:
        vals = [int(v) for v in text.split(",")]
    except ValueError:
        raise InputError(f"expected {n} comma-separated integers, got {text!r}") from None
    if len(vals) != n:
        raise InputError(f"expected {n} comma-separated integers, got {text!r}")
    return vals


# -- subcommands -------------------------------------------------------------
# Each returns (payload, exit code, ring used for element formatting).

def cmd_extend(args):
    ring, A = _ring_and_matrix(args)
    if not ring.is_unimodular(list(A.entries())):
        raise NotUnimodular(f"{A} is not unimodular")
    budget = args.budget
    route = args.route
    try:
        if route == "reduction":
            if not isinstance(ring, Integers):
                raise InputError("the reduction route works over Z")
            wit = extend_via_reduction(A)
        elif route == "pr5":
            if not isinstance(ring, Integers):
                raise InputError("the pr5 route works over Z")
            wit, _ = simple_extension_pr5(A, budget)
        elif route == "snf" and isinstance(ring, Integers):
            wit = simple_extension_snf(A)
        else:
            wit = find_simple_extension(A, budget)
    except BudgetExhausted as exc:
        payload = {"command": "extend", "ring": ring, "matrix": A, "outcome": "unknown",
                   "note": str(exc)}
        if isinstance(ring, Quadratic) and ring.is_zero(det2(A)):
            if quadratic_nonfull_decompose(A) is None:
                payload["note"] += ("; det(A) = 0 and A is full (no column-times-row "
                                    "factorisation), so no simple extension exists")
                payload["full"] = True
        return payload, EXIT_UNKNOWN, ring
    except NotSimplyExtendable as exc:
        return ({"command": "extend", "ring": ring, "matrix": A, "outcome": "none",
                 "note": str(exc)}, EXIT_DECIDED, ring)
    if not wit.valid():
        raise RuntimeError("internal: extension failed validation")
    if args.simple and not wit.simple:
        return ({"command": "extend", "ring": ring, "matrix": A, "outcome": "unknown",
                 "note": "route produced a non-simple extension"}, EXIT_UNKNOWN, ring)
    return ({"command": "extend", "ring": ring, "matrix": A, "outcome": "found",
             "witness": wit, "det3": det3(wit.aplus),
             "restriction_matches": theta(wit.aplus) == A}, EXIT_DECIDED, ring)


def cmd_statements(args):
    ring, A = _ring_and_matrix(args)
    rep = check_all(A, budget=args.budget)
    rows = [{"k": s.k, "status": s.status, "route": s.route, "note": s.note,
             "witness": s.witness} for s in rep.statuses]
    code = EXIT_UNKNOWN if any(s.status == "unknown" for s in rep.statuses) else EXIT_DECIDED
    return {"command": "statements", "ring": ring, "matrix": A, "delta": rep.delta,
            "statements": rows}, code, ring


def cmd_nu(args):
    ring, A = _ring_and_matrix(args)
    if not isinstance(ring, Integers):
        raise InputError("nu works over Z")
    rep = nu_enumerate(A, args.bound)
    prog = None
    if rep.progression is not None:
        prog = {"residue": rep.progression[0], "modulus": rep.progression[1]}
    return {"command": "nu", "ring": ring, "matrix": A, "bound": args.bound,
            "values": rep.values,
            "witnesses": {str(v): list(rep.witnesses[v]) for v in rep.values},
            "progression": prog}, EXIT_DECIDED, ring


def cmd_lift(args):
    ring, A = _ring_and_matrix(args)
    if not isinstance(ring, Integers):
        raise InputError("lift works over Z")
    Bs = lift_det_zero(A, args.t, args.steps)
    steps = [{"n": n, "matrix": B, "det": det2(B), "modulus": args.t ** (2 ** n)}
             for n, B in enumerate(Bs)]
    return {"command": "lift", "ring": ring, "matrix": A, "t": args.t,
            "steps": steps}, EXIT_DECIDED, ring


def _class_list(text: str | None) -> tuple[str, ...]:
    if not text:
        return CLASS_NAMES
    names = tuple(c.strip() for c in text.split(",") if c.strip())
    bad = [c for c in names if c not in CLASS_NAMES]
    if bad:
        raise InputError(f"unknown classes {bad}; choose from {','.join(CLASS_NAMES)}")
    return names


def _report_json(rep) -> dict:
    return {"ring": rep.ring,
            "classes": {n: {"member": None if v.skipped else v.member, "checked": v.checked,
                            "skipped": v.skipped or None, "counterexample": v.counterexample}
                        for n, v in rep.verdicts.items()},
            "flags": rep.flags,
            "containment_violations": [list(p) for p in rep.containment_violations()]}


def _moduli(text: str) -> list[int]:
    if "-" in text:
        lo, hi = text.split("-", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(v) for v in text.split(",")]


def cmd_classify(args):
    classes = _class_list(args.classes)
    if args.moduli:
        try:
            ns = _moduli(args.moduli)
        except ValueError:
            raise InputError(f"bad --moduli {args.moduli!r}") from None
        rings = [ModN(n) for n in ns]
    else:
        rings = [parse_ring(args.ring)]
    reports = classify_sweep(rings, classes, args.workers)
    if args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["ring", *classes, "sr1", "fsr15", "asr1"])
        for rep in reports:
            cells = ["skip" if v.skipped else int(v.member) for v in rep.verdicts.values()]
            w.writerow([str(rep.ring), *cells, *(int(rep.flags[k]) for k in ("sr1", "fsr15", "asr1"))])
        return buf.getvalue(), EXIT_DECIDED, None
    if len(reports) == 1:
        return {"command": "classify", **_report_json(reports[0])}, EXIT_DECIDED, reports[0].ring
    return {"command": "classify", "reports": [_report_json(r) for r in reports]}, EXIT_DECIDED, None


def cmd_companion(args):
    ring, A = _ring_and_matrix(args)
    comp = companion_test_matrix(A)
    return {"command": "companion", "ring": ring, "matrix": A, "transform": comp.M,
            "triangular": comp.triangular, "split": list(comp.split),
            "bezout": list(comp.bezout), "companion": comp.D, "point": list(comp.phi),
            "matches_universal": comp.matches_universal()}, EXIT_DECIDED, ring


def cmd_pell(args):
    ring, A = _ring_and_matrix(args)
    res = pell_simple_extendable(A, args.budget if args.budget != DEFAULT_BUDGET else 64)
    if res is None:
        return {"command": "pell", "ring": ring, "matrix": A, "outcome": "unknown",
                "note": "no (e, f) in the search box"}, EXIT_UNKNOWN, ring
    return {"command": "pell", "ring": ring, "matrix": A, "outcome": "found", "e": res.e,
            "f": res.f, "unit": res.unit, "pair": list(res.pair),
            "witness": res.witness}, EXIT_DECIDED, ring


WITNESS_TAGS: dict[str, tuple[int, Callable]] = {
    "th5_8": (4, th5_8_witness),
    "cr3": (3, cr3_witness),
    "c14": (3, c14_witness),
}


def cmd_witness(args):
    tag = args.tag
    if tag == "c9":
        ring, A = _ring_and_matrix(args)
        wit = c9_extension(A)
        if wit is None:
            return {"command": "witness", "tag": tag, "outcome": "unknown"}, EXIT_UNKNOWN, ring
        return {"command": "witness", "tag": tag, "matrix": A, "outcome": "found",
                "witness": wit}, EXIT_DECIDED, ring
    if tag not in WITNESS_TAGS:
        raise InputError(f"unknown witness tag {tag!r}; choose from c9,{','.join(WITNESS_TAGS)}")
    n, fn = WITNESS_TAGS[tag]
    if not args.args:
        raise InputError(f"{tag} needs --args with {n} integers")
    vals = _ints(args.args, n)
    wit = fn(*vals)
    if wit is None:
        return {"command": "witness", "tag": tag, "inputs": vals, "outcome": "unknown"}, EXIT_UNKNOWN, None
    return {"command": "witness", "tag": tag, "inputs": wit.inputs, "outcome": "found",
            "values": wit.values, "residuals": list(wit.residuals),
            "exact": wit.exact}, EXIT_DECIDED, None


def cmd_verify(args):
    try:
        picked = regression.select(args.only)
    except KeyError as exc:
        raise InputError(f"unknown criterion {exc.args[0]!r}") from None
    results = []
    for num in picked:
        res = regression.run_criterion(num)
        print(res.line(), file=sys.stderr)
        results.append(res)
    failed = [r.name for r in results if not r.passed]
    payload = {"command": "verify",
               "criteria": [{"number": r.number, "name": r.name, "passed": r.passed,
                             "detail": r.detail} for r in results],
               "failed": failed}
    return payload, (1 if failed else EXIT_DECIDED), None


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", default="Z", help="ring specifier, e.g. Z, Z/12, Q[-5], ZXYZ, (Z/2)x(Z/3)")
    common.add_argument("--matrix", help='matrix as "a,b;c,d"')
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search box bound")
    common.add_argument("--json", action="store_true", help="compact single-line JSON")
    common.add_argument("--workers", type=int, default=1)

    p = argparse.ArgumentParser(prog="sl3ext", parents=[common],
                                description="SL3 extensions of 2x2 matrices over commutative rings")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("extend", parents=[common], help="find an extension of a unimodular matrix")
    s.add_argument("--simple", action="store_true", help="require a zero corner")
    s.add_argument("--route", choices=("snf", "pr5", "reduction"), default="snf")
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("statements", parents=[common], help="decide the ten equivalent statements")
    s.set_defaults(func=cmd_statements)

    s = sub.add_parser("nu", parents=[common], help="enumerate det(A) + es + ft over a box")
    s.add_argument("--bound", type=int, default=10)
    s.set_defaults(func=cmd_nu)

    s = sub.add_parser("lift", parents=[common], help="lift a determinant-zero residue")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--steps", type=int, default=3)
    s.set_defaults(func=cmd_lift)

    s = sub.add_parser("classify", parents=[common], help="ring-class membership over finite rings")
    s.add_argument("--classes")
    s.add_argument("--moduli", help="sweep Z/n, e.g. 2-16 or 4,6,8")
    s.add_argument("--csv", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("companion", parents=[common], help="companion matrix from the universal matrix")
    s.set_defaults(func=cmd_companion)

    s = sub.add_parser("pell", parents=[common], help="simple extension of a symmetric det-0 matrix")
    s.set_defaults(func=cmd_pell)

    s = sub.add_parser("witness", parents=[common], help="solve one of the auxiliary equations")
    s.add_argument("tag", help="th5_8, cr3, c14 or c9")
    s.add_argument("--args", help="comma-separated integers")
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("verify", aliases=["verify-paper"], parents=[common],
                       help="run the regression criteria")
    s.add_argument("--only", help="comma-separated criterion numbers or names")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    t0 = time.perf_counter()
    try:
        payload, code, ring = args.func(args)
    except (Undecided, Unsupported) as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (InputError, ValueError) as exc:
        # RingError (parse failures, NotUnimodular) is a ValueError
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if isinstance(payload, str):
        sys.stdout.write(payload)
    else:
        text = dumps(payload, ring)
        if args.json:
            import json
            text = json.dumps(json.loads(text), separators=(",", ":"))
        print(text)
    print(f"# {args.command}: exit {code}, {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    return code
