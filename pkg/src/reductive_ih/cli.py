"""Command line front end.

    reductive-ih check   problem.json
    reductive-ih orbits  problem.json
    reductive-ih ih      problem.json [--trace] [--check-scaling K]
    reductive-ih toric   problem.json
    reductive-ih oracle  problem.json

A problem file looks like::

    {"preset": "GL2",
     "polytope": {"vertices": [["1", "0"], ["0", "1"]]},
     "options": {"max_weyl_order": 2048, "trace": false, "format": "json"}}

with ``"root_datum": {"rank": ..., "simple_roots": ..., "simple_coroots": ...}``
allowed in place of ``"preset"``.  Exit codes: 0 success, 2 bad input,
3 polytope not admissible, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .admissibility import ConjugateFaces, NonParabolicSymmetry, admissibility_report
from .engine import IHEngine, InvariantViolation, NotAdmissible, VarietyDescriptor, orbit_table
from .exactmath import to_fraction
from .polyhedra import NotPointed, NotPositive, polytope_from_vertices
from .qpoly import NonDivisible
from .rootdatum import (OrderExceeded, RootDatum, generate_weyl,
                        preset, torus, validate)
from .toric_oracle import NotEulerian, toric_ih_oracle

EXIT_OK, EXIT_INPUT, EXIT_NOT_ADMISSIBLE, EXIT_INTERNAL = 0, 2, 3, 4


class InputError(ValueError):
    pass


@dataclass
class Problem:
    rd: RootDatum
    vertices: list[tuple[Fraction, ...]]
    max_weyl_order: int = 2048
    trace: bool = False
    format: str = "json"


def parse_problem(data: dict, toric: bool = False) -> Problem:
    if not isinstance(data, dict):
        raise InputError("problem must be a JSON object")
    try:
        raw = data["polytope"]["vertices"]
        vertices = [tuple(to_fraction(x) for x in v) for v in raw]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad polytope: {exc}") from exc
    if not vertices:
        raise InputError("polytope has no vertices")
    if len({len(v) for v in vertices}) != 1:
        raise InputError("vertices have differing dimensions")
    r = len(vertices[0])
    try:
        if toric:
            rd = torus(r)
        elif "preset" in data:
            rd = preset(data["preset"])
        elif "root_datum" in data:
            rd = RootDatum.from_json(data["root_datum"])
        else:
            rd = torus(r)
        validate(rd)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad root datum: {exc}") from exc
    if rd.rank != r:
        raise InputError(f"vertices have dimension {r} but the root datum has rank {rd.rank}")
    if any(x.denominator != 1 for v in vertices for x in v):
        raise InputError("polytope vertices must be integral")
    opts = data.get("options", {}) or {}
    return Problem(rd, vertices, int(opts.get("max_weyl_order", 2048)),
                   bool(opts.get("trace", False)), str(opts.get("format", "json")))


def _emit(payload: dict, fmt: str, table: str | None = None):
    if fmt == "table" and table is not None:
        print(table)
    else:
        print(json.dumps(payload, indent=2, sort_keys=False))


def _symmetry_rows(engine: IHEngine, V: VarietyDescriptor) -> list[dict]:
    rows = []
    for af in engine.faces(V):
        s = af.symmetry
        rows.append({"vertices": [[str(x) for x in v] for v in af.vertices], "face_dim": af.dim,
                     "I": list(s.I), "J": list(s.J), "K": list(s.K)})
    return rows


def cmd_check(problem: Problem, args) -> int:
    W = generate_weyl(problem.rd, problem.max_weyl_order)
    delta = polytope_from_vertices(problem.rd.rank, problem.vertices)
    report = admissibility_report(problem.rd, W, delta)
    payload = {"admissible": report.admissible, "verdict": report.describe()}
    if not report.admissible:
        payload["failed_condition"] = report.failed_condition
        if report.witness_element is not None:
            payload["witness_element"] = [list(row) for row in report.witness_element]
            payload["witness_point"] = [str(x) for x in report.witness_point]
        _emit(payload, problem.format, report.describe())
        return EXIT_NOT_ADMISSIBLE
    payload["chamber_point"] = [str(x) for x in report.witness_point]
    V = VarietyDescriptor(problem.rd, W, delta)
    payload["faces"] = _symmetry_rows(IHEngine(), V)
    table = report.describe() + "\n" + "\n".join(
        f"{row['vertices']}  dim={row['face_dim']}  I={row['I']} J={row['J']} K={row['K']}"
        for row in payload["faces"])
    _emit(payload, problem.format, table)
    return EXIT_OK


def _descriptor(problem: Problem) -> VarietyDescriptor:
    return VarietyDescriptor.build(problem.rd, problem.vertices, problem.max_weyl_order)


def cmd_orbits(problem: Problem, args) -> int:
    V = _descriptor(problem)
    engine = IHEngine()
    rows = []
    lines = []
    for af in engine.faces(V):
        s = af.symmetry
        vp = engine.orbit_virtual_poincare(V, af)
        rows.append({"vertices": [[str(x) for x in v] for v in af.vertices], "face_dim": af.dim,
                     "I": list(s.I), "J": list(s.J), "K": list(s.K),
                     "orbit_dim": engine.orbit_dim(V, af), "virtual_poincare": vp.to_list()})
        lines.append(f"{rows[-1]['vertices']}  dim={af.dim}  I={list(s.I)} J={list(s.J)} K={list(s.K)}"
                     f"  orbit_dim={rows[-1]['orbit_dim']}  P={vp}")
    _emit({"admissible": True, "dim": engine.variety_dim(V), "orbits": rows},
          problem.format, "\n".join(lines))
    return EXIT_OK


def cmd_ih(problem: Problem, args) -> int:
    V = _descriptor(problem)
    engine = IHEngine(trace=problem.trace)
    result = engine.global_ih(V)
    payload = result.to_json()
    if args.check_scaling:
        k = args.check_scaling
        scaled = IHEngine().global_ih(V.scaled(k))
        payload["scaling_check"] = {"k": k, "global": scaled.global_poly.to_list(),
                                    "agrees": scaled.global_poly == result.global_poly}
        if scaled.global_poly != result.global_poly:
            _emit(payload, "json")
            print(f"scaling check failed for k={k}", file=sys.stderr)
            return EXIT_INTERNAL
    _emit(payload, problem.format, orbit_table(result))
    return EXIT_OK


def cmd_oracle(problem: Problem, args) -> int:
    delta = polytope_from_vertices(problem.rd.rank, problem.vertices)
    h = toric_ih_oracle(delta)
    payload = {"dim": delta.dim, "global": h.to_list(), "global_t": h.to_t_string()}
    if args.cross_check:
        engine_poly = IHEngine().global_ih(VarietyDescriptor.build(torus(delta.ambient_rank), delta)).global_poly
        payload["engine_agrees"] = engine_poly == h
        if engine_poly != h:
            _emit(payload, "json")
            return EXIT_INTERNAL
    _emit(payload, problem.format, f"IP_X = {h.to_t_string()}   (q-coefficients {h.to_list()})")
    return EXIT_OK


COMMANDS = {"check": cmd_check, "orbits": cmd_orbits, "ih": cmd_ih, "toric": cmd_ih, "oracle": cmd_oracle}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reductive-ih",
                                     description="Intersection cohomology of projective reductive varieties")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", help="problem JSON file, or - for stdin")
        p.add_argument("--format", choices=["json", "table"])
        p.add_argument("--trace", action="store_true", default=None)
        p.add_argument("--max-weyl-order", type=int)
        p.add_argument("--check-scaling", type=int, metavar="K")
        p.add_argument("--cross-check", action="store_true",
                       help="(oracle) also run the engine and compare")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = sys.stdin.read() if args.input == "-" else open(args.input).read()
        problem = parse_problem(json.loads(text), toric=args.command in ("toric", "oracle"))
    except (OSError, json.JSONDecodeError, InputError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.format:
        problem.format = args.format
    if args.trace is not None:
        problem.trace = args.trace
    if args.max_weyl_order:
        problem.max_weyl_order = args.max_weyl_order
    if args.check_scaling is not None and args.check_scaling < 1:
        print("input error: --check-scaling needs K >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[args.command](problem, args)
    except OrderExceeded as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotAdmissible as exc:
        _emit({"admissible": False, "verdict": str(exc),
               "failed_condition": exc.report.failed_condition}, problem.format, str(exc))
        return EXIT_NOT_ADMISSIBLE
    except (InvariantViolation, NonParabolicSymmetry, ConjugateFaces, NotPointed,
            NotPositive, NonDivisible, NotEulerian) as exc:
        face = getattr(exc, "face", None)
        print(f"internal invariant violation: {exc}" + (f" [face {face}]" if face is not None else ""),
              file=sys.stderr)
        return EXIT_INTERNAL

if __name__ == "__main__":
    sys.exit(main())
