"""Command-line front end.

Exit status: 0 success (or property holds), 1 property fails (``check``
only), 2 bad input or usage, 3 internal invariant violation or oracle
disagreement.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence, TextIO

from .decompose import (brute_force_invariant_subset, brute_force_split, decompose,
                        decomposing_split, invariant_subset, verify_decomposition)
from .equivalence import compare_bases
from .errors import InputError, InvariantViolation
from .graph import (build_graph, find_asymmetric_edge, is_connected, to_dot,
                    weak_components, weakly_symmetric_oracle)
from .io import (comparison_to_json, decomposition_to_json, dumps, graph_to_json,
                 parse_problem, verification_to_json)

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3

PROPERTIES = ("indecomposable", "weakly-symmetric", "minimal")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="preeuclid",
        description="Graph-based decomposition of linear operators on spaces with a bilinear form.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="build the associated graph")
    p.add_argument("file")
    p.add_argument("--dot", metavar="OUT", help="also write the graph as DOT")
    p.add_argument("--json", metavar="OUT", help="also write the report to a file")

    p = sub.add_parser("decompose", help="orthogonal decomposition along graph components")
    p.add_argument("file")
    p.add_argument("--json", metavar="OUT")

    p = sub.add_parser("check", help="test one property; exit status 1 when it fails")
    p.add_argument("file")
    p.add_argument("--property", required=True, choices=PROPERTIES)
    p.add_argument("--oracle", action="store_true",
                   help="also run the brute-force check and require agreement")
    p.add_argument("--json", metavar="OUT")

    p = sub.add_parser("compare", help="compare against the file's new_basis")
    p.add_argument("file")
    p.add_argument("--json", metavar="OUT")
    return parser


def _emit(report: dict, out: TextIO, json_path: str | None) -> None:
    text = dumps(report)
    out.write(text)
    if json_path:
        Path(json_path).write_text(text, encoding="utf-8")


def _cmd_graph(args, out: TextIO) -> int:
    spec, _ = parse_problem(args.file)
    g = build_graph(spec)
    report = graph_to_json(g, weak_components(g), is_connected(g))
    if args.dot:
        Path(args.dot).write_text(to_dot(g), encoding="utf-8")
    _emit(report, out, args.json)
    return EXIT_OK


def _cmd_decompose(args, out: TextIO) -> int:
    spec, _ = parse_problem(args.file)
    d = decompose(spec)
    report = decomposition_to_json(d)
    report["signature"] = sorted((c.dim for c in d), reverse=True)
    report["verification"] = verification_to_json(verify_decomposition(spec, d))
    _emit(report, out, args.json)
    return EXIT_OK


def _check(prop: str, spec, oracle: bool):
    """Return (holds, witness, oracle_holds) with labels in the witness."""
    lab = spec.labels
    if prop == "indecomposable":
        split = decomposing_split(spec)
        witness = None if split is None else [[lab[i] for i in side] for side in split]
        oracle_holds = brute_force_split(spec) is None if oracle else None
        return split is None, witness, oracle_holds
    if prop == "weakly-symmetric":
        g = build_graph(spec)
        edge = find_asymmetric_edge(g)
        witness = None if edge is None else [lab[edge[0]], lab[edge[1]]]
        oracle_holds = weakly_symmetric_oracle(g) if oracle else None
        return edge is None, witness, oracle_holds
    subset = invariant_subset(spec)
    witness = None if subset is None else [lab[i] for i in subset]
    oracle_holds = brute_force_invariant_subset(spec) is None if oracle else None
    return subset is None, witness, oracle_holds


def _cmd_check(args, out: TextIO, err: TextIO) -> int:
    spec, _ = parse_problem(args.file)
    holds, witness, oracle_holds = _check(args.property, spec, args.oracle)
    report = {"basis": list(spec.labels), "property": args.property,
              "holds": holds, "witness": witness}
    if args.oracle:
        report["oracle"] = {"holds": oracle_holds, "agrees": oracle_holds == holds}
    _emit(report, out, args.json)
    if args.oracle and oracle_holds != holds:
        err.write(f"error: brute-force oracle disagrees on {args.property}\n")
        return EXIT_INTERNAL
    return EXIT_OK if holds else EXIT_FALSE


def _cmd_compare(args, out: TextIO) -> int:
    spec, change = parse_problem(args.file)
    if change is None:
        raise InputError(f"{args.file}: compare needs a new_basis entry")
    report = compare_bases(spec, change.transition, change.labels)
    _emit(comparison_to_json(report), out, args.json)
    return EXIT_OK


def run(argv: Sequence[str] | None = None, out: TextIO | None = None,
        err: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.command == "graph":
            return _cmd_graph(args, out)
        if args.command == "decompose":
            return _cmd_decompose(args, out)
        if args.command == "check":
            return _cmd_check(args, out, err)
        return _cmd_compare(args, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except InvariantViolation as exc:
        err.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL


def main() -> None:
    raise SystemExit(run())
