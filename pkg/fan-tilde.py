#!/usr/bin/env python3

"""fan-tilde: bipartite independence number, Fan-type conditions and
Hamilton certificates for small graphs.

Usage: fan-tilde [-v] [--color] <command> [options] [FILE]

Graphs are read from FILE (or standard input) as graph6 lines or as an
edge list ("n m" followed by m lines "u v").  Results are JSON on
standard output.

Exit status: 0 on success, 1 when a checked property is violated,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from fan_tilde.bipartite_hole.holes import alpha_tilde
from fan_tilde.conditions.constants import ALL_CONDITIONS
from fan_tilde.conditions.predicates import evaluate_condition
from fan_tilde.conditions.predicates import normalise_condition_id
from fan_tilde.errors import FanTildeError
from fan_tilde.errors import RewriteError
from fan_tilde.errors import UnknownConditionError
from fan_tilde.extremal_families.families import FAMILIES
from fan_tilde.extremal_families.families import FamilySpec
from fan_tilde.extremal_families.families import build_family
from fan_tilde.extremal_families.families import verify_family_claims
from fan_tilde.graph_core.formats import FORMATS
from fan_tilde.graph_core.formats import emit_graph6
from fan_tilde.graph_core.formats import read_graphs
from fan_tilde.ham_solver.paths import OrientedPath
from fan_tilde.ham_solver.solver import hamilton_cycle
from fan_tilde.ham_solver.solver import hamilton_path_between
from fan_tilde.ham_solver.solver import is_hamiltonian_connected
from fan_tilde.harness.corpus import ALL_LABELED
from fan_tilde.harness.corpus import GRAPH6_FILE
from fan_tilde.harness.corpus import RANDOM
from fan_tilde.harness.corpus import RunConfig
from fan_tilde.harness.corpus import compare_conditions
from fan_tilde.harness.corpus import verify_corpus
from fan_tilde.harness.writer import dumps_report
from fan_tilde.harness.writer import write_record
from fan_tilde.harness.writer import write_summary
from fan_tilde.rewrite_engine.driver import construct_hamilton_cycle
from fan_tilde.rewrite_engine.driver import construct_hamilton_path
from fan_tilde.rewrite_engine.lemmas import check_split_lemmas
from fan_tilde.rewrite_engine.neighbor_split import MODES
from fan_tilde.rewrite_engine.neighbor_split import compute_neighbor_split
from fan_tilde.rewrite_engine.rules import RewriteRule
from fan_tilde.rewrite_engine.rules import apply_rewrite

TYPE_CHECKING = False
if TYPE_CHECKING:
    from collections.abc import Sequence

    from fan_tilde.graph_core.graph import Graph

PROG = "fan-tilde"

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

_log = logging.getLogger(PROG)


class UsageError(Exception):
    pass


def _positions(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers separated by commas, got {text!r}") from None


def _condition(text: str) -> str:
    try:
        return normalise_condition_id(text)
    except UnknownConditionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(args: argparse.Namespace, details: object) -> None:
    text = dumps_report(details)
    if args.color and sys.stdout.isatty():
        from pygments import highlight
        from pygments.formatters import TerminalFormatter
        from pygments.lexers import JsonLexer

        text = highlight(text, JsonLexer(), TerminalFormatter()).rstrip("\n")
    print(text)


def _read(args: argparse.Namespace) -> list[Graph]:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        text = Path(args.file).read_text(encoding="utf-8")
    return read_graphs(text, args.format)


def _read_one(args: argparse.Namespace) -> Graph:
    graphs = _read(args)
    if len(graphs) != 1:
        raise UsageError(f"{args.command} takes exactly one graph, got {len(graphs)}")
    return graphs[0]


def _many(results: list[dict]) -> object:
    return results[0] if len(results) == 1 else results


def cmd_alpha(args: argparse.Namespace) -> int:
    results = []
    for g in _read(args):
        results.append({"graph6": emit_graph6(g), **alpha_tilde(g).details})
    _emit(args, _many(results))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    conditions = args.condition or list(ALL_CONDITIONS)
    results = []
    for g in _read(args):
        alpha = alpha_tilde(g).value
        reports = [evaluate_condition(g, cid, alpha=alpha).details for cid in conditions]
        results.append({"graph6": emit_graph6(g), "alpha_tilde": alpha, "conditions": reports})
    _emit(args, _many(results))
    return EXIT_OK


def cmd_hamilton(args: argparse.Namespace) -> int:
    g = _read_one(args)
    if args.path:
        cert = hamilton_path_between(g, *args.path)
        _emit(args, None if cert is None else cert.details)
    elif args.connected:
        _emit(args, is_hamiltonian_connected(g).details)
    else:
        cert = hamilton_cycle(g)
        _emit(args, None if cert is None else cert.details)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    g = _read_one(args)
    if args.path:
        construction = construct_hamilton_path(g, *args.path)
    else:
        construction = construct_hamilton_cycle(g)
    _emit(args, construction.details)
    return EXIT_OK


def cmd_rewrite(args: argparse.Namespace) -> int:
    g = _read_one(args)
    p = OrientedPath(g, args.path, args.virtual)
    if args.split:
        split = compute_neighbor_split(g, p, args.split)
        problems = check_split_lemmas(g, split)
        _emit(args, {"split": split.details, "lemma_violations": problems})
        return EXIT_VIOLATION if problems else EXIT_OK
    if not args.rule:
        raise UsageError("rewrite needs --rule or --split")
    out = apply_rewrite(g, p, RewriteRule(args.rule.upper(), args.witness, args.reverse))
    _emit(args, out.details)
    return EXIT_OK


def cmd_extremal(args: argparse.Namespace) -> int:
    spec = FamilySpec(args.family, args.param)
    if not args.verify:
        print(emit_graph6(build_family(spec)))
        return EXIT_OK
    report = verify_family_claims(spec)
    _emit(args, report.details)
    return EXIT_OK if report.holds else EXIT_VIOLATION


def _run_config(args: argparse.Namespace) -> RunConfig:
    options = {
        "checks": tuple(args.check or ALL_CONDITIONS),
        "workers": args.workers,
        "all_conclusions": args.all_conclusions,
        "construct": args.construct,
        "lemmas": args.lemmas,
        "progress": args.progress,
    }
    if args.all_labeled is not None:
        return RunConfig(ALL_LABELED, n=args.all_labeled, **options)
    if args.random is not None:
        count, n, p, seed = args.random
        try:
            sampling = {"count": int(count), "n": int(n), "edge_prob": float(p), "seed": int(seed)}
        except ValueError:
            raise UsageError(f"--random takes COUNT N P SEED as numbers, got {' '.join(args.random)}") from None
        return RunConfig(RANDOM, **sampling, **options)
    return RunConfig(GRAPH6_FILE, path=Path(args.graphs), fmt=args.format, **options)


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _run_config(args)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as stream:
            summary = verify_corpus(cfg, on_record=lambda record: write_record(record, stream))
            write_summary(summary, stream)
    else:
        summary = verify_corpus(cfg, on_record=lambda record: write_record(record, sys.stdout))
        write_summary(summary, sys.stdout)
    return EXIT_OK if summary.holds else EXIT_VIOLATION


def cmd_compare(args: argparse.Namespace) -> int:
    summary = compare_conditions(_run_config(args))
    _emit(args, {"total": summary.total, "implications": [count.details for count in summary.implications]})
    return EXIT_OK if summary.holds else EXIT_VIOLATION


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", nargs="?", default="-", help="graph file, '-' for standard input (default)")


def _add_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--all-labeled", type=int, metavar="N", help="every labelled graph on N <= 7 vertices")
    source.add_argument("--random", nargs=4, metavar=("COUNT", "N", "P", "SEED"), help="seeded G(N, P) samples")
    source.add_argument("--graphs", metavar="FILE", help="graph6 or edge-list corpus")
    parser.add_argument("--check", action="append", type=_condition, metavar="ID",
                        help="condition to record (repeatable; default all)")
    parser.add_argument("--workers", type=int, help="worker processes (default $FAN_TILDE_WORKERS or CPU count)")
    parser.add_argument("--all-conclusions", action="store_true",
                        help="decide hamiltonian-connectedness for every graph")
    parser.add_argument("--construct", action="store_true", help="run the constructive drivers")
    parser.add_argument("--lemmas", action="store_true", help="run the executable lemmas")
    parser.add_argument("--progress", action="store_true", help="progress bar on stderr")


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PROG, description="Bipartite independence number and Fan-type conditions")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log INFO (-v) or DEBUG (-vv) to stderr")
    parser.add_argument("--color", action="store_true", help="highlight JSON on a terminal")
    parser.add_argument("--format", choices=FORMATS, default="auto", help="input format (default auto)")
    commands = parser.add_subparsers(dest="command", required=True)

    alpha = commands.add_parser("alpha", help="bipartite independence number with its witnesses")
    _add_input(alpha)
    alpha.set_defaults(handler=cmd_alpha)

    check = commands.add_parser("check", help="evaluate degree conditions")
    check.add_argument("--condition", action="append", type=_condition, metavar="ID",
                       help=f"condition id (repeatable; default all): {', '.join(ALL_CONDITIONS)}")
    _add_input(check)
    check.set_defaults(handler=cmd_check)

    hamilton = commands.add_parser("hamilton", help="exact Hamilton cycle or path")
    mode = hamilton.add_mutually_exclusive_group()
    mode.add_argument("--path", nargs=2, type=int, metavar=("X", "Y"), help="Hamilton path from X to Y")
    mode.add_argument("--connected", action="store_true", help="check every pair")
    _add_input(hamilton)
    hamilton.set_defaults(handler=cmd_hamilton)

    construct = commands.add_parser("construct", help="certificate built from rewrite rules, with its trace")
    construct.add_argument("--path", nargs=2, type=int, metavar=("X", "Y"), help="Hamilton path from X to Y")
    _add_input(construct)
    construct.set_defaults(handler=cmd_construct)

    rewrite = commands.add_parser("rewrite", help="apply one rule, or split a path and check the lemmas")
    rewrite.add_argument("--path", type=_positions, required=True, help="vertices v_1..v_m, comma separated")
    rewrite.add_argument("--virtual", type=int, help="position k of a virtual pair v_k v_(k+1)")
    rewrite.add_argument("--rule", help="rule id, e.g. RT-A or HP-3")
    rewrite.add_argument("--witness", type=_positions, default=(), help="witness indices, comma separated")
    rewrite.add_argument("--reverse", action="store_true", help="apply the rule to the reversed path")
    rewrite.add_argument("--split", choices=MODES, help="print the neighbour split and check the lemmas")
    _add_input(rewrite)
    rewrite.set_defaults(handler=cmd_rewrite)

    extremal = commands.add_parser("extremal", help="extremal family members")
    extremal.add_argument("--family", choices=FAMILIES, type=str.lower, required=True)
    extremal.add_argument("--param", type=int, required=True, help="n for g1 and g2, a for g3")
    extremal.add_argument("--verify", action="store_true", help="check the family's claims")
    extremal.set_defaults(handler=cmd_extremal)

    verify = commands.add_parser("verify", help="check both theorems over a corpus (JSON lines)")
    _add_source(verify)
    verify.add_argument("-o", "--output", help="write the report here instead of standard output")
    verify.set_defaults(handler=cmd_verify)

    compare = commands.add_parser("compare", help="implications between conditions over a corpus")
    _add_source(compare)
    compare.set_defaults(handler=cmd_compare)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = create_parser()
    args = parser.parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    _log.debug("running %s", args.command)
    try:
        return args.handler(args)
    except RewriteError as exc:
        print(f"{PROG}: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (FanTildeError, UsageError, OSError) as exc:
        print(f"{PROG}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
