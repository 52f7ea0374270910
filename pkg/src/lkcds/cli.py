"""Command line front end.

Exit codes: 0 success, 1 verification or lift failure, 2 bad input,
3 search budget exhausted, 10 instance rejected by the kernelizer.
Primary payloads go to stdout; progress and summaries go to stderr so
output files stay byte-clean.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import closure as _closure
from .cores import CoreOutcome, Rejection, connected_core, find_core
from .graphs import Graph, GraphFormatError, parse_graph, serialize_graph
from .hardness import hardness_instance
from .kernel import (
    KernelInstance,
    kernelize,
    lift,
    params_from,
    parse_kernel,
    serialize_kernel,
)
from .oracles import (
    BUDGET_EXHAUSTED,
    exact_acds,
    exact_cds,
    parse_setcover,
)
from .orders import heuristic_order, wreach_report
from .projections import classify

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_REJECTED = 10

CORE_MODES = ("exact", "heuristic", "trivial")


class _CliError(Exception):
    """Input-level failure; carries the exit code."""

    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}") from exc


def _load_graph(path: str, fmt: Optional[str]) -> Graph:
    text = _read_text(path)
    try:
        return parse_graph(text, fmt=fmt)
    except GraphFormatError as exc:
        raise _CliError(f"{path}: {exc}") from exc


def _parse_ids(raw: str) -> List[int]:
    parts = raw.replace(",", " ").split()
    try:
        return [int(p) for p in parts]
    except ValueError as exc:
        raise _CliError(f"bad vertex list {raw!r}") from exc


def _emit(payload: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(payload)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(payload)


def _note(message: str) -> None:
    print(message, file=sys.stderr)


def _budget_default() -> Optional[int]:
    raw = os.environ.get("LKCDS_BUDGET_NODES")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise _CliError(f"LKCDS_BUDGET_NODES must be an integer, got {raw!r}")


def _alpha_of(args: argparse.Namespace) -> Fraction:
    if args.alpha is not None and args.epsilon is not None:
        raise _CliError("give either --alpha or --epsilon, not both")
    if args.alpha is not None:
        return Fraction(args.alpha)
    if args.epsilon is not None:
        return 1 + Fraction(args.epsilon)
    raise _CliError("one of --alpha or --epsilon is required")


def _params(args: argparse.Namespace):
    try:
        if args.alpha is not None and args.epsilon is not None:
            raise _CliError("give either --alpha or --epsilon, not both")
        if args.alpha is not None:
            return params_from(args.k, args.r, alpha=Fraction(args.alpha))
        if args.epsilon is not None:
            return params_from(args.k, args.r, epsilon=Fraction(args.epsilon))
    except (ValueError, ZeroDivisionError) as exc:
        raise _CliError(str(exc)) from exc
    raise _CliError("one of --alpha or --epsilon is required")


def _run_kernelize(args: argparse.Namespace):
    g = _load_graph(args.input, args.format)
    params = _params(args)
    try:
        outcome = kernelize(g, params, core_mode=args.core_mode)
    except ValueError as exc:
        raise _CliError(str(exc)) from exc
    if isinstance(outcome, Rejection):
        raise _CliError(f"rejected: {outcome.reason}", EXIT_REJECTED)
    return g, outcome


def cmd_kernelize(args: argparse.Namespace) -> int:
    g, inst = _run_kernelize(args)
    payload = serialize_kernel(inst)
    _emit(payload, args.out)
    _note(
        f"kernel: {inst.graph.n} vertices, {inst.graph.m} edges, "
        f"|Z|={len(inst.annotated)} (host {g.n} vertices)"
    )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g, inst = _run_kernelize(args)
    if inst.closure is None:
        print("trivial kernel; structural checks vacuous: pass")
        return EXIT_OK
    report = _closure.verify_closure(g, inst.closure)
    for item in (1, 2, 3):
        bad = [p for p in report.problems if p.startswith(f"item{item}")]
        print(f"item{item}: {'pass' if not bad else 'FAIL'}")
        for p in bad:
            _note(f"  {p}")
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args.input, args.format)
    budget = args.budget_nodes if args.budget_nodes is not None else _budget_default()
    if args.z is not None:
        core = _parse_ids(args.z)
        try:
            res = exact_acds(g, core, args.r, args.k, budget_nodes=budget)
        except ValueError as exc:
            raise _CliError(str(exc)) from exc
    else:
        res = exact_cds(g, args.r, args.k, budget_nodes=budget)
    if res.status == BUDGET_EXHAUSTED:
        _note("search budget exhausted before an answer was determined")
        return EXIT_BUDGET
    if res.found:
        print("found", " ".join(str(v) for v in res.solution))
    else:
        print(res.status)
    return EXIT_OK

def cmd_lift(args: argparse.Namespace) -> int:
    host = _load_graph(args.input, args.format)
    try:
        inst = parse_kernel(_read_text(args.kernel))
    except GraphFormatError as exc:
        raise _CliError(f"{args.kernel}: {exc}") from exc
    sol = _parse_ids(args.solution) if args.solution else []
    try:
        res = lift(host, inst, sol)
    except ValueError as exc:
        raise _CliError(str(exc)) from exc
    print("lifted", " ".join(str(v) for v in res.solution))
    _note(
        f"value={res.value} dominates={res.dominates_host} connected={res.connected}"
    )
    if res.value <= inst.params.k and not (res.dominates_host and res.connected):
        return EXIT_VERIFY
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    sc_text = _read_text(args.input)
    try:
        sc = parse_setcover(sc_text)
    except GraphFormatError as exc:
        raise _CliError(f"{args.input}: {exc}") from exc
    hi = hardness_instance(sc, args.r)
    _emit(serialize_graph(hi.graph, fmt=args.format or "edgelist"), args.out)
    _note(
        f"hardness instance: n={hi.graph.n} k_out={hi.k_out} "
        f"offset={hi.offset} regime={hi.regime}"
    )
    return EXIT_OK


def _core_outcome(args: argparse.Namespace) -> CoreOutcome:
    g = _load_graph(args.input, args.format)
    outcome = find_core(g, args.k, args.r, mode=args.core_mode)
    if isinstance(outcome, Rejection):
        raise _CliError(f"rejected: {outcome.reason}", EXIT_REJECTED)
    stitched = connected_core(g, outcome)
    if isinstance(stitched, Rejection):
        raise _CliError(f"rejected: {stitched.reason}", EXIT_REJECTED)
    return stitched


def cmd_core(args: argparse.Namespace) -> int:
    core = _core_outcome(args)
    print(" ".join(str(v) for v in core.vertices))
    _note(f"|Z|={len(core.vertices)} certified={core.certified}")
    return EXIT_OK


def cmd_profile_stats(args: argparse.Namespace) -> int:
    g = _load_graph(args.input, args.format)
    if args.z is not None:
        blockers = _parse_ids(args.z)
    else:
        if args.k is None:
            raise _CliError("profile-stats needs --z or --k")
        ns = argparse.Namespace(**vars(args))
        blockers = list(_core_outcome(ns).vertices)
    try:
        cls = classify(g, blockers, args.r)
    except ValueError as exc:
        raise _CliError(str(exc)) from exc
    print(f"blockers {len(blockers)}")
    print(f"classes {len(cls)}")
    for i, c in enumerate(cls.classes):
        print(f"class {i} size {len(c.members)} entries {len(c.profile.entries)}")
    return EXIT_OK


def cmd_wcol_report(args: argparse.Namespace) -> int:
    g = _load_graph(args.input, args.format)
    try:
        og = heuristic_order(g, kind=args.order, seed=args.seed)
    except ValueError as exc:
        raise _CliError(str(exc)) from exc
    rep = wreach_report(og, args.s)
    print(f"wcol {args.s} {rep.value}")
    print(f"witness {rep.witness}")
    _note(f"order strategy {args.order}")
    return EXIT_OK


def cmd_closure_stats(args: argparse.Namespace) -> int:
    _, inst = _run_kernelize(args)
    if inst.closure is None:
        print("trivial kernel; no closure built")
        return EXIT_OK
    for key in sorted(inst.closure.stats):
        print(f"{key} {inst.closure.stats[key]}")
    return EXIT_OK


def _add_graph_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="input file")
    p.add_argument(
        "--format", choices=("edgelist", "dimacs"), default=None,
        help="graph format; default sniffs the header",
    )


def _add_param_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int, required=True, help="solution budget")
    p.add_argument("--r", type=int, required=True, help="domination radius")
    p.add_argument("--alpha", help="approximation factor (fraction, e.g. 7 or 7/2)")
    p.add_argument("--epsilon", help="approximation slack; alpha = 1 + epsilon")
    p.add_argument(
        "--core-mode", choices=CORE_MODES, default="heuristic",
        help="how the domination core is computed",
    )


def _add_misc_args(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--budget-nodes", type=int, default=None,
        help="search node budget; env LKCDS_BUDGET_NODES sets the default",
    )
    p.add_argument("--jobs", type=int, default=1, help="worker count (currently serial)")
    p.add_argument("--seed", type=int, default=0, help="random seed where applicable")
    p.add_argument("--out", default=None, help="write payload here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lkcds",
        description="approximate kernelization for connected distance-r domination",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kernelize", help="reduce an instance and print the kernel")
    _add_graph_arg(p)
    _add_param_args(p)
    _add_misc_args(p)
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("verify", help="run structural checks on the produced kernel")
    _add_graph_arg(p)
    _add_param_args(p)
    _add_misc_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="exact connected domination search")
    _add_graph_arg(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--z", default=None, help="annotated target vertices")
    _add_misc_args(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("lift", help="translate a kernel solution back to the host")
    _add_graph_arg(p)
    p.add_argument("--kernel", required=True, help="kernel file")
    p.add_argument("--solution", default="", help="kernel vertex ids")
    _add_misc_args(p)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("gen", help="build a hardness instance from a set cover file")
    p.add_argument("--input", required=True, help="set cover file")
    p.add_argument("--r", type=int, required=True)
    p.add_argument(
        "--format", choices=("edgelist", "dimacs"), default=None,
        help="output graph format",
    )
    _add_misc_args(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("core", help="compute a stitched domination core")
    _add_graph_arg(p)
    _add_param_args(p)
    _add_misc_args(p)
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("profile-stats", help="projection class statistics")
    _add_graph_arg(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--z", default=None, help="blocker vertices; omit to use a core")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--alpha", default=None)
    p.add_argument("--epsilon", default=None)
    p.add_argument("--core-mode", choices=CORE_MODES, default="heuristic")
    _add_misc_args(p)
    p.set_defaults(func=cmd_profile_stats)

    p = sub.add_parser("wcol-report", help="weak coloring number of an order")
    _add_graph_arg(p)
    p.add_argument("--s", type=int, required=True, help="reach radius")
    p.add_argument(
        "--order", choices=("degeneracy", "bfs", "random"), default="degeneracy"
    )
    _add_misc_args(p)
    p.set_defaults(func=cmd_wcol_report)

    p = sub.add_parser("closure-stats", help="size accounting for the closure step")
    _add_graph_arg(p)
    _add_param_args(p)
    _add_misc_args(p)
    p.set_defaults(func=cmd_closure_stats)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs is not None and args.jobs < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
