"""Command-line entry point: ``coeven <command> [options]``.

Every command writes JSON lines (``gen`` writes graph6 lines). Exit status
is 0 when clean, 2 when an audit or survey found bound violations, and 1
when any input or argument error occurred; errors win over violations.
"""

from __future__ import annotations

import argparse
import itertools
import json
import logging
import sys
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, TextIO

from . import families
from .audit import OPERATIONS, RELATIONS, audit_graph, violations_of, witness_search
from .constructions import lift
from .corpus import emit_graph6, enumerate_labeled, gnp, read_graph6
from .domination import coeven_domination_number, domination_number
from .errors import CoevenError
from .graph import Graph
from .tables import MAX_TABLE_N, lower_bound_survey
from .transforms import apply

log = logging.getLogger("coeven")

EXIT_OK, EXIT_ERROR, EXIT_VIOLATIONS = 0, 1, 2
DEFAULT_CAP = 30
TRANSFORM_OPS = ("vertex-removal", "edge-removal", "vertex-contraction", "edge-contraction")


class Status:
    def __init__(self) -> None:
        self.errors = 0
        self.violations = 0

    @property
    def code(self) -> int:
        if self.errors:
            return EXIT_ERROR
        if self.violations:
            return EXIT_VIOLATIONS
        return EXIT_OK


def _edge_arg(text: str) -> tuple[int, int]:
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"edge must look like 'u,v', got {text!r}") from None
    return u, v


def _set_arg(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"vertex set must look like '0,2,5', got {text!r}") from None


def _emit(out: TextIO, obj: dict) -> None:
    out.write(json.dumps(obj, sort_keys=False) + "\n")


def _inputs(args) -> Iterator[tuple[int, Graph | CoevenError]]:
    if args.graph6:
        yield from read_graph6(args.graph6)
        return
    if args.input in (None, "-"):
        yield from read_graph6(sys.stdin)
        return
    with open(args.input, encoding="utf-8") as fh:
        yield from read_graph6(fh)


def _element(args):
    if (args.vertex is None) == (args.edge is None):
        raise CoevenError("give exactly one of --vertex or --edge")
    return args.vertex if args.vertex is not None else args.edge


def _map(fn: Callable, items: Iterable, jobs: int) -> Iterator:
    """Order-preserving map, in worker processes when ``jobs > 1``."""
    if jobs <= 1:
        yield from map(fn, items)
        return
    with Pool(jobs) as pool:
        yield from pool.imap(fn, items, chunksize=64)


# -- per-graph workers (module level so they pickle) -----------------------


def _solve_one(item):
    lineno, g, cap = item
    if isinstance(g, Exception):
        return {"line": lineno, "error": str(g)}
    if g.n > cap:
        return {"line": lineno, "error": f"n={g.n} exceeds solver cap {cap}"}
    dom = domination_number(g)
    coe = coeven_domination_number(g)
    return {
        "line": lineno, "graph6": emit_graph6(g), "n": g.n,
        "gamma": dom.value, "gamma_coe": coe.value, "certificate": list(coe.certificate),
        "dominating_set": list(dom.certificate), "explored": coe.explored,
    }


def _audit_one(item):
    lineno, g, cap, ops, only_violations = item
    if isinstance(g, Exception):
        return [{"line": lineno, "error": str(g)}], 0
    if g.n > cap:
        return [{"line": lineno, "error": f"n={g.n} exceeds solver cap {cap}"}], 0
    g6 = emit_graph6(g)
    checks = audit_graph(g, ops)
    bad = violations_of(g, checks)
    if only_violations:
        lines = [{"record": "violation", "line": lineno, **w.to_dict()} for w in bad]
    else:
        lines = [{"record": "check", "line": lineno, "graph6": g6, **c.to_dict()} for c in checks]
    return lines, len(bad)


# -- commands ---------------------------------------------------------------


def cmd_solve(args, out, status) -> None:
    items = ((lineno, g, args.cap) for lineno, g in _inputs(args))
    for rec in _map(_solve_one, items, args.jobs):
        if "error" in rec:
            status.errors += 1
            log.error("line %d: %s", rec["line"], rec["error"])
        _emit(out, rec)


def cmd_transform(args, out, status) -> None:
    element = _element(args)
    for lineno, g in _inputs(args):
        try:
            if isinstance(g, Exception):
                raise g
            res = apply(g, args.op, element)
        except CoevenError as exc:
            status.errors += 1
            log.error("line %d: %s", lineno, exc)
            _emit(out, {"line": lineno, "error": str(exc)})
            continue
        _emit(out, {
            "line": lineno, "graph6": emit_graph6(g), "operation": args.op,
            "element": list(element) if isinstance(element, tuple) else element,
            "result": emit_graph6(res.graph), "n": res.graph.n,
            "mapping": list(res.mapping), "merged_into": res.merged_into,
        })


def cmd_lift(args, out, status) -> None:
    element = _element(args)
    for lineno, g in _inputs(args):
        try:
            if isinstance(g, Exception):
                raise g
            if args.cert is not None:
                cert = args.cert
            elif args.direction == "forward":
                cert = list(coeven_domination_number(g).certificate)
            else:
                cert = list(coeven_domination_number(apply(g, args.op, element).graph).certificate)
            cand = lift(g, args.op, element, cert, args.direction)
        except CoevenError as exc:
            status.errors += 1
            log.error("line %d: %s", lineno, exc)
            _emit(out, {"line": lineno, "error": str(exc)})
            continue
        _emit(out, {
            "line": lineno, "graph6": emit_graph6(g),
            "element": list(element) if isinstance(element, tuple) else element,
            "input_certificate": sorted(cert), **cand.to_dict(),
        })


def cmd_audit(args, out, status) -> None:
    ops = args.op or None
    items = ((lineno, g, args.cap, ops, args.violations_only) for lineno, g in _inputs(args))
    for lines, nbad in _map(_audit_one, items, args.jobs):
        status.violations += nbad
        for rec in lines:
            if "error" in rec:
                status.errors += 1
                log.error("line %d: %s", rec["line"], rec["error"])
            _emit(out, rec)
    log.info("audit finished: %d violations, %d errors", status.violations, status.errors)


def _witness_source(args) -> Iterator[Graph]:
    if args.input is not None or args.graph6:
        for lineno, g in _inputs(args):
            if isinstance(g, Exception):
                raise CoevenError(f"line {lineno}: {g}")
            yield g
        return
    if args.n is not None:
        yield from itertools.chain.from_iterable(enumerate_labeled(k) for k in range(1, args.n + 1))
    names = families.NAMED if "all" in (args.family or []) else (args.family or [])
    for name in names:
        if name not in families.NAMED:
            raise CoevenError(f"unknown family {name!r}; choose from {sorted(families.NAMED)}")
        yield families.NAMED[name]()


def cmd_witness(args, out, status) -> None:
    if args.op is None or len(args.op) != 1 or args.relation is None:
        raise CoevenError("witness needs exactly one --op and a --relation")
    for rec in witness_search(_witness_source(args), args.op[0], args.relation, args.limit):
        _emit(out, rec.to_dict())


def cmd_gen(args, out, status) -> None:
    if args.n is None:
        raise CoevenError("gen needs --n")
    if args.model == "all":
        for g in enumerate_labeled(args.n):
            out.write(emit_graph6(g) + "\n")
        return
    seed = 0 if args.seed is None else args.seed
    count = args.limit or 1
    log.info("gnp n=%d p=%s seeds %d..%d", args.n, args.p, seed, seed + count - 1)
    for s in range(seed, seed + count):
        out.write(emit_graph6(gnp(args.n, args.p, s)) + "\n")


def cmd_survey(args, out, status) -> None:
    max_n = MAX_TABLE_N if args.n is None else args.n
    report = lower_bound_survey(max_n, min_degree=args.min_degree, examples=args.limit or 10)
    status.violations += sum(report.violations.values())
    _emit(out, report.to_dict())


COMMANDS = {
    "solve": cmd_solve,
    "transform": cmd_transform,
    "lift": cmd_lift,
    "audit": cmd_audit,
    "witness": cmd_witness,
    "gen": cmd_gen,
    "survey": cmd_survey,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coeven", description="Co-even domination solver and bound auditor.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("-i", "--input", help="graph6 file, one graph per line ('-' for stdin)")
    parser.add_argument("-g", "--graph6", action="append", help="inline graph6 string (repeatable)")
    parser.add_argument("-o", "--output", help="output file (default stdout)")
    parser.add_argument("--op", action="append", choices=OPERATIONS, help="operation tag (repeatable for audit)")
    parser.add_argument("--vertex", type=int)
    parser.add_argument("--edge", type=_edge_arg, help="edge as 'u,v'")
    parser.add_argument("--direction", choices=("forward", "backward"), default="forward")
    parser.add_argument("--cert", type=_set_arg, help="certificate for lift, e.g. '0,2'")
    parser.add_argument("--relation", choices=RELATIONS)
    parser.add_argument("--family", action="append", help="named graph family for witness ('all' for every one)")
    parser.add_argument("--limit", type=int)
    parser.add_argument("--n", type=int)
    parser.add_argument("--p", type=float, default=0.5)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--model", choices=("all", "gnp"), default="all")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest n the solver will accept")
    parser.add_argument("--min-degree", type=int, default=2, help="survey: ignore witnesses below this degree")
    parser.add_argument("--violations-only", action="store_true", help="audit: emit only violation records")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.op and args.command in ("transform", "lift"):
        if len(args.op) != 1 or args.op[0] not in TRANSFORM_OPS:
            log.error("%s needs exactly one of %s", args.command, ", ".join(TRANSFORM_OPS))
            return EXIT_ERROR
        args.op = args.op[0]
    elif args.command in ("transform", "lift"):
        log.error("%s needs --op", args.command)
        return EXIT_ERROR
    status = Status()
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        COMMANDS[args.command](args, out, status)
    except (CoevenError, OSError, ValueError) as exc:
        log.error("%s", exc)
        status.errors += 1
    finally:
        if out is not sys.stdout:
            out.close()
        else:
            out.flush()
    return status.code


if __name__ == "__main__":
    sys.exit(main())
