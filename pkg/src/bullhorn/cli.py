"""Command-line front end: one graph per input line in, one JSON record per line out.

Exit status is 0 when every record is ``ok``, 2 when some input fell outside
the class a subcommand asks about (and nothing failed), 1 on any error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Callable, Iterator, Sequence

from . import __version__
from .coloring import chi_via_structure, chromatic_number, clique_number
from .critical import enumerate_critical, is_k_critical
from .divisibility import DivisibilityDomainError, Variant, divisible_partition, is_perfectly_divisible
from .errors import BullhornError, NotInClassError
from .graph import Graph, induced_subgraph
from .graph_io import decode_dimacs, decode_graph6, decode_edge_list, encode_dimacs, encode_edge_list, encode_graph6
from .modular import clique_skeleton, maximal_modules
from .patterns import PatternKind, find_hole, find_induced
from .structure import classify_bull_house_free, classify_bull_p5_free

OK = "ok"
NOT_IN_CLASS = "not_in_class"
ERROR = "error"
EXIT_CODES = {OK: 0, NOT_IN_CLASS: 2, ERROR: 1}


def dumps(doc: dict) -> str:
    # sorted keys and fixed separators give byte-identical output across runs
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


# --- input ----------------------------------------------------------------


def _random_graphs(spec: str, seed: int | None) -> Iterator[tuple[int, str]]:
    try:
        n_s, p_s, count_s = spec.split(",")
        n, p, count = int(n_s), float(p_s), int(count_s)
    except ValueError:
        raise SystemExit(f"--random expects N,P,COUNT, got {spec!r}") from None
    rng = random.Random(seed)
    for i in range(count):
        edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < p]
        yield i + 1, encode_graph6(Graph.from_edges(n, edges))


def _records(args) -> Iterator[tuple[int, str]]:
    """(line number, raw text) pairs for every input graph."""
    if args.random:
        yield from _random_graphs(args.random, args.seed)
        return
    if args.graph:
        for i, g6 in enumerate(args.graph, start=1):
            yield i, g6
        return
    if args.file and args.file != "-":
        with open(args.file, encoding="ascii", errors="surrogateescape") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    if args.format in ("dimacs", "edge-list"):
        # whole-document formats: one graph per input
        yield 1, text
        return
    for i, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            yield i, line.strip()


def _decode(args, raw: str) -> Graph:
    if args.format == "dimacs":
        return decode_dimacs(raw)
    if args.format == "edge-list":
        return decode_edge_list(raw)
    return decode_graph6(raw)


# --- per-graph handlers -----------------------------------------------------
# each returns (status, payload)


def _convert(args, g: Graph):
    if args.to == "dimacs":
        return OK, {"dimacs": encode_dimacs(g)}
    if args.to == "edge-list":
        return OK, {"edge_list": encode_edge_list(g)}
    return OK, {"graph6": encode_graph6(g)}


def _detect(args, g: Graph):
    names = args.pattern or ["bull", "house", "P5"]
    found = {}
    for name in names:
        kind = PatternKind.parse(name)
        if kind is PatternKind.HOLE:
            emb = find_hole(g, args.min_len, odd_only=False)
        elif kind is PatternKind.ODD_HOLE:
            emb = find_hole(g, args.min_len, odd_only=True)
        else:
            emb = find_induced(g, kind)
        found[kind.value] = None if emb is None else list(emb.vertices)
    return OK, {"patterns": found, "free": all(v is None for v in found.values())}


def _classify(args, g: Graph):
    classify = classify_bull_house_free if args.cls == "bull-house" else classify_bull_p5_free
    cert = classify(g)
    status = OK if cert.in_class else NOT_IN_CLASS
    return status, {"class": args.cls, **cert.as_dict()}


def _modules(args, g: Graph):
    return OK, maximal_modules(g).as_dict()


def _skeleton(args, g: Graph):
    part = maximal_modules(g)
    h = clique_skeleton(g)
    sizes = [chromatic_number(induced_subgraph(g, b)).k for b in part.blocks]
    return OK, {
        "blocks": [list(b) for b in part.blocks],
        "clique_sizes": sizes,
        "quotient": encode_graph6(part.quotient),
        "clique_skeleton": encode_graph6(h),
    }


def _chi(args, g: Graph):
    if args.structural:
        try:
            col = chi_via_structure(g)
        except NotInClassError as exc:
            return NOT_IN_CLASS, {"witness": exc.witness.as_dict()}
    else:
        col = chromatic_number(g)
    return OK, {**col.as_dict(), "omega": clique_number(g).omega, "method": "structure" if args.structural else "exact"}


def _critical(args, g: Graph):
    return OK, is_k_critical(g, args.k).as_dict()


def _divisible(args, g: Graph):
    variant = Variant.parse(args.variant)
    verdict = is_perfectly_divisible(g, variant, budget=args.budget_n)
    try:
        wit = divisible_partition(g, variant)
        witness = None if wit is None else wit.as_dict()
    except DivisibilityDomainError:
        witness = None
    return OK, {
        "variant": variant.value,
        "perfectly_divisible": verdict.divisible,
        "failing_subgraph": None if verdict.failing_subgraph is None else list(verdict.failing_subgraph),
        "witness": witness,
    }


Handler = Callable[[argparse.Namespace, Graph], tuple]
HANDLERS: dict[str, Handler] = {
    "convert": _convert,
    "detect": _detect,
    "classify": _classify,
    "modules": _modules,
    "skeleton": _skeleton,
    "chi": _chi,
    "critical": _critical,
    "divisible": _divisible,
}


def _stream(args, out) -> str:
    """Run a per-graph subcommand over every input; return the worst status."""
    handler = HANDLERS[args.command]
    worst = OK
    for lineno, raw in _records(args):
        record: dict = {"line": lineno}
        try:
            g = _decode(args, raw)
            record["n"] = g.n
            status, payload = handler(args, g)
            record.update(payload)
        except (BullhornError, ValueError) as exc:
            status = ERROR
            record["error"] = str(exc)
            record["error_type"] = type(exc).__name__
        record["status"] = status
        out.write(dumps(record) + "\n")
        if EXIT_CODES[status] == 1 or (status == NOT_IN_CLASS and worst == OK):
            worst = status
    return worst


def _enumerate(args, out) -> str:
    kinds = [PatternKind.parse(s) for s in args.filter.split(",") if s.strip()]
    try:
        run = enumerate_critical(kinds, args.k, args.nmax, budget=args.budget_n)
    except (BullhornError, ValueError) as exc:
        out.write(dumps({"status": ERROR, "error": str(exc), "error_type": type(exc).__name__}) + "\n")
        return ERROR
    for g in run.found:
        out.write(encode_graph6(g) + "\n")
    summary = run.summary()
    if not args.timing:
        summary.pop("wall_time")
    out.write(dumps({"status": OK, "summary": summary}) + "\n")
    return OK


# --- argument parsing -------------------------------------------------------


def _input_options(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("input")
    src.add_argument("--graph", action="append", metavar="G6", help="graph6 record (repeatable)")
    src.add_argument("--file", metavar="PATH", help="input file ('-' for stdin)")
    src.add_argument("--format", choices=("graph6", "dimacs", "edge-list"), default="graph6")
    src.add_argument("--random", metavar="N,P,COUNT", help="generate COUNT G(N,P) graphs from --seed")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="seed for --random input generation")
    common.add_argument("--budget-n", type=int, default=None, help="override the desk vertex budget")

    parser = argparse.ArgumentParser(prog="bullhorn", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_, parents=[common])
        if name != "enumerate":
            _input_options(p)
        return p

    p = add("convert", "re-encode graphs")
    p.add_argument("--to", choices=("graph6", "dimacs", "edge-list"), default="graph6")

    p = add("detect", "find induced patterns")
    p.add_argument("--pattern", action="append", help="pattern name (repeatable; default bull, house, P5)")
    p.add_argument("--min-len", type=int, default=5, help="minimum hole length")

    p = add("classify", "structural certificate")
    p.add_argument("--class", dest="cls", choices=("bull-house", "p5-bull"), default="bull-house")

    add("modules", "maximal modules and quotient")
    add("skeleton", "clique skeleton")

    p = add("chi", "chromatic number with a colouring")
    p.add_argument("--structural", action="store_true", help="use the structure-guided algorithm")

    p = add("critical", "k-criticality report")
    p.add_argument("--k", type=int, required=True)

    p = add("enumerate", "census of k-critical graphs in a class")
    p.add_argument("--filter", default="p5,bull", help="comma-separated forbidden patterns")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--timing", action="store_true", help="include wall time in the summary")

    p = add("divisible", "perfect divisibility verdict")
    p.add_argument("--variant", choices=("standard", "paper"), default="standard")
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    """Parse ``argv``, execute, write JSON lines to ``out``; return the exit code."""
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # usage errors must not reuse exit code 2, which means not_in_class
        return 0 if exc.code in (0, None) else EXIT_CODES[ERROR]
    try:
        if args.command == "enumerate":
            status = _enumerate(args, out)
        else:
            status = _stream(args, out)
    except OSError as exc:
        out.write(dumps({"status": ERROR, "error": str(exc), "error_type": type(exc).__name__}) + "\n")
        status = ERROR
    return EXIT_CODES[status]


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
