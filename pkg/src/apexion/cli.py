"""Command-line entry point: ``apexion <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import graph6
from .enumeration import BudgetError, EnumSpec, enumerate_all
from .graph import GraphError, SmallGraph
from .pipeline import CascadeConfig, CountTable, canonical_sorted, cascade, classify_graphs, k6_audit
from .transforms import dy_closure

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_INCOMPLETE = 3

log = logging.getLogger("apexion")


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("APEXION_THREADS")
    return int(env) if env else 1


def _read_input(args) -> list[SmallGraph]:
    if args.input in (None, "-"):
        return list(graph6.read_stream(sys.stdin.buffer, skip_errors=args.skip_errors))
    with open(args.input, "rb") as fh:
        return list(graph6.read_stream(fh, skip_errors=args.skip_errors))


def _output_dir(args) -> Path:
    out = Path(args.output or ".")
    out.mkdir(parents=True, exist_ok=True)
    return out


def _parse_caps(text: str | None) -> tuple[int, int | None]:
    if not text:
        return 31, None
    order, _, size = text.partition(",")
    return int(order), (int(size) if size else None)


def cmd_classify(args) -> int:
    graphs = _read_input(args)
    res = classify_graphs(graphs)
    out = _output_dir(args)
    graph6.write_file(out / "planar.g6", res.planar)
    graph6.write_file(out / "apex.g6", res.apex)
    graph6.write_file(out / "nonapex.g6", res.nonapex)
    with open(out / "verdicts.csv", "w", newline="\n") as fh:
        fh.write("index,graph6,kind,witness\n")
        for i, (g, (kind, wit)) in enumerate(zip(graphs, res.verdicts)):
            fh.write(f"{i},{graph6.encode(g).decode()},{kind.value},{'' if wit is None else wit}\n")
    for name, count in res.counts.items():
        print(f"{name}: {count}")
    return EXIT_OK


def cmd_cascade(args) -> int:
    cfg = CascadeConfig(
        min_degree=args.min_degree,
        connected_only=args.connected_only,
        max_depth=args.max_depth,
        workers=_threads(args),
        checkpoint_dir=args.checkpoint,
    )
    print(f"config: {cfg.echo()}")
    result = cascade(_read_input(args), cfg)
    out = _output_dir(args)
    graph6.write_file(out / "mmna.g6", result.mmna)
    table = result.table
    (out / "mmna_counts.csv").write_text(table.to_csv())
    sys.stdout.write(table.to_text())
    for k in sorted(result.stats):
        print(f"{k}: {result.stats[k]}")
    if not result.complete:
        graph6.write_file(out / "unexplored.g6", canonical_sorted(result.unexplored))
        print(f"incomplete: {len(result.unexplored)} graphs beyond max depth", file=sys.stderr)
        return EXIT_INCOMPLETE
    return EXIT_OK


def cmd_table(args) -> int:
    table = CountTable.from_graphs(_read_input(args))
    sys.stdout.write(table.to_text())
    if args.output:
        out = _output_dir(args)
        (out / "counts.csv").write_text(table.to_csv())
        (out / "counts.txt").write_text(table.to_text())
    return EXIT_OK


def cmd_closure(args) -> int:
    order_cap, size_cap = _parse_caps(args.caps)
    graphs = dy_closure(_read_input(args), order_cap, size_cap, size_preserving=not args.allow_collapse)
    if args.output:
        out = _output_dir(args)
        graph6.write_file(out / "closure.g6", graphs)
    else:
        graph6.write_stream(sys.stdout.buffer, graphs)
        sys.stdout.flush()
    print(f"closure: {len(graphs)} graphs", file=sys.stderr)
    return EXIT_OK


def cmd_k6_audit(args) -> int:
    if args.count < 1:
        print("k6-audit: --count must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    report = k6_audit(args.count, args.seed)
    sys.stdout.write(report.to_text())
    if args.output:
        out = _output_dir(args)
        graph6.write_file(out / "counterexamples.g6", report.counterexamples)
    return EXIT_OK if report.ok and report.control_k6_free else EXIT_ERROR


def cmd_encode(args) -> int:
    """JSON lines ``{"order": n, "edges": [[u, v], ...]}`` to graph6 lines."""
    src = sys.stdin if args.input in (None, "-") else open(args.input)
    with src:
        for lineno, line in enumerate(src, start=1):
            if not line.strip():
                continue
            obj = json.loads(line)
            try:
                g = SmallGraph.from_edges(obj["order"], [tuple(e) for e in obj["edges"]])
            except GraphError as exc:
                print(f"line {lineno}: {exc}", file=sys.stderr)
                return EXIT_ERROR
            sys.stdout.write(graph6.encode(g).decode() + "\n")
    return EXIT_OK


def cmd_decode(args) -> int:
    for g in _read_input(args):
        sys.stdout.write(json.dumps({"order": g.order, "edges": [list(e) for e in g.edges()]}) + "\n")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    n = args.order
    min_size = args.min_size if args.min_size is not None else 0
    spec = EnumSpec(n, min_size, args.max_size, args.min_degree, args.connected_only)
    graphs = enumerate_all(spec)
    if args.output:
        out = _output_dir(args)
        count = graph6.write_file(out / f"graphs_n{n}.g6", graphs)
    else:
        count = graph6.write_stream(sys.stdout.buffer, graphs)
        sys.stdout.flush()
    print(f"enumerated: {count}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="apexion", description="Apex / MMNA graph workbench")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def io_args(sp, output_help="output directory"):
        sp.add_argument("--input", help="graph6 input file (default stdin)")
        sp.add_argument("--output", help=output_help)
        sp.add_argument("--skip-errors", action="store_true", help="log and skip malformed lines")

    sp = sub.add_parser("classify", help="split graphs into planar / apex / non-apex")
    io_args(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("cascade", help="edge-deletion cascade collecting MMNA graphs")
    io_args(sp)
    sp.add_argument("--min-degree", type=int, default=3)
    sp.add_argument("--connected-only", action="store_true")
    sp.add_argument("--max-depth", type=int)
    sp.add_argument("--threads", type=int)
    sp.add_argument("--checkpoint", help="directory for per-level resume state")
    sp.set_defaults(func=cmd_cascade)

    sp = sub.add_parser("table", help="count graphs by order and size")
    io_args(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("closure", help="delta-wye / wye-delta closure")
    io_args(sp, "output directory (default: graph6 on stdout)")
    sp.add_argument("--caps", help="ORDER,SIZE caps")
    sp.add_argument("--allow-collapse", action="store_true", help="also keep wye-delta moves that lose edges")
    sp.set_defaults(func=cmd_closure)

    sp = sub.add_parser("k6-audit", help="sample 6-regular order-13 graphs and look for K6 minors")
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_k6_audit)

    sp = sub.add_parser("encode", help="JSON edge lists to graph6")
    sp.add_argument("--input")
    sp.set_defaults(func=cmd_encode)

    sp = sub.add_parser("decode", help="graph6 to JSON edge lists")
    io_args(sp)
    sp.set_defaults(func=cmd_decode)

    sp = sub.add_parser("enumerate", help="all graphs of one order up to isomorphism")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--min-size", type=int)
    sp.add_argument("--max-size", type=int)
    sp.add_argument("--min-degree", type=int, default=0)
    sp.add_argument("--connected-only", action="store_true")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_enumerate)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except graph6.Graph6Error as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
