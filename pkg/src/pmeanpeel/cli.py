"""Command-line interface: single peel runs, benchmark grids, oracle checks,
and dataset statistics.

Inputs are edge-list files ("u v" per line, '#'/'%' comments, .gz ok).  In
place of a path, a synthetic-graph spec may be given, seeded by --seed:

    er:N:PROB     Erdos-Renyi G(n, p)
    gnm:N:M       ~M uniformly random distinct edges
    ba:N:K        preferential attachment, K links per new node
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import PmeanPeelError
from .graph import Graph, load_edge_list
from .oracle import MAX_ORACLE_NODES, exact_optimum
from .peel import ALGORITHMS, PeelConfig, maxcore, run
from .report import (GridRow, report, run_grid, write_csv, write_jsonl)
from .synth import barabasi_albert, erdos_renyi, random_gnm

DEFAULT_P_GRID = (0.5, 1.0, 1.05, 1.5, 2.0)


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.6g}"
    return str(x)


def _load_input(spec: str, seed: int) -> Graph:
    kind, _, rest = spec.partition(":")
    if rest and kind in ("er", "gnm", "ba"):
        parts = rest.split(":")
        if len(parts) != 2:
            raise PmeanPeelError(f"synthetic spec {spec!r} needs exactly two parameters")
        if kind == "er":
            return erdos_renyi(int(parts[0]), float(parts[1]), seed)
        if kind == "gnm":
            return random_gnm(int(parts[0]), int(parts[1]), seed)
        return barabasi_albert(int(parts[0]), int(parts[1]), seed)
    path = Path(spec)
    if not path.exists():
        raise PmeanPeelError(f"input file not found: {spec}")
    return load_edge_list(path)


def _sorted_ids(graph: Graph, members) -> list:
    ids = [graph.original_ids[v] for v in members]
    try:
        return sorted(ids, key=lambda t: int(t))
    except (TypeError, ValueError):
        return sorted(ids, key=str)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_peel(args) -> int:
    graph = _load_input(args.input, args.seed)
    config = PeelConfig(algorithm=args.alg, p=args.p,
                        removal_fraction=args.c,
                        allow_small_p=args.override_p_range)
    config.validate()
    import time
    trace = None
    best = float("inf")
    for _ in range(max(1, args.reps)):
        t0 = time.perf_counter()
        trace = run(graph, config)
        best = min(best, time.perf_counter() - t0)
    metric_p = 1.0 if args.alg == "maxcore" else args.p
    metrics = report(graph, trace.best_set, metric_p, runtime_seconds=best)
    row = GridRow(dataset=Path(args.input).stem, algorithm=args.alg,
                  p=None if args.alg == "maxcore" else args.p,
                  removal_fraction=args.c if args.alg == "genpeelpp" else None,
                  result=metrics)
    lines = []
    if args.format == "json":
        import json
        lines.append(json.dumps(row.as_dict()))
    elif args.format == "csv":
        from io import StringIO
        buf = StringIO()
        write_csv([row], buf)
        lines.append(buf.getvalue().rstrip("\n"))
    else:
        record = row.as_dict()
        for key in ("dataset", "algorithm", "p", "c"):
            if record[key] is not None:
                lines.append(f"{key}: {_fmt(record[key])}")
        lines.append(f"size: {metrics.set_size}")
        lines.append(f"edge_density: {_fmt(metrics.edge_density)}")
        lines.append(f"avg_degree: {_fmt(metrics.avg_degree)}")
        lines.append(f"avg_sq_degree: {_fmt(metrics.avg_sq_degree)}")
        lines.append(f"max_degree: {metrics.max_degree}")
        lines.append(f"fp: {_fmt(metrics.fp_value)}")
        lines.append(f"mp: {_fmt(metrics.mp_value)}")
        lines.append(f"rounds: {trace.rounds}")
        lines.append(f"runtime_seconds: {_fmt(metrics.runtime_seconds)}")
    if args.emit_nodes:
        lines.append("nodes: " + " ".join(str(i) for i in
                                          _sorted_ids(graph, trace.best_set)))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_bench(args) -> int:
    graph = _load_input(args.input, args.seed)
    p_values = [float(tok) for tok in args.p.split(",")] if args.p else list(DEFAULT_P_GRID)
    if not p_values:
        raise PmeanPeelError("bench needs a nonempty p list")
    algorithms = args.algs.split(",") if args.algs else ["genpeelpp"]
    rows = run_grid(graph, algorithms, p_values, removal_fraction=args.c,
                    repetitions=args.reps, dataset=Path(args.input).stem,
                    allow_small_p=args.override_p_range)
    writer = write_csv if args.format == "csv" else write_jsonl
    if args.out:
        writer(rows, args.out)
        header = ("algorithm", "p", "size", "edge_dens", "avg_deg",
                  "avg_sq_deg", "max_deg", "runtime_s")
        print(("{:<10} {:>5} {:>8} {:>10} {:>10} {:>12} {:>8} {:>10}").format(*header))
        for row in rows:
            r = row.result
            if r is None:
                print(f"{row.algorithm:<10} {_fmt(row.p) if row.p is not None else '-':>5} "
                      f"error: {row.error}")
                continue
            print("{:<10} {:>5} {:>8} {:>10} {:>10} {:>12} {:>8} {:>10}".format(
                row.algorithm, _fmt(row.p) if row.p is not None else "-",
                r.set_size, _fmt(r.edge_density), _fmt(r.avg_degree),
                _fmt(r.avg_sq_degree), r.max_degree, _fmt(r.runtime_seconds)))
    else:
        writer(rows, sys.stdout)
    return 0


def cmd_oracle(args) -> int:
    graph = _load_input(args.input, args.seed)
    opt = exact_optimum(graph, args.p, max_nodes=args.max_oracle_n)
    lines = [
        f"n: {graph.node_count}",
        f"p: {_fmt(args.p)}",
        f"optimum_fp: {_fmt(opt.fp_value)}",
        f"optimum_mp: {_fmt(opt.mp_value)}",
        f"optimum_size: {opt.size}",
        "optimum_nodes: " + " ".join(str(i) for i in _sorted_ids(graph, opt.best_set)),
    ]
    if args.algs:
        algorithms = args.algs.split(",")
    elif args.p >= 1.0 or args.override_p_range:
        algorithms = ["simpeel", "genpeel", "genpeelpp"]
    else:
        algorithms = ["simpeel"]
    for algorithm in algorithms:
        config = PeelConfig(algorithm=algorithm, p=args.p, removal_fraction=args.c,
                            allow_small_p=args.override_p_range)
        config.validate()
        trace = run(graph, config)
        fp = trace.best_value
        mp = fp ** (1.0 / args.p) if fp > 0.0 else 0.0
        ratio = mp / opt.mp_value if opt.mp_value > 0.0 else 1.0
        lines.append(f"{algorithm}_ratio: {_fmt(ratio)}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_stats(args) -> int:
    graph = _load_input(args.input, args.seed)
    trace = maxcore(graph)
    degeneracy = int(trace.prefix_value.max())
    lines = [
        f"nodes: {graph.node_count}",
        f"edges: {graph.edge_count}",
        f"max_degree: {graph.max_degree}",
        f"degeneracy: {degeneracy}",
        f"connected_components: {graph.connected_component_count()}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pmeanpeel",
        description="Peeling algorithms for p-mean densest subgraph discovery.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, with_alg=True):
        sp.add_argument("--in", dest="input", required=True,
                        help="edge-list path or synthetic spec (er:/gnm:/ba:)")
        sp.add_argument("--out", default=None, help="output file (default: stdout)")
        sp.add_argument("--c", type=float, default=0.5,
                        help="fraction of surviving nodes removed per round "
                             "(genpeelpp; default 0.5)")
        sp.add_argument("--seed", type=int, default=0,
                        help="seed for synthetic-graph specs (default 0)")
        sp.add_argument("--override-p-range", action="store_true",
                        help="allow genpeel/genpeelpp with 0 < p < 1, "
                             "outside their guarantee")

    sp = sub.add_parser("peel", help="run one peeler and report its best subgraph")
    common(sp)
    sp.add_argument("--alg", default="genpeelpp", choices=ALGORITHMS,
                    help="peeling algorithm (default genpeelpp)")
    sp.add_argument("--p", type=float, default=1.0,
                    help="degree exponent (default 1.0; ignored by maxcore)")
    sp.add_argument("--format", default="text", choices=("text", "json", "csv"),
                    help="report format (default text)")
    sp.add_argument("--emit-nodes", action="store_true",
                    help="append the selected nodes' original ids, sorted")
    sp.add_argument("--reps", type=int, default=3,
                    help="timing repetitions; runtime is the minimum (default 3)")
    sp.set_defaults(func=cmd_peel)

    sp = sub.add_parser("bench", help="benchmark grid over algorithms and exponents")
    common(sp)
    sp.add_argument("--algs", default=None,
                    help="comma list of algorithms (default genpeelpp)")
    sp.add_argument("--p", default=None,
                    help="comma list of exponents (default "
                         + ",".join(str(x) for x in DEFAULT_P_GRID) + ")")
    sp.add_argument("--format", default="jsonl", choices=("jsonl", "csv"),
                    help="report file format (default jsonl)")
    sp.add_argument("--reps", type=int, default=3,
                    help="timing repetitions per cell (default 3)")
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("oracle", help="exact optimum and per-peeler quality ratios")
    common(sp)
    sp.add_argument("--p", type=float, default=1.0, help="degree exponent (default 1.0)")
    sp.add_argument("--algs", default=None,
                    help="comma list of peelers to compare (default: all valid at p)")
    sp.add_argument("--max-oracle-n", type=int, default=MAX_ORACLE_NODES,
                    help=f"enumeration size cap (default {MAX_ORACLE_NODES})")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("stats", help="basic statistics of an edge-list graph")
    common(sp)
    sp.set_defaults(func=cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PmeanPeelError as exc:
        print(f"pmeanpeel: error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"pmeanpeel: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
