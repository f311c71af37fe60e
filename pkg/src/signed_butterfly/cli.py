"""Command-line interface: ``sbutterfly <subcommand> ...``.

Exit codes: 0 success, 2 usage or parse error, 3 size guard tripped,
4 unknown vertex, 5 algorithms disagree.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import statistics
import sys
from pathlib import Path

from . import analytics, approx, exact, ingest
from .errors import (ButterflyError, IdenticalVerticesError, SamePartitionRequiredError,
                     TooLargeError, UnknownVertexError)
from .graph import Partition
from .parallel import THREADS_ENV, ParallelConfig, par_bb_bucket

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_UNKNOWN = 4
EXIT_DISAGREE = 5

ALGOS = ("brute", "base", "bucket", "parallel")
BENCH_HEADER = ["algo", "dataset", "workers", "repeat", "balanced", "unbalanced", "total",
                "wall_time_ms"]


class CliError(Exception):
    def __init__(self, message, code=EXIT_USAGE):
        super().__init__(message)
        self.code = code


def load_dataset(args):
    """Read ``args.input``: a file path, or ``random:L:R:p:q:seed`` / ``skewed:L:R:d:q:seed``."""
    src = args.input
    kind = src.split(":", 1)[0]
    if kind in ("random", "skewed") and not Path(src).exists():
        parts = src.split(":")
        if len(parts) != 6:
            raise CliError(f"synthetic spec needs 6 fields: {src!r}")
        try:
            L, R, seed = int(parts[1]), int(parts[2]), int(parts[5])
            p, q = float(parts[3]), float(parts[4])
            if kind == "skewed":
                return ingest.generate_skewed_bipartite(L, R, p, q, seed)
            return ingest.generate_random_bipartite(ingest.SyntheticSpec(L, R, p, q, seed))
        except ValueError as exc:
            raise CliError(f"bad synthetic spec {src!r}: {exc}") from None

    fmt = ingest.EdgeListFormat(args.format)
    sign_prob = getattr(args, "sign_prob", None)
    if fmt is ingest.EdgeListFormat.UNSIGNED_TSV and sign_prob is None:
        raise CliError("--sign-prob is required for unsigned input")
    if fmt is not ingest.EdgeListFormat.UNSIGNED_TSV and sign_prob is not None:
        raise CliError("--sign-prob only applies to unsigned input")
    try:
        text = Path(src).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {src}: {exc.strerror}") from None
    parsed = ingest.parse_edge_list(text, fmt)
    if fmt is ingest.EdgeListFormat.UNSIGNED_TSV:
        return ingest.assign_random_signs(parsed, sign_prob, args.seed)
    return parsed


def resolve_threads(flag):
    if flag is not None:
        return flag
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise CliError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    return 1


def run_algo(graph, algo, workers=1, allow_large=False):
    if algo == "brute":
        return exact.brute_force_count(graph, allow_large=allow_large)
    if algo == "base":
        return exact.bb_base(graph)
    if algo == "bucket":
        return exact.bb_bucket(graph)
    return par_bb_bucket(graph, ParallelConfig(workers))


def cmd_count(args, out):
    graph = load_dataset(args)
    workers = resolve_threads(args.threads) if args.algo == "parallel" else 1
    if workers < 1:
        raise CliError("--threads must be >= 1")
    report = run_algo(graph, args.algo, workers, args.force)
    record = {"dataset": args.input, **report.as_dict()}
    if args.output == "json":
        out.write(json.dumps(record) + "\n")
    else:
        for key, value in record.items():
            out.write(f"{key}: {value}\n")
    return EXIT_OK


def cmd_vertex(args, out):
    graph = load_dataset(args)
    if args.all:
        out.write("global_id\tbalanced\n")
        for g, c in exact.per_vertex_counts(graph).items():
            out.write(f"{g}\t{c}\n")
    else:
        out.write(f"{exact.vbbfc(graph, args.vertex)}\n")
    return EXIT_OK


def cmd_estimate(args, out):
    graph = load_dataset(args)
    report = approx.estimate_balanced(graph, args.rho, args.trials, args.seed)
    out.write(json.dumps(report.as_dict()) + "\n")
    return EXIT_OK


def cmd_bench(args, out):
    graph = load_dataset(args)
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    unknown = [a for a in algos if a not in ALGOS]
    if unknown or not algos:
        raise CliError(f"unknown algorithms: {unknown or args.algos!r}")
    try:
        threads_list = [int(t) for t in args.threads_list.split(",")]
    except ValueError:
        raise CliError(f"bad --threads-list {args.threads_list!r}") from None
    if args.repeats < 1 or any(t < 1 for t in threads_list):
        raise CliError("--repeats and thread counts must be >= 1")

    if args.warmup:
        tiny = ingest.generate_random_bipartite(ingest.SyntheticSpec(4, 4, 0.8, 0.5, 0))
        for algo in set(algos):
            run_algo(tiny, algo, 2)

    records = []
    for algo in algos:
        for workers in (threads_list if algo == "parallel" else [1]):
            for rep in range(args.repeats):
                r = run_algo(graph, algo, workers, args.force)
                records.append([algo, args.input, workers, rep, r.balanced, r.unbalanced,
                                r.total, f"{r.wall_time_ms:.3f}"])

    counts = {tuple(rec[4:7]) for rec in records}
    if len(counts) > 1:
        for rec in records:
            print(f"{rec[0]} workers={rec[2]} repeat={rec[3]}: {tuple(rec[4:7])}", file=sys.stderr)
        raise CliError("balanced/unbalanced/total differ across algorithms", EXIT_DISAGREE)

    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(BENCH_HEADER)
    writer.writerows(records)
    groups = {}
    for rec in records:
        groups.setdefault((rec[0], rec[2]), []).append(float(rec[7]))
    for (algo, workers), times in groups.items():
        print(f"median algo={algo} workers={workers} runs={len(times)} "
              f"wall_time_ms={statistics.median(times):.3f}", file=sys.stderr)
    return EXIT_OK


def cmd_topk(args, out):
    if args.k < 1:
        raise CliError("-k must be >= 1")
    graph = load_dataset(args)
    id_map = None
    if args.id_map:
        id_map = ingest.parse_id_map(Path(args.id_map).read_text())
    partition = {"left": Partition.LEFT, "right": Partition.RIGHT, "all": None}[args.partition]
    ranked = analytics.top_k(graph, args.metric, args.k, partition=partition, id_map=id_map)
    out.write("rank\tglobal_id\tlabel\tscore\n")
    for pos, (g, score) in enumerate(ranked.entries, start=1):
        label = ranked.labels[pos - 1] if ranked.labels else str(g)
        out.write(f"{pos}\t{g}\t{label}\t{score}\n")
    return EXIT_OK


def cmd_pair(args, out):
    graph = load_dataset(args)
    out.write(f"{analytics.pair_collaboration(graph, args.a, args.b)}\n")
    return EXIT_OK


def cmd_convert(args, out):
    if (args.sign_prob is None) == (args.threshold is None):
        raise CliError("give exactly one of --sign-prob or --threshold")
    text = Path(args.input).read_text()
    if args.threshold is not None:
        edges = ingest.parse_weighted_edges(text)
        graph = ingest.assign_threshold_signs(edges, args.threshold)
    else:
        edges = ingest.parse_edge_list(text, ingest.EdgeListFormat.UNSIGNED_TSV)
        graph = ingest.assign_random_signs(edges, args.sign_prob, args.seed)
    body = ingest.format_signed_tsv(graph)
    if args.output:
        Path(args.output).write_text(body)
    else:
        out.write(body)
    if args.id_map_out:
        Path(args.id_map_out).write_text(ingest.format_id_map(graph))
    return EXIT_OK


def _probability(text):
    p = float(text)
    if not 0.0 <= p <= 1.0:
        raise argparse.ArgumentTypeError(f"{text} is not in [0, 1]")
    return p


def build_parser():
    parser = argparse.ArgumentParser(prog="sbutterfly",
                                     description="Balanced butterfly counting in signed bipartite graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p, seed_default=0):
        p.add_argument("--input", required=True,
                       help="edge-list file, or random:L:R:p:q:seed / skewed:L:R:d:q:seed")
        p.add_argument("--format", default="signed-tsv",
                       choices=[f.value for f in ingest.EdgeListFormat])
        p.add_argument("--sign-prob", type=_probability, default=None,
                       help="positive-edge probability for unsigned input")
        p.add_argument("--seed", type=int, default=seed_default)
        return p

    p = with_input(sub.add_parser("count", help="count balanced butterflies"))
    p.add_argument("--algo", default="bucket", choices=ALGOS)
    p.add_argument("--threads", type=int, default=None,
                   help=f"workers for --algo parallel (default ${THREADS_ENV} or 1)")
    p.add_argument("--output", default="text", choices=["text", "json"])
    p.add_argument("--force", action="store_true", help="lift the brute-force size guard")
    p.set_defaults(func=cmd_count)

    p = with_input(sub.add_parser("vertex", help="balanced butterflies per vertex"))
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--vertex", type=int, help="global id")
    group.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_vertex)

    p = with_input(sub.add_parser("estimate", help="sparsification estimate"))
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.set_defaults(func=cmd_estimate)

    p = with_input(sub.add_parser("bench", help="time algorithms, emit CSV"))
    p.add_argument("--algos", default="base,bucket,parallel")
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--threads-list", default="1")
    p.add_argument("--no-warmup", dest="warmup", action="store_false",
                   help="skip compiling kernels on a tiny graph before timing")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = with_input(sub.add_parser("topk", help="rank vertices by a positive metric"))
    p.add_argument("--metric", required=True, choices=[m.value for m in analytics.Metric])
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--partition", default="all", choices=["left", "right", "all"])
    p.add_argument("--id-map", default=None, help="file of <global_id>\\t<label> lines")
    p.set_defaults(func=cmd_topk)

    p = with_input(sub.add_parser("pair", help="positive butterflies shared by two vertices"))
    p.add_argument("--a", type=int, required=True, help="global id")
    p.add_argument("--b", type=int, required=True, help="global id")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("convert", help="unsigned or weighted edge list to signed TSV")
    p.add_argument("--input", required=True)
    p.add_argument("--sign-prob", type=_probability, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threshold", type=float, default=None,
                   help="weight >= threshold becomes positive")
    p.add_argument("--output", default=None)
    p.add_argument("--id-map-out", default=None)
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except UnknownVertexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (SamePartitionRequiredError, IdenticalVerticesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ButterflyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
