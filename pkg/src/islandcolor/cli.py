"""Command-line front end: solve, bench, verify, and info subcommands."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .bench import emit_results, run_benchmark
from .engine import EnsembleConfig, solve, total_evaluations
from .graph import DimacsError, density, greedy_upper_bound, load_dimacs
from .registry import lookup
from .tabucol import TabuParams

__all__ = ["main", "build_parser"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="islandcolor",
        description="Island-parallel ensemble graph coloring (HHO/ABC/TLBO + TabuCol)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_engine_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("--islands", type=int, default=4, help="worker island count")
        p.add_argument("--seed", type=int, default=0, help="base random seed")
        p.add_argument("--generations", type=int, default=1000)
        p.add_argument("--population", type=int, default=20)
        p.add_argument("--tabu-depth", type=int, default=100_000)
        p.add_argument("--tabu-tenure", type=int, default=7)
        p.add_argument("--time-limit", type=float, default=None, metavar="SECS")
        p.add_argument("--eval-budget", type=int, default=None,
                       help="per-island fitness evaluation budget")
        p.add_argument("--sequential", action="store_true",
                       help="run islands one after another instead of in threads")

    p_solve = sub.add_parser("solve", help="color one instance")
    p_solve.add_argument("file")
    group = p_solve.add_mutually_exclusive_group()
    group.add_argument("--k", type=int, default=None, help="fixed color budget")
    group.add_argument("--auto-k", action="store_true",
                       help="descend k from the greedy bound (default)")
    p_solve.add_argument("--witness", default=None, metavar="PATH",
                         help="write the solution file here")
    add_engine_opts(p_solve)

    p_bench = sub.add_parser("bench", help="benchmark one or more instances")
    p_bench.add_argument("files", nargs="+")
    p_bench.add_argument("--runs", type=int, default=20)
    p_bench.add_argument("--output", choices=("csv", "json", "table"), default="table")
    p_bench.add_argument("--out", default=None, metavar="PATH")
    p_bench.add_argument("--witness-dir", default=None, metavar="DIR",
                         help="write each instance's best solution file here")
    add_engine_opts(p_bench)

    p_verify = sub.add_parser("verify", help="check a solution file independently")
    p_verify.add_argument("file")
    p_verify.add_argument("solution")

    p_info = sub.add_parser("info", help="instance summary")
    p_info.add_argument("file")

    return parser


def _config_from(args: argparse.Namespace) -> EnsembleConfig:
    return EnsembleConfig(
        island_count=args.islands,
        generations=args.generations,
        population_size=args.population,
        base_seed=args.seed,
        tabu=TabuParams(tenure=args.tabu_tenure, nbmax=args.tabu_depth),
        time_limit=args.time_limit,
        fitness_eval_budget=args.eval_budget,
        parallel=not args.sequential,
    )


def _write_witness(path: str, name: str, k: int, seed: int, colors) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"c instance={name} k={k} seed={seed}\n")
        fh.write(" ".join(str(int(c)) for c in colors) + "\n")


def _cmd_solve(args: argparse.Namespace) -> int:
    try:
        graph = load_dimacs(args.file)
    except (DimacsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    config = _config_from(args)
    result = solve(graph, config, target_k=args.k)
    name = Path(args.file).stem
    if result.witness is None:
        attempt = result.per_k_history[-1]
        print(f"{name}: no proper coloring found at k={attempt.k}")
        print(f"evaluations: {total_evaluations(result)}")
        return 2
    k = result.smallest_legal_k
    print(f"{name}: colored with k={k}")
    print(f"evaluations: {total_evaluations(result)}")
    for att in result.per_k_history:
        status = "ok" if att.success else "fail"
        print(f"  k={att.k}: {status}")
    if args.witness:
        _write_witness(args.witness, name, k, config.base_seed, result.witness.colors)
        print(f"witness written to {args.witness}")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    config = _config_from(args)
    records = run_benchmark(
        args.files, config, runs=args.runs, witness_dir=args.witness_dir
    )
    doc = emit_results(records, format=args.output)
    if args.out:
        Path(args.out).write_text(doc, encoding="utf-8")
    else:
        sys.stdout.write(doc)
    return 0 if all(rec.error is None for rec in records) else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        graph = load_dimacs(args.file)
    except (DimacsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        tokens: list[str] = []
        with open(args.solution, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("c"):
                    continue
                tokens.extend(line.split())
        colors = np.array([int(t) for t in tokens], dtype=np.int64)
    except (OSError, ValueError) as exc:
        print(f"error: bad solution file: {exc}", file=sys.stderr)
        return 1
    if colors.size != graph.vertex_count:
        print(
            f"error: solution has {colors.size} colors for "
            f"{graph.vertex_count} vertices",
            file=sys.stderr,
        )
        return 1
    # Independent check: direct edge scan, no incremental bookkeeping.
    u, v = graph.edge_arrays()
    bad = np.nonzero(colors[u] == colors[v])[0]
    if bad.size:
        i = int(bad[0])
        print(
            f"improper: edge ({int(u[i]) + 1}, {int(v[i]) + 1}) is monochromatic "
            f"(color {int(colors[u[i]])}); {bad.size} conflicting edge(s) total"
        )
        return 1
    used = len(np.unique(colors))
    print(f"proper coloring with {used} distinct colors")
    return 0


def _cmd_info(args: argparse.Namespace) -> int:
    try:
        graph = load_dimacs(args.file)
    except (DimacsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    name = Path(args.file).stem
    print(f"instance: {name}")
    print(f"vertices: {graph.vertex_count}")
    print(f"edges: {graph.edge_count}")
    if graph.vertex_count >= 2:
        print(f"density: {density(graph):.4f}")
    print(f"max degree: {graph.max_degree}")
    print(f"greedy upper bound: {greedy_upper_bound(graph)}")
    entry = lookup(name)
    if entry is not None:
        print(f"best known k: {entry.best_known_k}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "solve": _cmd_solve,
        "bench": _cmd_bench,
        "verify": _cmd_verify,
        "info": _cmd_info,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
