"""Command-line interface: solve, oracle, gen, bench, reduce.

Results go to stdout as single-line JSON objects with fixed keys so
scripts can diff them; errors go to stderr.  Exit codes: 0 success,
1 bad input, 2 internal failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import bench_corpus
from .generators import GenConfig, gen_path, gen_planted, gen_random, gen_ring
from .instance import (
    DEFAULT_WEIGHT_TOL,
    Instance,
    PackingInstance,
    Solution,
    parse_instance,
    reduce_3set_packing,
    serialize_instance,
)
from .oracle import brute_force
from .solver import SolveStats, solve


def _read_instance(path: str) -> Instance:
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def _result_line(sol: Solution, stats: SolveStats | None = None) -> str:
    payload: dict = {
        "chosen": list(sol.chosen),
        "covered": sol.covered,
        "weight": sol.weight,
    }
    if stats is not None:
        payload["branch_nodes"] = stats.branch_nodes
        payload["leaves"] = stats.leaves
        payload["max_depth"] = stats.max_depth
        payload["elapsed_s"] = stats.elapsed
    return json.dumps(payload, separators=(",", ":"))


def _cmd_solve(args: argparse.Namespace) -> int:
    inst = _read_instance(args.input)
    sol, stats = solve(inst, tol=args.tol)
    print(_result_line(sol, stats if args.stats else None))
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    inst = _read_instance(args.input)
    print(_result_line(brute_force(inst)))
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    def need(name: str):
        value = getattr(args, name)
        if value is None:
            raise ValueError(f"gen {args.kind} requires --{name.replace('_', '-')}")
        return value

    extra_comments: list[str] = []
    if args.kind == "random":
        cfg = GenConfig(
            seed=args.seed,
            n=need("n"),
            m=need("m"),
            max_size=args.max_size,
            overlap=args.overlap,
        )
        inst = gen_random(cfg)
        params = f"n={cfg.n} m={cfg.m} max_size={cfg.max_size} overlap={cfg.overlap!r}"
    elif args.kind == "path":
        inst = gen_path(need("m"), args.seed)
        params = f"m={args.m}"
    elif args.kind == "ring":
        inst = gen_ring(need("m"), args.seed)
        params = f"m={args.m}"
    else:  # planted
        inst, planted = gen_planted(need("n"), need("k"), args.noise, args.seed)
        params = f"n={args.n} k={args.k} noise={args.noise}"
        extra_comments.append("# planted " + " ".join(map(str, planted)))

    header = [f"# wmesc gen {args.kind} seed={args.seed} {params}"]
    text = "\n".join(header + extra_comments) + "\n" + serialize_instance(inst)
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    directory = Path(args.corpus)
    if not directory.is_dir():
        raise ValueError(f"not a readable directory: {directory}")
    files = sorted(p for p in directory.iterdir() if p.is_file())
    instances = [parse_instance(p.read_text(encoding="utf-8")) for p in files]
    rows = bench_corpus(instances, timeout=args.timeout)
    Path(args.output).write_text("\n".join(rows) + "\n", encoding="utf-8")
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    triples = []
    for lineno, raw in enumerate(
        Path(args.input).read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        labels = line.split()
        if len(labels) != 3 or len(set(labels)) != 3:
            raise ValueError(f"line {lineno}: need exactly 3 distinct labels, got {line!r}")
        triples.append(frozenset(labels))
    inst = reduce_3set_packing(PackingInstance(triples=tuple(triples)))
    Path(args.output).write_text(serialize_instance(inst), encoding="utf-8")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wmesc",
        description="Exact solver for weighted mutually exclusive maximum set cover.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a WMESC v1 file exactly")
    p_solve.add_argument("input", help="instance file in WMESC v1 format")
    p_solve.add_argument("--stats", action="store_true", help="include search statistics")
    p_solve.add_argument(
        "--tol", type=float, default=DEFAULT_WEIGHT_TOL, help="weight tie tolerance"
    )
    p_solve.set_defaults(func=_cmd_solve)

    p_oracle = sub.add_parser("oracle", help="brute-force a small instance (m <= 25)")
    p_oracle.add_argument("input", help="instance file in WMESC v1 format")
    p_oracle.set_defaults(func=_cmd_oracle)

    p_gen = sub.add_parser("gen", help="generate a seeded instance file")
    p_gen.add_argument("kind", choices=["random", "path", "ring", "planted"])
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--n", type=int, help="ground-set size (random, planted)")
    p_gen.add_argument("--m", type=int, help="subset count (random, path, ring)")
    p_gen.add_argument("--max-size", type=int, default=3, help="largest subset (random)")
    p_gen.add_argument(
        "--overlap", type=float, default=0.3, help="element-reuse probability (random)"
    )
    p_gen.add_argument("--k", type=int, help="planted disjoint subsets (planted)")
    p_gen.add_argument("--noise", type=int, default=0, help="noise subsets (planted)")
    p_gen.add_argument("--out", help="output file (default: stdout)")
    p_gen.set_defaults(func=_cmd_gen)

    p_bench = sub.add_parser("bench", help="solve a directory of instances into CSV")
    p_bench.add_argument("corpus", help="directory of WMESC v1 files")
    p_bench.add_argument("output", help="CSV output path")
    p_bench.add_argument(
        "--timeout", type=float, default=None, help="per-instance seconds"
    )
    p_bench.set_defaults(func=_cmd_bench)

    p_reduce = sub.add_parser(
        "reduce", help="rewrite a 3-set packing file as a unit-weight instance"
    )
    p_reduce.add_argument("input", help="one triple per line, whitespace-separated labels")
    p_reduce.add_argument("output", help="WMESC v1 output path")
    p_reduce.set_defaults(func=_cmd_reduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # internal failure contract: exit 2
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
