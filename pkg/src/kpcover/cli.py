"""Command-line front end.

Subcommands: validate, solve, reduce-clique, gen, bench.

Exit codes: 0 success, 1 missing file or I/O error, 2 parse or parameter
error, 3 invalid instance, 4 heuristic failure, 5 infeasible.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .approx import two_approx_vc
from .bench import (DEFAULT_EXACT_CUTOFF, BenchConfig, run_bench,
                    summary_text, write_csv)
from .errors import (InstanceInvalidError, KOutOfRangeError, ParseError,
                     SpecInvalidError)
from .exact import exact_cvck
from .generate import GenSpec, gen_complete_kpartite, gen_kpartite, gen_tree
from .graph import (Budgets, Instance, greedy_partition, respects_budgets,
                    validate_instance)
from .heuristic import solve_cvck
from .ioformat import parse_instance, result_fields, serialize_instance
from .reduction import reduce_clique_to_vc

EXIT_OK = 0
EXIT_IO = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_HEURISTIC_FAILURE = 4
EXIT_INFEASIBLE = 5


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID if exc.kind == "IntraPartEdge" else EXIT_PARSE
    except (SpecInvalidError, KOutOfRangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InstanceInvalidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def entry() -> None:  # console-script hook
    sys.exit(main())


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kpcover",
        description="Budget-constrained minimum vertex cover toolkit for k-partite graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate an instance file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("path")
    p.add_argument("--algo", choices=["cvck", "exact", "2approx"], default="cvck")
    p.add_argument("--output", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce-clique",
                       help="write the complement instance for the clique question (g, k)")
    p.add_argument("path")
    p.add_argument("--k", type=int, required=True, help="clique size to decide")
    p.add_argument("--out", required=True, help="output instance path")
    p.set_defaults(func=cmd_reduce_clique)

    p = sub.add_parser("gen", help="generate an instance file on stdout")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--density", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget-mode", default="slack:1")
    p.add_argument("--tree", action="store_true", help="random tree instead of k-partite")
    p.add_argument("--complete", help="complete k-partite with these part sizes, e.g. 2,3")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="run an ensemble and write per-record CSV")
    p.add_argument("--sizes", required=True, help="comma-separated n values")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget-mode", default="slack:1")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--tree", action="store_true")
    p.add_argument("--exact-cutoff", type=int, default=DEFAULT_EXACT_CUTOFF)
    p.add_argument("--out", required=True, help="CSV output path")
    p.set_defaults(func=cmd_bench)

    return parser


def _load_instance(path: str) -> Instance:
    with open(path, "r", encoding="utf-8") as f:
        return parse_instance(f.read())


def cmd_validate(args: argparse.Namespace) -> int:
    inst = _load_instance(args.path)
    report = validate_instance(inst)
    for w in report.warnings:
        print(f"warning: {w}")
    if report.ok:
        print("ok")
        return EXIT_OK
    for v in report.violations:
        print(f"violation: {v}")
    return EXIT_INVALID


def cmd_solve(args: argparse.Namespace) -> int:
    inst = _load_instance(args.path)
    t0 = time.perf_counter()
    if args.algo == "cvck":
        result = solve_cvck(inst)
        code = EXIT_OK if result.success else EXIT_HEURISTIC_FAILURE
    elif args.algo == "exact":
        result = exact_cvck(inst)
        code = EXIT_OK if result.feasible else EXIT_INFEASIBLE
    else:
        result = two_approx_vc(inst.graph)
        code = EXIT_OK
    wall_ms = (time.perf_counter() - t0) * 1000.0

    fields = result_fields(result, instance=inst, algo=args.algo, wall_ms=wall_ms)
    if args.algo == "2approx":
        fields["budget_violation"] = not respects_budgets(inst, result)
    if args.output == "json":
        print(json.dumps(fields))
    else:
        for key, value in fields.items():
            if key == "cover":
                value = " ".join(str(v) for v in value)
            elif key == "per_part_usage" and value is not None:
                value = " ".join(str(v) for v in value)
            elif key == "wall_ms":
                value = f"{value:.3f}"
            print(f"{key}: {value}")
    return code


def cmd_reduce_clique(args: argparse.Namespace) -> int:
    inst = _load_instance(args.path)
    out = reduce_clique_to_vc(inst.graph, args.k)
    comp = out.complement_graph
    partition = greedy_partition(comp)
    budgets = Budgets(tuple(len(partition.parts[p]) for p in range(1, partition.k + 1)))
    reduced = Instance(graph=comp, partition=partition, budgets=budgets)
    text = f"c target_cover_size {out.target_cover_size}\n" + serialize_instance(reduced)
    with open(args.out, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    print(f"wrote {args.out} (target cover size {out.target_cover_size})")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.complete:
        try:
            sizes = tuple(int(x) for x in args.complete.split(","))
        except ValueError:
            raise SpecInvalidError(f"bad part sizes {args.complete!r}") from None
        inst = gen_complete_kpartite(sizes)
    elif args.tree:
        if args.n is None:
            raise SpecInvalidError("--tree requires --n")
        inst = gen_tree(args.n, args.seed)
    else:
        if args.n is None or args.k is None or args.density is None:
            raise SpecInvalidError("gen requires --n, --k and --density")
        inst = gen_kpartite(GenSpec(n=args.n, k=args.k, density=args.density,
                                    seed=args.seed, budget_mode=args.budget_mode))
    sys.stdout.write(serialize_instance(inst))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        sizes = tuple(int(x) for x in args.sizes.split(","))
    except ValueError:
        raise SpecInvalidError(f"bad sizes list {args.sizes!r}") from None
    config = BenchConfig(sizes=sizes, trials=args.trials, density=args.density,
                         seed=args.seed, budget_mode=args.budget_mode,
                         k=args.k, tree=args.tree,
                         exact_cutoff=args.exact_cutoff)
    records, summary = run_bench(config)
    with open(args.out, "w", encoding="utf-8", newline="") as f:
        write_csv(records, f)
    sys.stdout.write(summary_text(summary))
    return EXIT_OK
