"""Command-line interface: gen | project | solve | sweep | threshold |
bench-speedup | ddim. All randomness flows from explicit --seed flags."""

from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .dataset import generate, load, store
from .doubling import estimate_doubling_dim
from .harness import DatasetSpec, ProblemSpec, SweepConfig
from .median import geometric_median
from .projection import apply_map, make_jl_map, make_line_map


def _add_dataset_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="infile", help="point-set file (csv or bin)")
    p.add_argument("--gen", dest="gen_kind", help="generator kind instead of --in")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--data-seed", type=int, default=0)
    p.add_argument("--label", default="")


def _dataset_spec(args) -> DatasetSpec:
    if args.infile:
        return DatasetSpec(path=args.infile, label=args.label)
    if not args.gen_kind:
        raise ValueError("need --in or --gen")
    return DatasetSpec(
        kind=args.gen_kind,
        n=args.n,
        d=args.d,
        sigma=args.sigma,
        seed=args.data_seed,
        label=args.label,
    )


def _add_problem_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--problem", required=True)
    p.add_argument("--mode", default="greedy")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--f", default="linf", help="linf | lp:<p> | sum | median")
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--split", type=int, default=-1)


def _problem_spec(args) -> ProblemSpec:
    return ProblemSpec(
        problem=args.problem,
        mode=args.mode,
        k=args.k,
        f=args.f,
        samples=args.samples,
        split=args.split,
    )


def _parse_dims(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


def _solution_payload(solution) -> object:
    if hasattr(solution, "pairs"):
        return [list(p) for p in solution.pairs]
    if hasattr(solution, "groups"):
        return [list(g) for g in solution.groups]
    if hasattr(solution, "order"):
        return list(solution.order)
    if hasattr(solution, "edges"):
        return [list(e) for e in solution.edges]
    if hasattr(solution, "indices"):
        return list(solution.indices)
    return None


def cmd_gen(args) -> int:
    base = load(args.base) if args.base else None
    kwargs = {"label": args.label or None, "base": base}
    if args.gen_d:
        kwargs["d"] = args.gen_d
    ps = generate(args.kind, args.n, args.seed, sigma=args.sigma, **kwargs)
    store(ps, args.out, args.format)
    print(json.dumps({"n": ps.n, "d": ps.d, "out": args.out}))
    return 0


def cmd_project(args) -> int:
    ps = load(args.infile)
    pm = make_line_map(ps.d, args.seed) if args.line else make_jl_map(ps.d, args.t, args.seed)
    store(apply_map(pm, ps), args.out, args.format)
    print(json.dumps({"n": ps.n, "t": pm.t, "out": args.out}))
    return 0


def cmd_solve(args) -> int:
    spec = _dataset_spec(args)
    ps = spec.materialize()
    if args.problem == "1-median":
        point, cost = geometric_median(ps, tol=args.tol, max_iter=args.max_iter)
        print(json.dumps({"problem": args.problem, "value": cost, "point": list(point)}))
        return 0
    prob = _problem_spec(args)
    solution, value = harness.solve_instance(ps, prob, args.seed)
    payload = {
        "problem": prob.problem,
        "mode": prob.mode,
        "value": value,
        "solution": _solution_payload(solution),
    }
    if prob.problem.startswith("remote-"):
        from .diversity import remote_value_flagged

        _, exact = remote_value_flagged(ps, solution, prob.problem.removeprefix("remote-"))
        if not exact:
            payload["approximate"] = True
    print(json.dumps(payload))
    return 0


def cmd_sweep(args) -> int:
    cfg = SweepConfig(
        problem=_problem_spec(args),
        dataset=_dataset_spec(args),
        dims=_parse_dims(args.dims),
        trials=args.trials,
        seed=args.seed,
        eval_convention=args.eval_convention,
    )
    report = harness.run_sweep(cfg)
    harness.write_report(report, args.out)
    print(json.dumps({"out": args.out, "dims": list(cfg.dims)}))
    return 0


def cmd_threshold(args) -> int:
    report = harness.run_threshold(args.n, _parse_dims(args.dims), args.trials, args.seed)
    harness.write_report(report, args.out)
    print(json.dumps({"out": args.out}))
    return 0


def cmd_bench_speedup(args) -> int:
    cfg = SweepConfig(
        problem=_problem_spec(args),
        dataset=_dataset_spec(args),
        dims=(args.t,),
        trials=args.trials,
        seed=args.seed,
    )
    report = harness.run_speedup(cfg)
    harness.write_report(report, args.out)
    print(json.dumps({"out": args.out, "speedup": report["speedup"]["factor"]}))
    return 0


def cmd_ddim(args) -> int:
    ps = load(args.infile)
    est = estimate_doubling_dim(ps)
    print(
        json.dumps(
            {
                "lambda_hat": est.lambda_hat,
                "per_scale": [[r, c] for r, c in est.per_scale],
            }
        )
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="projmax")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a synthetic point set")
    p.add_argument("--kind", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", dest="gen_d", type=int, default=0)
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--base", help="base point set for noisy_copy")
    p.add_argument("--label", default="")
    p.add_argument("--out", required=True)
    p.add_argument("--format", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("project", help="apply a seeded Gaussian map")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--line", action="store_true", help="use the 1-D pi/2 map")
    p.add_argument("--out", required=True)
    p.add_argument("--format", default=None)
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("solve", help="solve one instance")
    _add_dataset_flags(p)
    _add_problem_flags(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iter", type=int, default=10_000)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", help="relative-error sweep over target dimensions")
    _add_dataset_flags(p)
    _add_problem_flags(p)
    p.add_argument("--dims", required=True, help="comma-separated target dimensions")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--eval-convention", default="lifted", choices=["lifted", "projected_space"])
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("threshold", help="basis-vector threshold experiment")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dims", required=True)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("bench-speedup", help="ambient vs projected wall time")
    _add_dataset_flags(p)
    _add_problem_flags(p)
    p.add_argument("--t", type=int, default=20)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_bench_speedup)

    p = sub.add_parser("ddim", help="estimate the doubling dimension")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_ddim)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Exception as exc:  # one-line diagnostic, nonzero exit
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
