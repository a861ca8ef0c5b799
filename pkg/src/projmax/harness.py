"""Experiment orchestration: projection sweeps, the basis-vector threshold
experiment, speedup benchmarking, and report serialization.

Report schema (JSON, one document per run):

    {config, baseline: {value, wall_ms},
     dims: [{t, trials: [{seed, value_projected, value_lifted,
                          rel_err_projected, rel_err_lifted,
                          wall_ms_project, wall_ms_solve}],
             mean_rel_err_lifted, std_rel_err_lifted}]}

A flat CSV with one row per trial is written next to every JSON report.
Speedup runs add a ``speedup`` object. Wall-time fields are the only
non-deterministic content for a fixed config.
"""

from __future__ import annotations

import csv
import json
import math
import statistics
import time
from dataclasses import asdict, dataclass

import numpy as np

from . import diversity, matching, spanning_coverage, tours
from .dataset import PointSet, diameter, generate, load
from .projection import apply_map, derive_seed, make_jl_map
from .spanning_coverage import FSpec


@dataclass(frozen=True)
class ProblemSpec:
    """What to solve and how; ``k``/``f``/``samples``/``split`` apply only to
    the problems that use them."""

    problem: str
    mode: str = "greedy"
    k: int = 0
    f: str = ""
    samples: int = 0
    split: int = -1

    def describe(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class DatasetSpec:
    """Either a generator invocation (kind + params) or a file path."""

    kind: str = ""
    n: int = 0
    d: int = 0
    sigma: float = 1.0
    seed: int = 0
    path: str = ""
    label: str = ""

    def materialize(self) -> PointSet:
        if self.path:
            ps = load(self.path)
        else:
            kwargs = {}
            if self.kind == "gaussian_blob":
                kwargs["d"] = self.d
                kwargs["sigma"] = self.sigma
            ps = generate(self.kind, self.n, self.seed, **kwargs)
        if self.label:
            ps = PointSet(ps.coords, label=self.label)
        return ps


@dataclass(frozen=True)
class SweepConfig:
    problem: ProblemSpec
    dataset: DatasetSpec
    dims: tuple[int, ...]
    trials: int
    seed: int
    eval_convention: str = "lifted"

    def describe(self) -> dict:
        return {
            "problem": self.problem.describe(),
            "dataset": asdict(self.dataset),
            "dims": list(self.dims),
            "trials": self.trials,
            "seed": self.seed,
            "eval_convention": self.eval_convention,
        }


def _now_ms() -> float:
    return time.perf_counter_ns() / 1e6


def solve_instance(ps: PointSet, prob: ProblemSpec, seed: int = 0):
    """Run the configured solver; returns (solution structure, value)."""
    p, mode = prob.problem, prob.mode
    if p == "max-matching":
        if mode == "exact":
            m = matching.max_matching_exact(ps)
        elif mode == "greedy":
            m = matching.max_matching_greedy(ps)
        elif mode == "line":
            m = matching.max_matching_line(ps)
        elif mode == "bipartite":
            split = prob.split if prob.split > 0 else ps.n // 2
            m = matching.max_matching_bipartite(ps, split)
        else:
            raise ValueError(f"unknown max-matching mode {mode!r}")
        return m, matching.matching_value(ps, m)
    if p == "max-hypermatching":
        return matching.max_hypermatching(ps, prob.k, mode)
    if p == "max-tsp":
        if mode == "exact":
            return tours.max_tsp_exact(ps)
        if mode == "greedy":
            return tours.max_tsp_greedy(ps)
        if mode == "random":
            return tours.random_tour_best(ps, max(prob.samples, 1), seed)
        raise ValueError(f"unknown max-tsp mode {mode!r}")
    if p == "max-mst":
        return spanning_coverage.max_spanning_tree(ps)
    if p == "max-k-coverage":
        return spanning_coverage.k_coverage_select(ps, prob.k, mode)
    if p == "large-opt":
        return spanning_coverage.large_opt_select(ps, prob.k, FSpec.parse(prob.f), mode)
    if p.startswith("remote-"):
        return diversity.remote_select(ps, prob.k, p.removeprefix("remote-"), mode)
    raise ValueError(f"unknown problem {prob.problem!r}")


def lifted_value(ps: PointSet, prob: ProblemSpec, solution) -> float:
    """Re-score a solution's index structure on another coordinate set."""
    p = prob.problem
    if p in ("max-matching", "threshold"):
        return matching.matching_value(ps, solution)
    if p == "max-hypermatching":
        return matching.hypermatching_value(ps, solution)
    if p == "max-tsp":
        return tours.tour_value(ps, solution)
    if p == "max-mst":
        return spanning_coverage.spanning_tree_value(ps, solution)
    if p == "max-k-coverage":
        return spanning_coverage.k_coverage_value(ps, solution)
    if p == "large-opt":
        return spanning_coverage.large_opt_value(ps, solution, FSpec.parse(prob.f))
    if p.startswith("remote-"):
        return diversity.remote_value(ps, solution, p.removeprefix("remote-"))
    raise ValueError(f"cannot re-evaluate problem {prob.problem!r}")


def _validate_dims(dims, d: int) -> None:
    if not dims:
        raise ValueError("dims must be nonempty")
    for t in dims:
        if t < 1:
            raise ValueError(f"t={t} must be >= 1")
        if t > d:
            raise ValueError(f"t={t} exceeds ambient dimension d={d}")


def _baseline_section(ps: PointSet, prob: ProblemSpec, value: float, wall_ms: float) -> dict:
    """Baseline block; selection objectives also report value / (n * diameter)
    so users can judge whether the large-optimum regime applies."""
    section = {"value": value, "wall_ms": wall_ms}
    if prob.problem in ("max-k-coverage", "large-opt"):
        delta = diameter(ps)
        if delta > 0:
            section["opt_over_n_diameter"] = value / (ps.n * delta)
    return section


def _trial_record(seed, v_proj, v_lift, baseline, wall_project, wall_solve) -> dict:
    return {
        "seed": seed,
        "value_projected": v_proj,
        "value_lifted": v_lift,
        "rel_err_projected": abs(baseline - v_proj) / baseline,
        "rel_err_lifted": abs(baseline - v_lift) / baseline,
        "wall_ms_project": wall_project,
        "wall_ms_solve": wall_solve,
    }


def _summarize(records: list[dict]) -> tuple[float | None, float | None]:
    errs = [r["rel_err_lifted"] for r in records if "error" not in r]
    if not errs:
        return None, None
    mean = float(np.mean(errs))
    std = float(np.std(errs))
    return mean, std


def run_sweep(cfg: SweepConfig) -> dict:
    """Solve once in the ambient dimension, then per (t, trial) on freshly
    seeded projections, recording both evaluation conventions and timings."""
    ps = cfg.dataset.materialize()
    _validate_dims(cfg.dims, ps.d)
    if cfg.trials < 1:
        raise ValueError("trials must be >= 1")

    t0 = _now_ms()
    _, baseline_value = solve_instance(ps, cfg.problem, cfg.seed)
    baseline_wall = _now_ms() - t0
    if not baseline_value > 0:
        raise ValueError("baseline value must be positive for relative errors")

    config = cfg.describe()
    config["dataset"]["label"] = ps.label  # legends read the resolved label
    report = {
        "config": config,
        "baseline": _baseline_section(ps, cfg.problem, baseline_value, baseline_wall),
        "dims": [],
    }
    for t in cfg.dims:
        records = []
        for trial in range(cfg.trials):
            s = derive_seed(cfg.seed, trial)
            t1 = _now_ms()
            proj = apply_map(make_jl_map(ps.d, t, s), ps)
            wall_project = _now_ms() - t1
            try:
                t2 = _now_ms()
                sol, v_proj = solve_instance(proj, cfg.problem, s)
                wall_solve = _now_ms() - t2
                v_lift = lifted_value(ps, cfg.problem, sol)
            except ValueError as exc:
                records.append({"seed": s, "error": str(exc)})
                continue
            records.append(
                _trial_record(s, v_proj, v_lift, baseline_value, wall_project, wall_solve)
            )
        mean, std = _summarize(records)
        report["dims"].append(
            {
                "t": t,
                "trials": records,
                "mean_rel_err_lifted": mean,
                "std_rel_err_lifted": std,
            }
        )
    return report


def run_threshold(n: int, dims, trials: int, seed: int) -> dict:
    """Basis-vector threshold experiment.

    The ambient optimum is sqrt(2) * n/2 in closed form (all pairwise
    distances are equal); each trial solves bipartite max matching on a fixed
    half/half split of the projected points. The per-trial ratio to the
    baseline is value_projected / baseline value.
    """
    if n % 2:
        raise ValueError(f"threshold experiment needs even n, got {n}")
    ps = generate("basis", n)
    _validate_dims(dims, ps.d)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    baseline_value = math.sqrt(2.0) * (n / 2.0)
    prob = ProblemSpec(problem="threshold", mode="bipartite", split=n // 2)

    report = {
        "config": {
            "problem": prob.describe(),
            "dataset": asdict(DatasetSpec(kind="basis", n=n, label=ps.label)),
            "dims": list(dims),
            "trials": trials,
            "seed": seed,
            "eval_convention": "projected_space",
        },
        "baseline": {"value": baseline_value, "wall_ms": 0.0},
        "dims": [],
    }
    for t in dims:
        records = []
        for trial in range(trials):
            s = derive_seed(seed, trial)
            t1 = _now_ms()
            proj = apply_map(make_jl_map(ps.d, t, s), ps)
            wall_project = _now_ms() - t1
            t2 = _now_ms()
            m = matching.max_matching_bipartite(proj, n // 2)
            v_proj = matching.matching_value(proj, m)
            wall_solve = _now_ms() - t2
            v_lift = matching.matching_value(ps, m)
            records.append(
                _trial_record(s, v_proj, v_lift, baseline_value, wall_project, wall_solve)
            )
        mean, std = _summarize(records)
        report["dims"].append(
            {
                "t": t,
                "trials": records,
                "mean_rel_err_lifted": mean,
                "std_rel_err_lifted": std,
            }
        )
    return report


def run_speedup(cfg: SweepConfig) -> dict:
    """Wall-time comparison: ambient solve vs projection + projected solve.

    Uses a monotonic clock, discards one warmup run per path, and reports the
    median over trials. The speedup factor counts projection time.
    """
    ps = cfg.dataset.materialize()
    _validate_dims(cfg.dims, ps.d)
    if len(cfg.dims) != 1:
        raise ValueError("speedup runs use exactly one target dimension")
    if cfg.trials < 1:
        raise ValueError("trials must be >= 1")
    t = cfg.dims[0]

    solve_instance(ps, cfg.problem, cfg.seed)  # warmup, discarded
    warm = apply_map(make_jl_map(ps.d, t, derive_seed(cfg.seed, 0)), ps)
    solve_instance(warm, cfg.problem, derive_seed(cfg.seed, 0))

    config = cfg.describe()
    config["dataset"]["label"] = ps.label
    ambient_ms = []
    projected_ms = []
    records = []
    baseline_value = None
    for trial in range(cfg.trials):
        t0 = _now_ms()
        _, baseline_value = solve_instance(ps, cfg.problem, cfg.seed)
        ambient_ms.append(_now_ms() - t0)

        s = derive_seed(cfg.seed, trial)
        t1 = _now_ms()
        proj = apply_map(make_jl_map(ps.d, t, s), ps)
        wall_project = _now_ms() - t1
        t2 = _now_ms()
        sol, v_proj = solve_instance(proj, cfg.problem, s)
        wall_solve = _now_ms() - t2
        projected_ms.append(wall_project + wall_solve)
        v_lift = lifted_value(ps, cfg.problem, sol)
        records.append(
            _trial_record(s, v_proj, v_lift, baseline_value, wall_project, wall_solve)
        )

    mean, std = _summarize(records)
    ambient_med = statistics.median(ambient_ms)
    projected_med = statistics.median(projected_ms)
    return {
        "config": config,
        "baseline": _baseline_section(ps, cfg.problem, baseline_value, ambient_med),
        "dims": [
            {
                "t": t,
                "trials": records,
                "mean_rel_err_lifted": mean,
                "std_rel_err_lifted": std,
            }
        ],
        "speedup": {
            "t": t,
            "ambient_wall_ms_median": ambient_med,
            "projected_wall_ms_median": projected_med,
            "factor": ambient_med / projected_med,
        },
    }


TRIAL_FIELDS = (
    "seed",
    "value_projected",
    "value_lifted",
    "rel_err_projected",
    "rel_err_lifted",
    "wall_ms_project",
    "wall_ms_solve",
)


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2)


def report_from_json(text: str) -> dict:
    return json.loads(text)


def write_report(report: dict, path) -> None:
    """Write the JSON report plus the flat one-row-per-trial CSV sibling."""
    path = str(path)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(report_to_json(report))
        fh.write("\n")
    csv_path = path[: -len(".json")] + ".csv" if path.endswith(".json") else path + ".csv"
    with open(csv_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(("t",) + TRIAL_FIELDS)
        for entry in report["dims"]:
            for rec in entry["trials"]:
                if "error" in rec:
                    continue
                writer.writerow([entry["t"]] + [rec[f] for f in TRIAL_FIELDS])
