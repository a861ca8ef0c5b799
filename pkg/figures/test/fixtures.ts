/** Hand-built reports matching the harness schema. */

export function sweepReport(label: string, opts: { means?: number[]; seed?: number } = {}) {
  const means = opts.means ?? [0.2, 0.08, 0.02];
  const dims = [5, 10, 20].map((t, i) => {
    const mean = means[i];
    const trials = [0, 1, 2].map((trial) => {
      const wiggle = (trial - 1) * 0.01;
      return {
        seed: (opts.seed ?? 7) ^ trial,
        value_projected: 100 * (1 - mean - wiggle),
        value_lifted: 100 * (1 - mean - wiggle / 2),
        rel_err_projected: mean + wiggle,
        rel_err_lifted: mean + wiggle / 2,
        wall_ms_project: 1.5,
        wall_ms_solve: 3.25,
      };
    });
    const errs = trials.map((r) => r.rel_err_lifted);
    const m = errs.reduce((a, b) => a + b, 0) / errs.length;
    const v = errs.reduce((a, b) => a + (b - m) ** 2, 0) / errs.length;
    return {
      t,
      trials,
      mean_rel_err_lifted: m,
      std_rel_err_lifted: Math.sqrt(v),
    };
  });
  return {
    config: {
      problem: { problem: "max-matching", mode: "greedy", k: 0, f: "", samples: 0, split: -1 },
      dataset: { kind: "cumsum", n: 512, d: 0, sigma: 1.0, seed: 0, path: "", label },
      dims: [5, 10, 20],
      trials: 3,
      seed: opts.seed ?? 7,
      eval_convention: "lifted",
    },
    baseline: { value: 100.0, wall_ms: 12.0 },
    dims,
  };
}

export function thresholdReport() {
  const base = Math.SQRT2 * 512;
  const ratios: Record<number, number[]> = {
    8: [1.31, 1.33, 1.3],
    64: [1.2, 1.22, 1.19],
    256: [1.08, 1.09, 1.1],
  };
  const dims = [8, 64, 256].map((t) => {
    const trials = ratios[t].map((ratio, trial) => ({
      seed: 42 ^ trial,
      value_projected: base * ratio,
      value_lifted: base,
      rel_err_projected: Math.abs(1 - ratio),
      rel_err_lifted: 0.0,
      wall_ms_project: 2.0,
      wall_ms_solve: 30.0,
    }));
    return { t, trials, mean_rel_err_lifted: 0.0, std_rel_err_lifted: 0.0 };
  });
  return {
    config: {
      problem: { problem: "threshold", mode: "bipartite", k: 0, f: "", samples: 0, split: 512 },
      dataset: { kind: "basis", n: 1024, d: 0, sigma: 1.0, seed: 0, path: "", label: "basis-1024" },
      dims: [8, 64, 256],
      trials: 3,
      seed: 42,
      eval_convention: "projected_space",
    },
    baseline: { value: base, wall_ms: 0.0 },
    dims,
  };
}
