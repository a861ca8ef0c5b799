/**
 * Report schema: the contract between the solver harness and this renderer.
 * Validation errors always name the offending field path.
 */

export interface TrialRecord {
  seed: number;
  value_projected: number;
  value_lifted: number;
  rel_err_projected: number;
  rel_err_lifted: number;
  wall_ms_project: number;
  wall_ms_solve: number;
}

export interface ErrorRecord {
  seed: number;
  error: string;
}

export interface DimEntry {
  t: number;
  trials: (TrialRecord | ErrorRecord)[];
  mean_rel_err_lifted: number | null;
  std_rel_err_lifted: number | null;
}

export interface Report {
  config: {
    problem: { problem: string; mode: string; k?: number; [key: string]: unknown };
    dataset: { label: string; [key: string]: unknown };
    dims: number[];
    trials: number;
    seed: number;
    eval_convention: string;
  };
  baseline: { value: number; wall_ms: number };
  dims: DimEntry[];
}

export class SchemaError extends Error {
  constructor(public readonly field: string, message: string) {
    super(`${field}: ${message}`);
    this.name = "SchemaError";
  }
}

function isObject(v: unknown): v is Record<string, unknown> {
  return typeof v === "object" && v !== null && !Array.isArray(v);
}

function requireObject(v: unknown, field: string): Record<string, unknown> {
  if (!isObject(v)) throw new SchemaError(field, "expected an object");
  return v;
}

function requireNumber(v: unknown, field: string): number {
  if (typeof v !== "number" || !Number.isFinite(v)) {
    throw new SchemaError(field, "expected a finite number");
  }
  return v;
}

function requireString(v: unknown, field: string): string {
  if (typeof v !== "string") throw new SchemaError(field, "expected a string");
  return v;
}

function requireArray(v: unknown, field: string): unknown[] {
  if (!Array.isArray(v)) throw new SchemaError(field, "expected an array");
  return v;
}

function optionalNumber(v: unknown, field: string): number | null {
  if (v === null) return null;
  return requireNumber(v, field);
}

const TRIAL_FIELDS = [
  "value_projected",
  "value_lifted",
  "rel_err_projected",
  "rel_err_lifted",
  "wall_ms_project",
  "wall_ms_solve",
] as const;

export function validateReport(raw: unknown): Report {
  const root = requireObject(raw, "report");

  const config = requireObject(root.config, "config");
  const problem = requireObject(config.problem, "config.problem");
  requireString(problem.problem, "config.problem.problem");
  const dataset = requireObject(config.dataset, "config.dataset");
  requireString(dataset.label, "config.dataset.label");
  requireString(config.eval_convention, "config.eval_convention");

  const baseline = requireObject(root.baseline, "baseline");
  const baseValue = requireNumber(baseline.value, "baseline.value");
  if (baseValue <= 0) throw new SchemaError("baseline.value", "must be positive");
  requireNumber(baseline.wall_ms, "baseline.wall_ms");

  const dims = requireArray(root.dims, "dims");
  if (dims.length === 0) throw new SchemaError("dims", "must be nonempty");
  dims.forEach((entry, i) => {
    const e = requireObject(entry, `dims[${i}]`);
    requireNumber(e.t, `dims[${i}].t`);
    const trials = requireArray(e.trials, `dims[${i}].trials`);
    trials.forEach((rec, j) => {
      const r = requireObject(rec, `dims[${i}].trials[${j}]`);
      if ("error" in r) {
        requireString(r.error, `dims[${i}].trials[${j}].error`);
        return;
      }
      for (const f of TRIAL_FIELDS) {
        requireNumber(r[f], `dims[${i}].trials[${j}].${f}`);
      }
    });
    optionalNumber(e.mean_rel_err_lifted, `dims[${i}].mean_rel_err_lifted`);
    optionalNumber(e.std_rel_err_lifted, `dims[${i}].std_rel_err_lifted`);
  });

  return root as unknown as Report;
}
