/**
 * Turn validated reports into one SVG figure per problem: a mean curve with a
 * ±1σ band per report, keyed by the dataset label. Threshold reports become
 * ratio-vs-dimension plots with a sqrt(2) reference line.
 */

import { writeFileSync } from "node:fs";
import { join } from "node:path";

import { DimEntry, Report, SchemaError, TrialRecord } from "./schema.js";
import { Curve, CurvePoint, renderFigure } from "./svg.js";

export interface ManifestEntry {
  problem: string;
  file: string;
  curves: string[];
}

function isTrial(rec: DimEntry["trials"][number]): rec is TrialRecord {
  return !("error" in rec);
}

function meanStd(values: number[]): { mean: number; std: number } {
  const mean = values.reduce((a, b) => a + b, 0) / values.length;
  const variance = values.reduce((a, b) => a + (b - mean) ** 2, 0) / values.length;
  return { mean, std: Math.sqrt(variance) };
}

export function problemKey(report: Report): string {
  const p = report.config.problem;
  const parts = [p.problem];
  if (p.mode) parts.push(String(p.mode));
  if (p.k) parts.push(`k${p.k}`);
  return parts.join("-");
}

function isThreshold(report: Report): boolean {
  return report.config.problem.problem === "threshold";
}

export function curveFromReport(report: Report, path: string): Curve {
  const threshold = isThreshold(report);
  const projected = report.config.eval_convention === "projected_space";
  const points: CurvePoint[] = [];
  report.dims.forEach((entry, i) => {
    const trials = entry.trials.filter(isTrial);
    if (trials.length === 0) return; // every trial errored at this dimension
    let stat: { mean: number; std: number };
    if (threshold) {
      stat = meanStd(trials.map((r) => r.value_projected / report.baseline.value));
    } else if (projected) {
      stat = meanStd(trials.map((r) => r.rel_err_projected));
    } else {
      const mean = entry.mean_rel_err_lifted;
      const std = entry.std_rel_err_lifted;
      if (mean === null || std === null) {
        stat = meanStd(trials.map((r) => r.rel_err_lifted));
      } else {
        stat = { mean, std };
      }
    }
    points.push({ x: entry.t, mean: stat.mean, std: stat.std });
  });
  if (points.length === 0) {
    throw new SchemaError("dims", `no plottable trials in ${path}`);
  }
  return { label: report.config.dataset.label, points };
}

export function render(
  reports: { report: Report; path: string }[],
  outDir: string,
): ManifestEntry[] {
  const groups = new Map<string, { report: Report; path: string }[]>();
  for (const item of reports) {
    const key = problemKey(item.report);
    const group = groups.get(key) ?? [];
    group.push(item);
    groups.set(key, group);
  }

  const manifest: ManifestEntry[] = [];
  for (const [key, group] of [...groups.entries()].sort()) {
    const threshold = isThreshold(group[0].report);
    const curves = group.map(({ report, path }) => curveFromReport(report, path));
    const svg = renderFigure({
      title: key,
      xLabel: "projection dimension t",
      yLabel: threshold ? "ratio to ambient optimum" : "relative error",
      curves,
      referenceY: threshold
        ? { value: Math.SQRT2, label: "sqrt(2)" }
        : undefined,
    });
    const file = `${key.replace(/[^a-zA-Z0-9_-]+/g, "_")}.svg`;
    writeFileSync(join(outDir, file), svg, "utf8");
    manifest.push({ problem: key, file, curves: curves.map((c) => c.label) });
  }
  writeFileSync(
    join(outDir, "manifest.json"),
    JSON.stringify({ figures: manifest }, null, 2) + "\n",
    "utf8",
  );
  return manifest;
}
