/** Minimal deterministic SVG line plots: mean curves with shaded ±1σ bands. */

export interface CurvePoint {
  x: number;
  mean: number;
  std: number;
}

export interface Curve {
  label: string;
  points: CurvePoint[];
}

export interface FigureSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  curves: Curve[];
  /** Optional dashed horizontal reference line, e.g. at sqrt(2). */
  referenceY?: { value: number; label: string };
}

const WIDTH = 640;
const HEIGHT = 420;
const MARGIN = { top: 40, right: 30, bottom: 52, left: 64 };
const PALETTE = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"];

const fmt = (v: number): string => {
  const s = v.toFixed(3);
  return s.replace(/\.?0+$/, "") || "0";
};

function niceTicks(lo: number, hi: number, count: number): number[] {
  if (hi <= lo) hi = lo + 1;
  const span = hi - lo;
  const step = Math.pow(10, Math.floor(Math.log10(span / count)));
  const err = (span / count) / step;
  const mult = err >= 7.5 ? 10 : err >= 3.5 ? 5 : err >= 1.5 ? 2 : 1;
  const s = step * mult;
  const start = Math.ceil(lo / s) * s;
  const ticks: number[] = [];
  for (let v = start; v <= hi + 1e-12; v += s) ticks.push(Number(v.toFixed(12)));
  return ticks;
}

export function renderFigure(spec: FigureSpec): string {
  const xs = spec.curves.flatMap((c) => c.points.map((p) => p.x));
  const ysAll = spec.curves.flatMap((c) =>
    c.points.flatMap((p) => [p.mean - p.std, p.mean + p.std]),
  );
  if (spec.referenceY) ysAll.push(spec.referenceY.value);
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  let yMin = Math.min(0, ...ysAll);
  let yMax = Math.max(...ysAll);
  if (yMax === yMin) yMax = yMin + 1;
  const pad = 0.05 * (yMax - yMin);
  yMin -= pad;
  yMax += pad;

  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const sx = (x: number): number =>
    xMax === xMin
      ? MARGIN.left + plotW / 2
      : MARGIN.left + ((x - xMin) / (xMax - xMin)) * plotW;
  const sy = (y: number): number => MARGIN.top + (1 - (y - yMin) / (yMax - yMin)) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif">`,
  );
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);
  parts.push(
    `<text x="${WIDTH / 2}" y="22" text-anchor="middle" font-size="15">${escapeXml(spec.title)}</text>`,
  );

  // axes
  const x0 = MARGIN.left;
  const y0 = MARGIN.top + plotH;
  parts.push(
    `<line x1="${x0}" y1="${y0}" x2="${x0 + plotW}" y2="${y0}" stroke="black"/>`,
    `<line x1="${x0}" y1="${MARGIN.top}" x2="${x0}" y2="${y0}" stroke="black"/>`,
  );
  for (const tx of niceTicks(xMin, xMax, 6)) {
    const px = sx(tx);
    parts.push(
      `<line x1="${px}" y1="${y0}" x2="${px}" y2="${y0 + 5}" stroke="black"/>`,
      `<text x="${px}" y="${y0 + 18}" text-anchor="middle" font-size="11">${fmt(tx)}</text>`,
    );
  }
  for (const ty of niceTicks(yMin, yMax, 6)) {
    const py = sy(ty);
    parts.push(
      `<line x1="${x0 - 5}" y1="${py}" x2="${x0}" y2="${py}" stroke="black"/>`,
      `<text x="${x0 - 8}" y="${py + 4}" text-anchor="end" font-size="11">${fmt(ty)}</text>`,
    );
  }
  parts.push(
    `<text x="${x0 + plotW / 2}" y="${HEIGHT - 14}" text-anchor="middle" font-size="13">${escapeXml(spec.xLabel)}</text>`,
    `<text x="18" y="${MARGIN.top + plotH / 2}" text-anchor="middle" font-size="13" transform="rotate(-90 18 ${MARGIN.top + plotH / 2})">${escapeXml(spec.yLabel)}</text>`,
  );

  if (spec.referenceY) {
    const py = sy(spec.referenceY.value);
    parts.push(
      `<line class="reference-line" x1="${x0}" y1="${py}" x2="${x0 + plotW}" y2="${py}" stroke="#555" stroke-dasharray="6 4"/>`,
      `<text x="${x0 + plotW - 4}" y="${py - 6}" text-anchor="end" font-size="11" fill="#555">${escapeXml(spec.referenceY.label)}</text>`,
    );
  }

  spec.curves.forEach((curve, ci) => {
    const color = PALETTE[ci % PALETTE.length];
    const pts = [...curve.points].sort((a, b) => a.x - b.x);
    const upper = pts.map((p) => `${sx(p.x)},${sy(p.mean + p.std)}`);
    const lower = pts.map((p) => `${sx(p.x)},${sy(p.mean - p.std)}`).reverse();
    parts.push(
      `<polygon class="band" points="${upper.concat(lower).join(" ")}" fill="${color}" opacity="0.18"/>`,
    );
    const line = pts.map((p) => `${sx(p.x)},${sy(p.mean)}`).join(" ");
    parts.push(
      `<polyline class="mean" points="${line}" fill="none" stroke="${color}" stroke-width="2"/>`,
    );
    for (const p of pts) {
      parts.push(`<circle cx="${sx(p.x)}" cy="${sy(p.mean)}" r="3" fill="${color}"/>`);
    }
    // legend entry
    const lx = x0 + plotW - 150;
    const ly = MARGIN.top + 8 + ci * 18;
    parts.push(
      `<rect x="${lx}" y="${ly - 9}" width="12" height="12" fill="${color}"/>`,
      `<text class="legend" x="${lx + 18}" y="${ly + 2}" font-size="12">${escapeXml(curve.label)}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n");
}

function escapeXml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
