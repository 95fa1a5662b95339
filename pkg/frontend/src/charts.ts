/** SVG renderers for the four benchmark chart kinds.
 *
 * All renderers are pure functions of (rows, options) and emit a
 * deterministic SVG string: fixed canvas size, data coordinates computed
 * from the rows alone.
 */

import { SummaryRow, columnValue, hasColumn } from "./csv";
import { relPerfHex } from "./color";

export type ChartKind =
  | "time-vs-n"
  | "time-vs-n-log"
  | "relperf-scatter"
  | "relperf-heatmap";

export const CHART_KINDS: ChartKind[] = [
  "time-vs-n",
  "time-vs-n-log",
  "relperf-scatter",
  "relperf-heatmap",
];

export interface ChartOptions {
  /** Column used as the x axis for scatter/heatmap (e.g. inv_pct). */
  xColumn?: string;
  width?: number;
  height?: number;
}

export class ChartError extends Error {}

const WIDTH = 640;
const HEIGHT = 480;
const MARGIN = { top: 32, right: 24, bottom: 48, left: 64 };

const SERIES_COLORS = [
  "#1f77b4",
  "#ff7f0e",
  "#2ca02c",
  "#d62728",
  "#9467bd",
  "#8c564b",
];

/** Minimum and maximum dot areas (px^2) for size-proportional scatters. */
export const DOT_AREA_MIN = 12;
export const DOT_AREA_MAX = 220;

/** Dot area grows affinely with n, so it is strictly increasing in n. */
export function dotArea(n: number, nMin: number, nMax: number): number {
  if (nMax <= nMin) {
    return (DOT_AREA_MIN + DOT_AREA_MAX) / 2;
  }
  const t = (n - nMin) / (nMax - nMin);
  return DOT_AREA_MIN + (DOT_AREA_MAX - DOT_AREA_MIN) * t;
}

export function dotRadius(n: number, nMin: number, nMax: number): number {
  return Math.sqrt(dotArea(n, nMin, nMax) / Math.PI);
}

function fmt(x: number): string {
  // Stable short representation for coordinates and labels.
  return Number(x.toFixed(3)).toString();
}

interface Scale {
  (v: number): number;
  ticks: number[];
}

function linearScale(lo: number, hi: number, outLo: number, outHi: number): Scale {
  const span = hi - lo || 1;
  const f = ((v: number) => outLo + ((v - lo) / span) * (outHi - outLo)) as Scale;
  const step = span / 4;
  f.ticks = [0, 1, 2, 3, 4].map((i) => lo + i * step);
  return f;
}

function svgOpen(title: string): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" ` +
    `height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">\n` +
    `<rect width="${WIDTH}" height="${HEIGHT}" fill="#ffffff"/>\n` +
    `<text x="${WIDTH / 2}" y="20" text-anchor="middle" ` +
    `font-family="sans-serif" font-size="14">${title}</text>\n`
  );
}

function axes(xs: Scale, ys: Scale, xLabel: string, yLabel: string): string {
  const x0 = MARGIN.left;
  const x1 = WIDTH - MARGIN.right;
  const y0 = HEIGHT - MARGIN.bottom;
  const y1 = MARGIN.top;
  let out = "";
  out += `<line x1="${x0}" y1="${y0}" x2="${x1}" y2="${y0}" stroke="#000"/>\n`;
  out += `<line x1="${x0}" y1="${y0}" x2="${x0}" y2="${y1}" stroke="#000"/>\n`;
  for (const t of xs.ticks) {
    const px = xs(t);
    out += `<line x1="${fmt(px)}" y1="${y0}" x2="${fmt(px)}" y2="${y0 + 5}" stroke="#000"/>\n`;
    out += `<text x="${fmt(px)}" y="${y0 + 18}" text-anchor="middle" font-family="sans-serif" font-size="10">${fmt(t)}</text>\n`;
  }
  for (const t of ys.ticks) {
    const py = ys(t);
    out += `<line x1="${x0 - 5}" y1="${fmt(py)}" x2="${x0}" y2="${fmt(py)}" stroke="#000"/>\n`;
    out += `<text x="${x0 - 8}" y="${fmt(py + 3)}" text-anchor="end" font-family="sans-serif" font-size="10">${fmt(t)}</text>\n`;
  }
  out += `<text x="${(x0 + x1) / 2}" y="${HEIGHT - 10}" text-anchor="middle" font-family="sans-serif" font-size="12">${xLabel}</text>\n`;
  out += `<text x="16" y="${(y0 + y1) / 2}" text-anchor="middle" font-family="sans-serif" font-size="12" transform="rotate(-90 16 ${(y0 + y1) / 2})">${yLabel}</text>\n`;
  return out;
}

function requireRows(rows: SummaryRow[]): void {
  if (rows.length === 0) {
    throw new ChartError("no data rows to plot");
  }
}

function groupByAlgo(rows: SummaryRow[]): Map<string, SummaryRow[]> {
  const groups = new Map<string, SummaryRow[]>();
  for (const row of rows) {
    const bucket = groups.get(row.algo);
    if (bucket) {
      bucket.push(row);
    } else {
      groups.set(row.algo, [row]);
    }
  }
  for (const bucket of groups.values()) {
    bucket.sort((a, b) => a.n - b.n);
  }
  return groups;
}

function timeChart(rows: SummaryRow[], logScale: boolean): string {
  requireRows(rows);
  const xOf = (r: SummaryRow) => (logScale ? Math.log10(r.n) : r.n);
  const yOf = (r: SummaryRow) =>
    logScale ? Math.log10(Math.max(r.median_ms, 1e-6)) : r.median_ms;
  const xsVals = rows.map(xOf);
  const ysVals = rows.map(yOf);
  const xs = linearScale(
    Math.min(...xsVals),
    Math.max(...xsVals),
    MARGIN.left,
    WIDTH - MARGIN.right,
  );
  const ys = linearScale(
    Math.min(...ysVals, 0),
    Math.max(...ysVals),
    HEIGHT - MARGIN.bottom,
    MARGIN.top,
  );
  const xLabel = logScale ? "log10(n)" : "n";
  const yLabel = logScale ? "log10(median ms)" : "median ms";
  let out = svgOpen(logScale ? "Execution time (log10)" : "Execution time");
  out += axes(xs, ys, xLabel, yLabel);
  let colorIdx = 0;
  for (const [algo, series] of groupByAlgo(rows)) {
    const color = SERIES_COLORS[colorIdx % SERIES_COLORS.length];
    colorIdx += 1;
    const pts = series
      .map((r) => `${fmt(xs(xOf(r)))},${fmt(ys(yOf(r)))}`)
      .join(" ");
    out += `<polyline points="${pts}" fill="none" stroke="${color}" stroke-width="1.5" data-series="${algo}"/>\n`;
    for (const r of series) {
      out += `<circle cx="${fmt(xs(xOf(r)))}" cy="${fmt(ys(yOf(r)))}" r="3" fill="${color}" data-series="${algo}" data-n="${r.n}"/>\n`;
    }
    out += `<text x="${WIDTH - MARGIN.right - 4}" y="${MARGIN.top + 14 * colorIdx}" text-anchor="end" font-family="sans-serif" font-size="11" fill="${color}">${algo}</text>\n`;
  }
  return out + "</svg>\n";
}

/** Pick the x axis for disorder-indexed charts.
 *
 * Summary files key each cell by the generator target; when a file has been
 * enriched with an achieved-disorder column matching the requested axis
 * name, that column wins, otherwise target_pct stands in for it.
 */
function resolveXColumn(rows: SummaryRow[], requested: string): string {
  if (hasColumn(rows, requested)) {
    return requested;
  }
  if (hasColumn(rows, "target_pct")) {
    return "target_pct";
  }
  throw new ChartError(`missing CSV columns: ${requested}, target_pct`);
}

function scatterChart(rows: SummaryRow[], xColumn: string): string {
  requireRows(rows);
  const axisName = resolveXColumn(rows, xColumn);
  const xVal = (r: SummaryRow) => columnValue(r, axisName) as number;
  const ns = rows.map((r) => r.n);
  const nMin = Math.min(...ns);
  const nMax = Math.max(...ns);
  const xsVals = rows.map(xVal);
  const xs = linearScale(
    Math.min(...xsVals),
    Math.max(...xsVals),
    MARGIN.left,
    WIDTH - MARGIN.right,
  );
  const ys = linearScale(-100, 100, HEIGHT - MARGIN.bottom, MARGIN.top);
  let out = svgOpen("Relative performance");
  out += axes(xs, ys, xColumn, "relative performance (%)");
  const zero = ys(0);
  out += `<line x1="${MARGIN.left}" y1="${fmt(zero)}" x2="${WIDTH - MARGIN.right}" y2="${fmt(zero)}" stroke="#999" stroke-dasharray="4 3"/>\n`;
  const ordered = [...rows].sort(
    (a, b) => a.n - b.n || xVal(a) - xVal(b) || a.algo.localeCompare(b.algo),
  );
  for (const r of ordered) {
    const radius = dotRadius(r.n, nMin, nMax);
    const fill = relPerfHex(r.rel_perf_pct);
    out +=
      `<circle cx="${fmt(xs(xVal(r)))}" cy="${fmt(ys(r.rel_perf_pct))}" ` +
      `r="${fmt(radius)}" fill="${fill}" fill-opacity="0.85" stroke="#333" ` +
      `stroke-width="0.5" data-n="${r.n}" data-algo="${r.algo}" ` +
      `data-relperf="${fmt(r.rel_perf_pct)}"/>\n`;
  }
  return out + "</svg>\n";
}

function heatmapChart(rows: SummaryRow[], xColumn: string): string {
  requireRows(rows);
  const axisName = resolveXColumn(rows, xColumn);
  const xVal = (r: SummaryRow) => columnValue(r, axisName) as number;
  const xLevels = [...new Set(rows.map(xVal))].sort((a, b) => a - b);
  const nLevels = [...new Set(rows.map((r) => r.n))].sort((a, b) => a - b);
  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const cellW = plotW / xLevels.length;
  const cellH = plotH / nLevels.length;
  // Cell value: mean relative performance over rows landing in the cell.
  const cells = new Map<string, { sum: number; count: number }>();
  for (const r of rows) {
    const key = `${xVal(r)}|${r.n}`;
    const cell = cells.get(key) ?? { sum: 0, count: 0 };
    cell.sum += r.rel_perf_pct;
    cell.count += 1;
    cells.set(key, cell);
  }
  let out = svgOpen("Relative performance heatmap");
  for (let xi = 0; xi < xLevels.length; xi++) {
    for (let ni = 0; ni < nLevels.length; ni++) {
      const cell = cells.get(`${xLevels[xi]}|${nLevels[ni]}`);
      if (!cell) {
        continue;
      }
      const value = cell.sum / cell.count;
      const px = MARGIN.left + xi * cellW;
      // Largest n on top, matching the time charts' sense of growth.
      const py = MARGIN.top + (nLevels.length - 1 - ni) * cellH;
      out +=
        `<rect x="${fmt(px)}" y="${fmt(py)}" width="${fmt(cellW)}" ` +
        `height="${fmt(cellH)}" fill="${relPerfHex(value)}" ` +
        `data-x="${xLevels[xi]}" data-n="${nLevels[ni]}" ` +
        `data-relperf="${fmt(value)}"/>\n`;
    }
  }
  for (let xi = 0; xi < xLevels.length; xi++) {
    const px = MARGIN.left + (xi + 0.5) * cellW;
    out += `<text x="${fmt(px)}" y="${HEIGHT - MARGIN.bottom + 16}" text-anchor="middle" font-family="sans-serif" font-size="10">${xLevels[xi]}</text>\n`;
  }
  for (let ni = 0; ni < nLevels.length; ni++) {
    const py = MARGIN.top + (nLevels.length - 1 - ni + 0.5) * cellH;
    out += `<text x="${MARGIN.left - 8}" y="${fmt(py + 3)}" text-anchor="end" font-family="sans-serif" font-size="10">${nLevels[ni]}</text>\n`;
  }
  out += `<text x="${WIDTH / 2}" y="${HEIGHT - 10}" text-anchor="middle" font-family="sans-serif" font-size="12">${xColumn}</text>\n`;
  out += `<text x="16" y="${HEIGHT / 2}" text-anchor="middle" font-family="sans-serif" font-size="12" transform="rotate(-90 16 ${HEIGHT / 2})">n</text>\n`;
  return out + "</svg>\n";
}

export function renderChart(
  kind: ChartKind,
  rows: SummaryRow[],
  options: ChartOptions = {},
): string {
  const xColumn = options.xColumn ?? "target_pct";
  switch (kind) {
    case "time-vs-n":
      return timeChart(rows, false);
    case "time-vs-n-log":
      return timeChart(rows, true);
    case "relperf-scatter":
      return scatterChart(rows, xColumn);
    case "relperf-heatmap":
      return heatmapChart(rows, xColumn);
    default:
      throw new ChartError(`unknown chart kind: ${kind}`);
  }
}
