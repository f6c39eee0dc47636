import { SweepRow } from "./csv";

export type Axis = "p" | "alpha" | "beta" | "theta1" | "theta2" | "theta3";

export interface Grid {
  x: number[];
  y: number[];
  /** z[j][i] is the value at (x[i], y[j]) */
  z: number[][];
}

function sortedUnique(values: number[]): number[] {
  return Array.from(new Set(values)).sort((a, b) => a - b);
}

/**
 * Pivot sweep rows onto a full rectangular (x, y) grid.  Every grid point
 * must appear exactly once; a ragged or duplicated grid is an error.
 */
export function pivotGrid(rows: SweepRow[], xAxis: Axis, yAxis: Axis): Grid {
  if (rows.length === 0) {
    throw new Error("no rows to pivot");
  }
  const x = sortedUnique(rows.map((r) => r[xAxis]));
  const y = sortedUnique(rows.map((r) => r[yAxis]));
  if (x.length * y.length !== rows.length) {
    throw new Error(
      `ragged grid: ${x.length} x ${y.length} axis points but ${rows.length} rows`
    );
  }
  const index = new Map<string, number>();
  for (const row of rows) {
    const key = `${row[xAxis]}|${row[yAxis]}`;
    if (index.has(key)) {
      throw new Error(`duplicate grid point (${row[xAxis]}, ${row[yAxis]})`);
    }
    index.set(key, row.value);
  }
  const z: number[][] = [];
  for (const yv of y) {
    const zRow: number[] = [];
    for (const xv of x) {
      const value = index.get(`${xv}|${yv}`);
      if (value === undefined) {
        throw new Error(`missing grid point (${xv}, ${yv})`);
      }
      zRow.push(value);
    }
    z.push(zRow);
  }
  return { x, y, z };
}

export interface Series {
  name: string;
  x: number[];
  y: number[];
}

/** Group rows into one line series per metric name, ordered along xAxis. */
export function pivotSeries(rows: SweepRow[], xAxis: Axis): Series[] {
  const byMetric = new Map<string, SweepRow[]>();
  for (const row of rows) {
    const bucket = byMetric.get(row.metric);
    if (bucket) {
      bucket.push(row);
    } else {
      byMetric.set(row.metric, [row]);
    }
  }
  const series: Series[] = [];
  for (const [name, bucket] of byMetric) {
    bucket.sort((a, b) => a[xAxis] - b[xAxis]);
    series.push({
      name,
      x: bucket.map((r) => r[xAxis]),
      y: bucket.map((r) => r.value),
    });
  }
  series.sort((a, b) => (a.name < b.name ? -1 : 1));
  return series;
}

export function valueRange(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!(lo <= hi)) {
    throw new Error("empty value range");
  }
  if (lo === hi) {
    hi = lo + 1e-12;
  }
  return [lo, hi];
}
