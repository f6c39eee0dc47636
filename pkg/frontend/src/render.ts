import * as fs from "fs";

import { readSweepCsv, SweepRow } from "./csv";
import { Axis, pivotGrid, pivotSeries } from "./grid";
import { renderContour, renderHeatmap, renderLines } from "./svg";

export type PlotKind = "surface" | "contour" | "line";

export interface FigureSpec {
  csv: string;
  metric: string;
  kind: PlotKind;
  x: Axis;
  /** y axis for surface/contour figures; ignored for line plots */
  y?: Axis;
  out: string;
  title: string;
}

function channelOf(rows: SweepRow[]): string {
  const channels = new Set(rows.map((r) => r.channel));
  if (channels.size !== 1) {
    throw new Error(`expected a single channel per CSV, found ${[...channels].join(", ")}`);
  }
  return rows[0].channel;
}

/** Render one figure from its CSV; returns the channel found in the data. */
export function render(spec: FigureSpec): string {
  const rows = readSweepCsv(spec.csv);
  const channel = channelOf(rows);
  let svg: string;
  if (spec.kind === "line") {
    const series = pivotSeries(rows, spec.x);
    svg = renderLines(series, spec.x, "value", spec.title);
  } else {
    if (!spec.y) {
      throw new Error(`${spec.kind} figure needs a y axis`);
    }
    const grid = pivotGrid(rows, spec.x, spec.y);
    svg =
      spec.kind === "surface"
        ? renderHeatmap(grid, spec.x, spec.y, spec.title)
        : renderContour(grid, spec.x, spec.y, spec.title);
  }
  fs.writeFileSync(spec.out, svg);
  return channel;
}
