import assert from "node:assert/strict";
import { test } from "node:test";

import { SweepRow } from "../src/csv";
import { pivotGrid, pivotSeries, valueRange } from "../src/grid";

function row(p: number, alpha: number, value: number, metric = "negativity"): SweepRow {
  return { channel: "dephasing", p, alpha, beta: 0, theta1: 0, theta2: 0, theta3: 0, metric, value };
}

test("pivots a rectangular grid", () => {
  const rows = [row(0, 0, 1), row(0, 1, 2), row(0.5, 0, 3), row(0.5, 1, 4)];
  const grid = pivotGrid(rows, "p", "alpha");
  assert.deepEqual(grid.x, [0, 0.5]);
  assert.deepEqual(grid.y, [0, 1]);
  assert.deepEqual(grid.z, [
    [1, 3],
    [2, 4],
  ]);
});

test("rejects ragged grids", () => {
  assert.throws(() => pivotGrid([row(0, 0, 1), row(0, 1, 2), row(0.5, 0, 3)], "p", "alpha"), /ragged/);
});

test("rejects duplicate points", () => {
  assert.throws(
    () => pivotGrid([row(0, 0, 1), row(0, 0, 2), row(0.5, 0, 3), row(0.5, 1, 4)], "p", "alpha"),
    /ragged|duplicate/
  );
});

test("splits series by metric and orders along x", () => {
  const rows = [
    row(0.5, 0, 0.4, "kraus_amp1"),
    row(0, 0, 1.0, "kraus_amp1"),
    row(0, 0, 0.0, "kraus_amp2"),
    row(0.5, 0, 0.2, "kraus_amp2"),
  ];
  const series = pivotSeries(rows, "p");
  assert.equal(series.length, 2);
  assert.deepEqual(series[0].name, "kraus_amp1");
  assert.deepEqual(series[0].x, [0, 0.5]);
  assert.deepEqual(series[0].y, [1.0, 0.4]);
});

test("value range handles flat data", () => {
  const [lo, hi] = valueRange([2, 2, 2]);
  assert.equal(lo, 2);
  assert.ok(hi > lo);
  assert.throws(() => valueRange([]), /empty/);
});
