import assert from "node:assert/strict";
import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";
import { test } from "node:test";

import { EXPECTED_HEADER } from "../src/csv";
import { render } from "../src/render";

function writeSurfaceCsv(dir: string, name: string, nx = 6, ny = 5): string {
  const lines = [EXPECTED_HEADER];
  for (let i = 0; i < nx; i++) {
    for (let j = 0; j < ny; j++) {
      const p = i / (nx - 1);
      const alpha = (j / (ny - 1)) * Math.PI;
      const value = Math.sin(alpha) * (1 - p);
      lines.push(`depol,${p},${alpha},0,0,0,0,negativity,${value}`);
    }
  }
  const file = path.join(dir, name);
  fs.writeFileSync(file, lines.join("\n") + "\n");
  return file;
}

function tmpdir(): string {
  return fs.mkdtempSync(path.join(os.tmpdir(), "figtest-"));
}

test("surface figure renders cells, axes, and colorbar", () => {
  const dir = tmpdir();
  const csv = writeSurfaceCsv(dir, "s.csv");
  const out = path.join(dir, "s.svg");
  const channel = render({ csv, metric: "negativity", kind: "surface", x: "p", y: "alpha", out, title: "t" });
  assert.equal(channel, "depol");
  const svg = fs.readFileSync(out, "utf8");
  assert.ok(svg.startsWith("<svg"));
  assert.ok((svg.match(/<rect/g) ?? []).length > 6 * 5);
  assert.ok(svg.includes("rotate(-90"));
});

test("contour figure renders level segments", () => {
  const dir = tmpdir();
  const csv = writeSurfaceCsv(dir, "c.csv", 9, 9);
  const out = path.join(dir, "c.svg");
  render({ csv, metric: "negativity", kind: "contour", x: "p", y: "alpha", out, title: "t" });
  const svg = fs.readFileSync(out, "utf8");
  assert.ok((svg.match(/<line/g) ?? []).length > 20);
});

test("line figure renders one polyline per metric", () => {
  const dir = tmpdir();
  const lines = [EXPECTED_HEADER];
  for (let i = 0; i <= 10; i++) {
    const p = i / 10;
    for (let k = 1; k <= 4; k++) {
      lines.push(`dephasing,${p},0.785,0,0.7,1.5708,0.4,kraus_amp${k},${k === 1 ? 1 - p / 2 : p / (2 * k)}`);
    }
  }
  const csv = path.join(dir, "l.csv");
  fs.writeFileSync(csv, lines.join("\n") + "\n");
  const out = path.join(dir, "l.svg");
  render({ csv, metric: "kraus_amplitudes", kind: "line", x: "p", out, title: "amps" });
  const svg = fs.readFileSync(out, "utf8");
  assert.equal((svg.match(/<polyline/g) ?? []).length, 4);
  assert.ok(svg.includes("kraus_amp3"));
});

test("ragged input is a hard error", () => {
  const dir = tmpdir();
  const csv = writeSurfaceCsv(dir, "r.csv");
  const text = fs.readFileSync(csv, "utf8").trim().split("\n");
  fs.writeFileSync(csv, text.slice(0, -1).join("\n") + "\n");
  assert.throws(
    () => render({ csv, metric: "negativity", kind: "surface", x: "p", y: "alpha", out: path.join(dir, "r.svg"), title: "t" }),
    /ragged/
  );
});

test("mixed channels are rejected", () => {
  const dir = tmpdir();
  const csv = path.join(dir, "m.csv");
  fs.writeFileSync(
    csv,
    [EXPECTED_HEADER, "dephasing,0,0,0,0,0,0,negativity,1", "depol,1,0,0,0,0,0,negativity,0"].join("\n")
  );
  assert.throws(
    () => render({ csv, metric: "negativity", kind: "line", x: "p", out: path.join(dir, "m.svg"), title: "t" }),
    /single channel/
  );
});
