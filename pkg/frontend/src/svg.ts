/** Minimal SVG plot builder: axes, heatmaps, contour bands, line series. */

import { colorAt, SERIES_COLORS } from "./color";
import { Grid, Series, valueRange } from "./grid";

export const WIDTH = 720;
export const HEIGHT = 520;
const MARGIN = { left: 70, right: 110, top: 50, bottom: 55 };
const PLOT_W = WIDTH - MARGIN.left - MARGIN.right;
const PLOT_H = HEIGHT - MARGIN.top - MARGIN.bottom;

function fmtTick(v: number): string {
  const rounded = Math.round(v * 1000) / 1000;
  return String(rounded);
}

function escapeXml(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

class Scale {
  constructor(private lo: number, private hi: number, private outLo: number, private outHi: number) {}
  at(v: number): number {
    return this.outLo + ((v - this.lo) / (this.hi - this.lo)) * (this.outHi - this.outLo);
  }
}

function ticks(lo: number, hi: number, count = 6): number[] {
  const out: number[] = [];
  for (let i = 0; i < count; i++) {
    out.push(lo + ((hi - lo) * i) / (count - 1));
  }
  return out;
}

function axes(
  xs: Scale,
  ys: Scale,
  xRange: [number, number],
  yRange: [number, number],
  xLabel: string,
  yLabel: string,
  title: string
): string {
  const parts: string[] = [];
  const x0 = MARGIN.left;
  const y0 = MARGIN.top + PLOT_H;
  parts.push(
    `<rect x="${x0}" y="${MARGIN.top}" width="${PLOT_W}" height="${PLOT_H}" fill="none" stroke="#333"/>`
  );
  for (const t of ticks(xRange[0], xRange[1])) {
    const px = xs.at(t);
    parts.push(`<line x1="${px}" y1="${y0}" x2="${px}" y2="${y0 + 5}" stroke="#333"/>`);
    parts.push(
      `<text x="${px}" y="${y0 + 20}" font-size="12" text-anchor="middle">${fmtTick(t)}</text>`
    );
  }
  for (const t of ticks(yRange[0], yRange[1])) {
    const py = ys.at(t);
    parts.push(`<line x1="${x0 - 5}" y1="${py}" x2="${x0}" y2="${py}" stroke="#333"/>`);
    parts.push(
      `<text x="${x0 - 9}" y="${py + 4}" font-size="12" text-anchor="end">${fmtTick(t)}</text>`
    );
  }
  parts.push(
    `<text x="${x0 + PLOT_W / 2}" y="${HEIGHT - 12}" font-size="14" text-anchor="middle">${escapeXml(xLabel)}</text>`
  );
  parts.push(
    `<text x="20" y="${MARGIN.top + PLOT_H / 2}" font-size="14" text-anchor="middle" transform="rotate(-90 20 ${MARGIN.top + PLOT_H / 2})">${escapeXml(yLabel)}</text>`
  );
  parts.push(
    `<text x="${WIDTH / 2}" y="24" font-size="16" text-anchor="middle" font-weight="bold">${escapeXml(title)}</text>`
  );
  return parts.join("\n");
}

function colorbar(lo: number, hi: number): string {
  const parts: string[] = [];
  const x = WIDTH - MARGIN.right + 30;
  const steps = 40;
  const h = PLOT_H / steps;
  for (let i = 0; i < steps; i++) {
    const t = 1 - i / (steps - 1);
    const y = MARGIN.top + i * h;
    parts.push(
      `<rect x="${x}" y="${y}" width="16" height="${h + 0.5}" fill="${colorAt(t)}"/>`
    );
  }
  parts.push(
    `<rect x="${x}" y="${MARGIN.top}" width="16" height="${PLOT_H}" fill="none" stroke="#333"/>`
  );
  parts.push(
    `<text x="${x + 22}" y="${MARGIN.top + 10}" font-size="11">${fmtTick(hi)}</text>`
  );
  parts.push(
    `<text x="${x + 22}" y="${MARGIN.top + PLOT_H}" font-size="11">${fmtTick(lo)}</text>`
  );
  return parts.join("\n");
}

function document(body: string): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
    `viewBox="0 0 ${WIDTH} ${HEIGHT}">\n<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>\n` +
    body +
    "\n</svg>\n"
  );
}

export function renderHeatmap(grid: Grid, xLabel: string, yLabel: string, title: string): string {
  const [zLo, zHi] = valueRange(grid.z.flat());
  const xRange: [number, number] = [grid.x[0], grid.x[grid.x.length - 1]];
  const yRange: [number, number] = [grid.y[0], grid.y[grid.y.length - 1]];
  const xs = new Scale(xRange[0], xRange[1], MARGIN.left, MARGIN.left + PLOT_W);
  const ys = new Scale(yRange[0], yRange[1], MARGIN.top + PLOT_H, MARGIN.top);
  const cellW = PLOT_W / grid.x.length;
  const cellH = PLOT_H / grid.y.length;
  const cells: string[] = [];
  for (let j = 0; j < grid.y.length; j++) {
    for (let i = 0; i < grid.x.length; i++) {
      const t = (grid.z[j][i] - zLo) / (zHi - zLo);
      const px = MARGIN.left + i * cellW;
      const py = MARGIN.top + PLOT_H - (j + 1) * cellH;
      cells.push(
        `<rect x="${px.toFixed(2)}" y="${py.toFixed(2)}" width="${(cellW + 0.5).toFixed(2)}" ` +
        `height="${(cellH + 0.5).toFixed(2)}" fill="${colorAt(t)}"/>`
      );
    }
  }
  return document(
    cells.join("\n") + "\n" + axes(xs, ys, xRange, yRange, xLabel, yLabel, title) + "\n" + colorbar(zLo, zHi)
  );
}

/** Marching-squares level crossings drawn over a faint heatmap. */
export function renderContour(
  grid: Grid,
  xLabel: string,
  yLabel: string,
  title: string,
  levels = 9
): string {
  const [zLo, zHi] = valueRange(grid.z.flat());
  const xRange: [number, number] = [grid.x[0], grid.x[grid.x.length - 1]];
  const yRange: [number, number] = [grid.y[0], grid.y[grid.y.length - 1]];
  const xs = new Scale(xRange[0], xRange[1], MARGIN.left, MARGIN.left + PLOT_W);
  const ys = new Scale(yRange[0], yRange[1], MARGIN.top + PLOT_H, MARGIN.top);
  const segments: string[] = [];
  for (let k = 1; k <= levels; k++) {
    const level = zLo + ((zHi - zLo) * k) / (levels + 1);
    const color = colorAt(k / (levels + 1));
    for (let j = 0; j < grid.y.length - 1; j++) {
      for (let i = 0; i < grid.x.length - 1; i++) {
        const corners = [
          { x: grid.x[i], y: grid.y[j], v: grid.z[j][i] },
          { x: grid.x[i + 1], y: grid.y[j], v: grid.z[j][i + 1] },
          { x: grid.x[i + 1], y: grid.y[j + 1], v: grid.z[j + 1][i + 1] },
          { x: grid.x[i], y: grid.y[j + 1], v: grid.z[j + 1][i] },
        ];
        const crossings: [number, number][] = [];
        for (let e = 0; e < 4; e++) {
          const a = corners[e];
          const b = corners[(e + 1) % 4];
          if ((a.v - level) * (b.v - level) < 0) {
            const t = (level - a.v) / (b.v - a.v);
            crossings.push([a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)]);
          }
        }
        if (crossings.length >= 2) {
          const [p1, p2] = crossings;
          segments.push(
            `<line x1="${xs.at(p1[0]).toFixed(2)}" y1="${ys.at(p1[1]).toFixed(2)}" ` +
            `x2="${xs.at(p2[0]).toFixed(2)}" y2="${ys.at(p2[1]).toFixed(2)}" ` +
            `stroke="${color}" stroke-width="1.6"/>`
          );
        }
      }
    }
  }
  return document(
    segments.join("\n") + "\n" + axes(xs, ys, xRange, yRange, xLabel, yLabel, title) + "\n" + colorbar(zLo, zHi)
  );
}

export function renderLines(series: Series[], xLabel: string, yLabel: string, title: string): string {
  const allX = series.flatMap((s) => s.x);
  const allY = series.flatMap((s) => s.y);
  const xRange = valueRange(allX);
  const yPad = 0.04 * (valueRange(allY)[1] - valueRange(allY)[0] || 1);
  const yRange: [number, number] = [valueRange(allY)[0] - yPad, valueRange(allY)[1] + yPad];
  const xs = new Scale(xRange[0], xRange[1], MARGIN.left, MARGIN.left + PLOT_W);
  const ys = new Scale(yRange[0], yRange[1], MARGIN.top + PLOT_H, MARGIN.top);
  const parts: string[] = [];
  series.forEach((s, idx) => {
    const color = SERIES_COLORS[idx % SERIES_COLORS.length];
    const points = s.x.map((x, i) => `${xs.at(x).toFixed(2)},${ys.at(s.y[i]).toFixed(2)}`).join(" ");
    parts.push(
      `<polyline points="${points}" fill="none" stroke="${color}" stroke-width="2"/>`
    );
    const ly = MARGIN.top + 16 + idx * 18;
    const lx = WIDTH - MARGIN.right + 14;
    parts.push(`<line x1="${lx}" y1="${ly - 4}" x2="${lx + 18}" y2="${ly - 4}" stroke="${color}" stroke-width="2"/>`);
    parts.push(`<text x="${lx + 23}" y="${ly}" font-size="12">${escapeXml(s.name)}</text>`);
  });
  return document(parts.join("\n") + "\n" + axes(xs, ys, xRange, yRange, xLabel, yLabel, title));
}
