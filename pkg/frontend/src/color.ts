/** Perceptual dark-blue-to-yellow color ramp (viridis anchor points). */

const ANCHORS: [number, number, number][] = [
  [68, 1, 84],
  [72, 40, 120],
  [62, 74, 137],
  [49, 104, 142],
  [38, 130, 142],
  [31, 158, 137],
  [53, 183, 121],
  [109, 205, 89],
  [180, 222, 44],
  [253, 231, 37],
];

export function colorAt(t: number): string {
  const clamped = Math.min(1, Math.max(0, t));
  const scaled = clamped * (ANCHORS.length - 1);
  const i = Math.min(ANCHORS.length - 2, Math.floor(scaled));
  const frac = scaled - i;
  const rgb = ANCHORS[i].map((a, k) => Math.round(a + frac * (ANCHORS[i + 1][k] - a)));
  return `rgb(${rgb[0]},${rgb[1]},${rgb[2]})`;
}

export const SERIES_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"];
