import * as crypto from "crypto";
import * as fs from "fs";
import * as path from "path";

import { FigureSpec, render } from "./render";

/**
 * The default figure set: one negativity surface and one gate-fidelity
 * surface per channel (the depolarizing fidelity as a contour for variety),
 * plus Kraus-amplitude line plots for dephasing and amplitude damping.
 * Figure inputs are the CSVs written by the sweep command's default grids;
 * rendering never recomputes physics.
 */
export function defaultFigureSpecs(inDir: string, outDir: string): FigureSpec[] {
  const csv = (name: string) => path.join(inDir, name);
  const out = (name: string) => path.join(outDir, name);
  return [
    { csv: csv("negativity-dephasing.csv"), metric: "negativity", kind: "surface", x: "p", y: "alpha", out: out("negativity-dephasing.svg"), title: "Negativity N(1) vs dephasing strength" },
    { csv: csv("gate_fidelity-dephasing.csv"), metric: "gate_fidelity", kind: "surface", x: "p", y: "theta2", out: out("gate_fidelity-dephasing.svg"), title: "Gate fidelity vs dephasing strength" },
    { csv: csv("negativity-amp.csv"), metric: "negativity", kind: "surface", x: "p", y: "alpha", out: out("negativity-amp.svg"), title: "Negativity N(1) vs amplitude damping" },
    { csv: csv("gate_fidelity-amp.csv"), metric: "gate_fidelity", kind: "surface", x: "p", y: "theta2", out: out("gate_fidelity-amp.svg"), title: "Gate fidelity vs amplitude damping" },
    { csv: csv("negativity-depol.csv"), metric: "negativity", kind: "surface", x: "p", y: "alpha", out: out("negativity-depol.svg"), title: "Negativity N(1) vs depolarizing strength" },
    { csv: csv("gate_fidelity-depol.csv"), metric: "gate_fidelity", kind: "contour", x: "p", y: "theta2", out: out("gate_fidelity-depol.svg"), title: "Gate fidelity vs depolarizing strength" },
    { csv: csv("kraus_amplitudes-dephasing.csv"), metric: "kraus_amplitudes", kind: "line", x: "p", out: out("kraus_amplitudes-dephasing.svg"), title: "Kraus amplitudes vs dephasing strength" },
    { csv: csv("kraus_amplitudes-amp.csv"), metric: "kraus_amplitudes", kind: "line", x: "p", out: out("kraus_amplitudes-amp.svg"), title: "Kraus amplitudes vs amplitude damping" },
  ];
}

export interface ManifestEntry {
  image: string;
  csv: string;
  csvSha256: string;
  channel: string;
  metric: string;
  kind: string;
}

function sha256(filePath: string): string {
  return crypto.createHash("sha256").update(fs.readFileSync(filePath)).digest("hex");
}

export function makeFigures(inDir: string, outDir: string, specs?: FigureSpec[]): ManifestEntry[] {
  fs.mkdirSync(outDir, { recursive: true });
  const manifest: ManifestEntry[] = [];
  for (const spec of specs ?? defaultFigureSpecs(inDir, outDir)) {
    const channel = render(spec);
    manifest.push({
      image: path.basename(spec.out),
      csv: path.basename(spec.csv),
      csvSha256: sha256(spec.csv),
      channel,
      metric: spec.metric,
      kind: spec.kind,
    });
  }
  fs.writeFileSync(
    path.join(outDir, "manifest.json"),
    JSON.stringify(manifest, null, 2) + "\n"
  );
  return manifest;
}
