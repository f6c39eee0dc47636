#!/usr/bin/env node
/** make-figures --in <csv dir> --out <image dir> */

import { makeFigures } from "./figures";

function parseArgs(argv: string[]): { inDir: string; outDir: string } {
  let inDir: string | undefined;
  let outDir: string | undefined;
  for (let i = 0; i < argv.length; i++) {
    if (argv[i] === "--in") {
      inDir = argv[++i];
    } else if (argv[i] === "--out") {
      outDir = argv[++i];
    } else {
      throw new Error(`unknown argument ${argv[i]}`);
    }
  }
  if (!inDir || !outDir) {
    throw new Error("usage: make-figures --in <csv dir> --out <image dir>");
  }
  return { inDir, outDir };
}

try {
  const { inDir, outDir } = parseArgs(process.argv.slice(2));
  const manifest = makeFigures(inDir, outDir);
  for (const entry of manifest) {
    console.log(`${entry.image}  <-  ${entry.csv} (${entry.kind}, ${entry.channel}/${entry.metric})`);
  }
  console.log(`wrote ${manifest.length} figures and manifest.json to ${outDir}`);
} catch (err) {
  console.error(`error: ${err instanceof Error ? err.message : err}`);
  process.exit(1);
}
