import * as fs from "fs";

export const EXPECTED_HEADER =
  "channel,p,alpha,beta,theta1,theta2,theta3,metric,value";

export interface SweepRow {
  channel: string;
  p: number;
  alpha: number;
  beta: number;
  theta1: number;
  theta2: number;
  theta3: number;
  metric: string;
  value: number;
}

const NUMERIC_COLUMNS = ["p", "alpha", "beta", "theta1", "theta2", "theta3", "value"] as const;

export function parseSweepCsv(text: string): SweepRow[] {
  const lines = text.split("\n").filter((line) => line.trim().length > 0);
  if (lines.length === 0) {
    throw new Error("empty CSV");
  }
  if (lines[0].trim() !== EXPECTED_HEADER) {
    throw new Error(`unexpected CSV header: ${lines[0].trim()}`);
  }
  const rows: SweepRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(",");
    if (cells.length !== 9) {
      throw new Error(`row ${i} has ${cells.length} cells, expected 9`);
    }
    const row: SweepRow = {
      channel: cells[0],
      p: Number(cells[1]),
      alpha: Number(cells[2]),
      beta: Number(cells[3]),
      theta1: Number(cells[4]),
      theta2: Number(cells[5]),
      theta3: Number(cells[6]),
      metric: cells[7],
      value: Number(cells[8]),
    };
    for (const key of NUMERIC_COLUMNS) {
      if (!Number.isFinite(row[key])) {
        throw new Error(`row ${i}: column ${key} is not a finite number`);
      }
    }
    rows.push(row);
  }
  return rows;
}

export function readSweepCsv(path: string): SweepRow[] {
  return parseSweepCsv(fs.readFileSync(path, "utf8"));
}
