/**
 * Sweep-CSV schema shared with the analysis CLI.
 *
 * The column list is fixed; readers must refuse files whose header
 * drifts, naming the first offending column, so that silent column
 * reordering can never mislabel a plotted quantity.
 */

import { readFileSync } from "node:fs";
import Papa from "papaparse";

export const CSV_COLUMNS = [
  "d", "r", "nbar", "ell",
  "n1", "n2", "ms", "mc",
  "i1", "i2", "i3", "i4",
  "dt2", "dx2", "dy2", "dy2t",
  "ds2", "ds2t", "npt", "nmt",
  "purity", "class",
  "mink_dist", "log_neg", "eof_bound",
  "coord_ok",
] as const;

export type ColumnName = (typeof CSV_COLUMNS)[number];

export interface SweepRow {
  d: number | null;
  r: number | null;
  nbar: number | null;
  ell: number | null;
  n1: number | null;
  n2: number | null;
  ms: number | null;
  mc: number | null;
  i1: number;
  i2: number;
  i3: number;
  i4: number;
  dt2: number | null;
  dx2: number | null;
  dy2: number | null;
  dy2t: number | null;
  ds2: number;
  ds2t: number;
  npt: number;
  nmt: number;
  purity: number;
  class: string;
  mink_dist: number;
  log_neg: number;
  eof_bound: number;
  coord_ok: boolean;
}

export class SchemaMismatch extends Error {
  column: string;

  constructor(column: string, detail: string) {
    super(`schema mismatch at column "${column}": ${detail}`);
    this.column = column;
  }
}

function checkHeader(fields: string[]): void {
  for (let i = 0; i < CSV_COLUMNS.length; i++) {
    if (i >= fields.length) throw new SchemaMismatch(CSV_COLUMNS[i], "missing");
    if (fields[i] !== CSV_COLUMNS[i]) {
      throw new SchemaMismatch(CSV_COLUMNS[i], `found "${fields[i]}"`);
    }
  }
  if (fields.length > CSV_COLUMNS.length) {
    throw new SchemaMismatch(fields[CSV_COLUMNS.length], "unexpected extra column");
  }
}

function toRow(raw: Record<string, string>): SweepRow {
  const num = (col: ColumnName): number | null => {
    const cell = raw[col];
    if (cell === "" || cell === undefined) return null;
    const value = Number(cell);
    if (!Number.isFinite(value)) {
      throw new SchemaMismatch(col, `not a number: "${cell}"`);
    }
    return value;
  };
  const req = (col: ColumnName): number => {
    const value = num(col);
    if (value === null) throw new SchemaMismatch(col, "empty value");
    return value;
  };
  return {
    d: num("d"), r: num("r"), nbar: num("nbar"), ell: num("ell"),
    n1: num("n1"), n2: num("n2"), ms: num("ms"), mc: num("mc"),
    i1: req("i1"), i2: req("i2"), i3: req("i3"), i4: req("i4"),
    dt2: num("dt2"), dx2: num("dx2"), dy2: num("dy2"), dy2t: num("dy2t"),
    ds2: req("ds2"), ds2t: req("ds2t"), npt: req("npt"), nmt: req("nmt"),
    purity: req("purity"),
    class: raw.class ?? "",
    mink_dist: req("mink_dist"),
    log_neg: req("log_neg"),
    eof_bound: req("eof_bound"),
    coord_ok: raw.coord_ok === "1",
  };
}

/** Parse one sweep CSV, enforcing the schema. */
export function parseSweepCsv(text: string): SweepRow[] {
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  // header first: a schema mismatch should name the column, not surface
  // as field-count noise from the row parser
  checkHeader(parsed.meta.fields ?? []);
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    throw new Error(`CSV parse error at row ${e.row}: ${e.message}`);
  }
  return parsed.data.map(toRow);
}

export function readSweepCsv(path: string): SweepRow[] {
  return parseSweepCsv(readFileSync(path, "utf8"));
}

/** Raw string cells of one column, aligned with parseSweepCsv rows. */
export function rawColumn(text: string, column: ColumnName): string[] {
  const lines = text.trim().split("\n");
  const header = lines[0].split(",");
  checkHeader(header);
  const idx = header.indexOf(column);
  return lines.slice(1).map((line) => line.split(",")[idx]);
}
