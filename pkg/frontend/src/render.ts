/** Figure job runner: CSV paths in, SVG image out. */

import { mkdirSync, writeFileSync } from "node:fs";
import { dirname } from "node:path";

import { buildSpec, FigureId, FigureSpec } from "./figspec.js";
import { readSweepCsv } from "./schema.js";
import { renderSvg } from "./svg.js";

export interface FigureJob {
  figureId: FigureId;
  csvPaths: string[];
  outPath: string;
}

export function specForJob(job: Pick<FigureJob, "figureId" | "csvPaths">): FigureSpec {
  return buildSpec(job.figureId, job.csvPaths.map(readSweepCsv));
}

/** Render one job; returns the spec that was drawn. */
export function render(job: FigureJob): FigureSpec {
  const spec = specForJob(job);
  const svg = renderSvg(spec);
  mkdirSync(dirname(job.outPath) || ".", { recursive: true });
  writeFileSync(job.outPath, svg, "utf8");
  return spec;
}
