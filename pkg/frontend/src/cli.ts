#!/usr/bin/env node
/**
 * render --figure fig3|fig4|fig4-inset --csv <path>... --out <image-path>
 *
 * Reads sweep CSVs produced by the analysis CLI and writes an SVG
 * figure.  Repeat --csv (or pass several paths after it) for figures
 * that overlay more than one sweep.
 */

import process from "node:process";
import { pathToFileURL } from "node:url";

import { FigureId } from "./figspec.js";
import { render } from "./render.js";
import { SchemaMismatch } from "./schema.js";

const FIGURES: FigureId[] = ["fig3", "fig4", "fig4-inset"];

interface Args {
  figureId: FigureId;
  csvPaths: string[];
  outPath: string;
}

export function parseArgs(argv: string[]): Args {
  const rest = argv[0] === "render" ? argv.slice(1) : argv.slice();
  let figure: string | undefined;
  let out: string | undefined;
  const csvPaths: string[] = [];
  for (let i = 0; i < rest.length; i++) {
    const arg = rest[i];
    if (arg === "--figure") {
      figure = rest[++i];
    } else if (arg === "--out") {
      out = rest[++i];
    } else if (arg === "--csv") {
      while (i + 1 < rest.length && !rest[i + 1].startsWith("--")) {
        csvPaths.push(rest[++i]);
      }
    } else {
      throw new Error(`unknown argument "${arg}"`);
    }
  }
  if (!figure || !(FIGURES as string[]).includes(figure)) {
    throw new Error(`--figure must be one of ${FIGURES.join("|")}`);
  }
  if (csvPaths.length === 0) throw new Error("at least one --csv is required");
  if (!out) throw new Error("--out is required");
  return { figureId: figure as FigureId, csvPaths, outPath: out };
}

export function main(argv: string[]): number {
  try {
    const args = parseArgs(argv);
    render({ figureId: args.figureId, csvPaths: args.csvPaths,
             outPath: args.outPath });
    console.log(`wrote ${args.outPath}`);
    return 0;
  } catch (err) {
    if (err instanceof SchemaMismatch) {
      console.error(`error: ${err.message}`);
    } else {
      console.error(`error: ${err instanceof Error ? err.message : err}`);
    }
    return 1;
  }
}

const entry = process.argv[1];
if (entry && import.meta.url === pathToFileURL(entry).href) {
  process.exit(main(process.argv.slice(2)));
}
