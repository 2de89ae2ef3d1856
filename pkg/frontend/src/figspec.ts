/**
 * Figure specifications: pure data extracted from sweep rows.
 *
 * A FigureSpec holds exactly the arrays that end up drawn, so tests can
 * pin the plotted values against the CSV before any rendering happens.
 * Building a spec twice from the same rows yields identical data.
 */

import { SweepRow } from "./schema.js";

export type FigureId = "fig3" | "fig4" | "fig4-inset";

export interface Series {
  label: string;
  kind: "line" | "scatter";
  x: number[];
  y: number[];
  color: string;
  /** SVG dash pattern; solid when absent. */
  dash?: string;
  opacity?: number;
  /** Per-point fills for scatter series (overrides color). */
  pointColors?: string[];
}

export interface DiagonalGuide {
  label: string;
  color: string;
}

export interface FigureSpec {
  figureId: FigureId;
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
  /** 45-degree separatrix guide, drawn across the data range. */
  diagonal?: DiagonalGuide;
}

export const MINK_SCALE = 2000;

/** Region-plot shade: light for small r, dark for large r. */
export function shadeByR(hue: number, r: number, rMax: number): string {
  const t = rMax > 0 ? Math.min(Math.max(r / rMax, 0), 1) : 0;
  const lightness = Math.round(82 - 52 * t);
  return `hsl(${hue}, 72%, ${lightness}%)`;
}

const REGION_HUES = [219, 2];          // base grid blue, fiber grid red
const REGION_LABELS = ["no fiber", "lossy fiber"];

function axisValue(row: SweepRow, column: "r" | "nbar", figure: string): number {
  const value = row[column];
  if (value === null) {
    throw new Error(`${figure} needs the "${column}" column filled on every row`);
  }
  return value;
}

/**
 * Region plot: each CSV becomes one scatter cloud in the
 * (sqrt(dy2t), sqrt(dt2)) plane, shaded by squeezing, with the
 * separatrix along the diagonal.  Rows without coordinates are skipped.
 */
export function buildFig3(rowSets: SweepRow[][]): FigureSpec {
  const series: Series[] = [];
  rowSets.forEach((rows, i) => {
    const usable = rows.filter(
      (row) => row.coord_ok && row.dt2 !== null && row.dy2t !== null);
    const rMax = Math.max(0, ...usable.map((row) => row.r ?? 0));
    const hue = REGION_HUES[Math.min(i, REGION_HUES.length - 1)];
    series.push({
      label: REGION_LABELS[Math.min(i, REGION_LABELS.length - 1)],
      kind: "scatter",
      x: usable.map((row) => Math.sqrt(row.dy2t as number)),
      y: usable.map((row) => Math.sqrt(row.dt2 as number)),
      color: `hsl(${hue}, 72%, 45%)`,
      pointColors: usable.map((row) => shadeByR(hue, row.r ?? 0, rMax)),
    });
  });
  return {
    figureId: "fig3",
    title: "squeezed-thermal states vs the separability boundary",
    xLabel: "sqrt(dy2t)",
    yLabel: "sqrt(dt2)",
    series,
    diagonal: { label: "separatrix", color: "#444444" },
  };
}

function measureSeries(rows: SweepRow[], xColumn: "r" | "nbar",
                       figure: string, suffix = "", opacity?: number): Series[] {
  const x = rows.map((row) => axisValue(row, xColumn, figure));
  return [
    {
      label: `mink_dist/${MINK_SCALE}${suffix}`,
      kind: "line",
      x,
      y: rows.map((row) => row.mink_dist / MINK_SCALE),
      color: "#1965b0",
      opacity,
    },
    {
      label: `eof_bound${suffix}`,
      kind: "line",
      x,
      y: rows.map((row) => row.eof_bound),
      color: "#dc050c",
      dash: "7 4",
      opacity,
    },
    {
      label: `log_neg${suffix}`,
      kind: "line",
      x,
      y: rows.map((row) => row.log_neg),
      color: "#4eb265",
      dash: "2 4",
      opacity,
    },
  ];
}

/** Measure comparison along the squeezing axis. */
export function buildFig4(rows: SweepRow[]): FigureSpec {
  return {
    figureId: "fig4",
    title: "entanglement measures vs squeezing",
    xLabel: "r",
    yLabel: "measure",
    series: measureSeries(rows, "r", "fig4"),
  };
}

/**
 * Thermal-occupation inset: first CSV drawn solid, an optional second
 * one (the asymmetric-fiber variant) shadowed underneath.
 */
export function buildFig4Inset(rowSets: SweepRow[][]): FigureSpec {
  const series: Series[] = [];
  rowSets.forEach((rows, i) => {
    const suffix = rowSets.length > 1 ? (i === 0 ? "" : " (fiber)") : "";
    series.push(...measureSeries(rows, "nbar", "fig4-inset", suffix,
                                 i === 0 ? undefined : 0.45));
  });
  return {
    figureId: "fig4-inset",
    title: "entanglement measures vs thermal occupation",
    xLabel: "nbar",
    yLabel: "measure",
    series,
  };
}

export function buildSpec(figureId: FigureId, rowSets: SweepRow[][]): FigureSpec {
  if (rowSets.length === 0) throw new Error("at least one CSV is required");
  switch (figureId) {
    case "fig3":
      return buildFig3(rowSets);
    case "fig4":
      if (rowSets.length !== 1) throw new Error("fig4 takes exactly one CSV");
      return buildFig4(rowSets[0]);
    case "fig4-inset":
      if (rowSets.length > 2) throw new Error("fig4-inset takes one or two CSVs");
      return buildFig4Inset(rowSets);
  }
}
