/**
 * Minimal deterministic SVG renderer for FigureSpec objects.
 *
 * No DOM, no fonts to measure: layout uses fixed margins and character
 * counts, which keeps the output byte-stable across runs and platforms.
 */

import { FigureSpec, Series } from "./figspec.js";

export interface RenderOptions {
  width: number;
  height: number;
}

const DEFAULTS: RenderOptions = { width: 760, height: 520 };
const MARGIN = { top: 40, right: 24, bottom: 48, left: 64 };

interface Scale {
  (value: number): number;
  domain: [number, number];
}

function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const fn = ((value: number) =>
    r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  fn.domain = domain;
  return fn;
}

/** Tick positions at 1/2/5 steps covering the domain. */
export function niceTicks(lo: number, hi: number, count = 6): number[] {
  if (!(hi > lo)) return [lo];
  const rawStep = (hi - lo) / Math.max(count - 1, 1);
  const power = Math.floor(Math.log10(rawStep));
  const base = 10 ** power;
  let step = 10 * base;
  for (const mult of [1, 2, 5]) {
    if (mult * base >= rawStep) {
      step = mult * base;
      break;
    }
  }
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
    ticks.push(parseFloat(v.toPrecision(12)));
  }
  return ticks;
}

function fmt(value: number): string {
  if (value === 0) return "0";
  return String(parseFloat(value.toPrecision(4)));
}

function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!Number.isFinite(lo)) return [0, 1];
  if (lo === hi) return [lo - 0.5, hi + 0.5];
  return [lo, hi];
}

function pad([lo, hi]: [number, number]): [number, number] {
  const slack = (hi - lo) * 0.04;
  return [lo - slack, hi + slack];
}

const esc = (text: string) =>
  text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");

function seriesPaths(s: Series, sx: Scale, sy: Scale): string {
  const op = s.opacity !== undefined ? ` opacity="${s.opacity}"` : "";
  if (s.kind === "line") {
    const pts = s.x.map((x, i) => `${sx(x).toFixed(2)},${sy(s.y[i]).toFixed(2)}`);
    const dash = s.dash ? ` stroke-dasharray="${s.dash}"` : "";
    return `<polyline fill="none" stroke="${s.color}" stroke-width="1.8"` +
      `${dash}${op} points="${pts.join(" ")}"/>`;
  }
  const dots = s.x.map((x, i) => {
    const fill = s.pointColors ? s.pointColors[i] : s.color;
    return `<circle cx="${sx(x).toFixed(2)}" cy="${sy(s.y[i]).toFixed(2)}" ` +
      `r="2.2" fill="${fill}"/>`;
  });
  return `<g${op}>${dots.join("")}</g>`;
}

export function renderSvg(spec: FigureSpec,
                          options: Partial<RenderOptions> = {}): string {
  const { width, height } = { ...DEFAULTS, ...options };
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;

  const xs = spec.series.flatMap((s) => s.x);
  const ys = spec.series.flatMap((s) => s.y);
  let xDomain = pad(extent(xs));
  let yDomain = pad(extent(ys));
  if (spec.diagonal) {
    // square-ish domain so the 45-degree guide is meaningful
    const lo = Math.min(xDomain[0], yDomain[0]);
    const hi = Math.max(xDomain[1], yDomain[1]);
    xDomain = [lo, hi];
    yDomain = [lo, hi];
  }
  const sx = linearScale(xDomain, [MARGIN.left, MARGIN.left + plotW]);
  const sy = linearScale(yDomain, [MARGIN.top + plotH, MARGIN.top]);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" ` +
    `height="${height}" viewBox="0 0 ${width} ${height}" ` +
    `font-family="Helvetica, Arial, sans-serif">`);
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  parts.push(`<text x="${width / 2}" y="22" text-anchor="middle" ` +
    `font-size="14">${esc(spec.title)}</text>`);

  // axes, ticks, grid
  const axisY = MARGIN.top + plotH;
  parts.push(`<g stroke="#222" stroke-width="1">` +
    `<line x1="${MARGIN.left}" y1="${axisY}" x2="${MARGIN.left + plotW}" y2="${axisY}"/>` +
    `<line x1="${MARGIN.left}" y1="${MARGIN.top}" x2="${MARGIN.left}" y2="${axisY}"/></g>`);
  for (const t of niceTicks(xDomain[0], xDomain[1])) {
    const x = sx(t).toFixed(2);
    parts.push(`<line x1="${x}" y1="${axisY}" x2="${x}" y2="${axisY + 5}" stroke="#222"/>`);
    parts.push(`<line x1="${x}" y1="${MARGIN.top}" x2="${x}" y2="${axisY}" ` +
      `stroke="#000" stroke-opacity="0.07"/>`);
    parts.push(`<text x="${x}" y="${axisY + 18}" text-anchor="middle" ` +
      `font-size="11">${fmt(t)}</text>`);
  }
  for (const t of niceTicks(yDomain[0], yDomain[1])) {
    const y = sy(t).toFixed(2);
    parts.push(`<line x1="${MARGIN.left - 5}" y1="${y}" x2="${MARGIN.left}" y2="${y}" stroke="#222"/>`);
    parts.push(`<line x1="${MARGIN.left}" y1="${y}" x2="${MARGIN.left + plotW}" y2="${y}" ` +
      `stroke="#000" stroke-opacity="0.07"/>`);
    parts.push(`<text x="${MARGIN.left - 8}" y="${y}" text-anchor="end" ` +
      `dominant-baseline="middle" font-size="11">${fmt(t)}</text>`);
  }
  parts.push(`<text x="${MARGIN.left + plotW / 2}" y="${height - 10}" ` +
    `text-anchor="middle" font-size="12">${esc(spec.xLabel)}</text>`);
  parts.push(`<text x="16" y="${MARGIN.top + plotH / 2}" text-anchor="middle" ` +
    `font-size="12" transform="rotate(-90 16 ${MARGIN.top + plotH / 2})">` +
    `${esc(spec.yLabel)}</text>`);

  if (spec.diagonal) {
    const lo = Math.max(xDomain[0], yDomain[0]);
    const hi = Math.min(xDomain[1], yDomain[1]);
    parts.push(`<line x1="${sx(lo).toFixed(2)}" y1="${sy(lo).toFixed(2)}" ` +
      `x2="${sx(hi).toFixed(2)}" y2="${sy(hi).toFixed(2)}" ` +
      `stroke="${spec.diagonal.color}" stroke-width="1.4" stroke-dasharray="6 5"/>`);
    parts.push(`<text x="${sx(hi).toFixed(2)}" y="${(sy(hi) - 6).toFixed(2)}" ` +
      `text-anchor="end" font-size="11" fill="${spec.diagonal.color}">` +
      `${esc(spec.diagonal.label)}</text>`);
  }

  for (const s of spec.series) {
    parts.push(seriesPaths(s, sx, sy));
  }

  // legend, top-right inside the plot frame
  spec.series.forEach((s, i) => {
    const y = MARGIN.top + 14 + 16 * i;
    const x0 = MARGIN.left + plotW - 160;
    if (s.kind === "line") {
      const dash = s.dash ? ` stroke-dasharray="${s.dash}"` : "";
      parts.push(`<line x1="${x0}" y1="${y - 4}" x2="${x0 + 22}" y2="${y - 4}" ` +
        `stroke="${s.color}" stroke-width="1.8"${dash}/>`);
    } else {
      parts.push(`<circle cx="${x0 + 11}" cy="${y - 4}" r="3" fill="${s.color}"/>`);
    }
    parts.push(`<text x="${x0 + 28}" y="${y}" font-size="11">${esc(s.label)}</text>`);
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
