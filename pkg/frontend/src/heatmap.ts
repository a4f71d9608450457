/**
 * Heatmap of a sweep observable over the (J/J0, T) plane.
 *
 * Every cell carries a data-violated attribute computed directly from the
 * data predicate `value > threshold`; the contour is drawn along edges where
 * that predicate flips, so the overlay can never disagree with the data.
 */

import { parseSelector, pivot, type Table } from "./csv.js";
import type { FigureSpec } from "./figure.js";
import { THRESHOLD_DEFAULT } from "./figure.js";
import { colormap, fmtTick, linearScale, niceTicks, px, svgDocument, textEl } from "./svg.js";

const MARGIN = { top: 36, right: 86, bottom: 46, left: 64 };

export function renderHeatmap(table: Table, spec: FigureSpec): string {
  const width = spec.width ?? 720;
  const height = spec.height ?? 480;
  const threshold = spec.thresholdValue ?? THRESHOLD_DEFAULT;
  const overlay = spec.threshold !== false;
  const selector = parseSelector(spec.value ?? "b_horodecki");

  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;
  let body = "";
  body += textEl(MARGIN.left + plotW / 2, 20, spec.title ?? `${spec.value ?? "b_horodecki"}`, {
    size: 14,
  });

  if (table.rows.length === 0) {
    console.warn("heatmap: CSV has no data rows; rendering empty axes");
    body += emptyAxes(plotW, plotH);
    body += textEl(MARGIN.left + plotW / 2, MARGIN.top + plotH / 2, "no data", { size: 13, color: "#999" });
    return svgDocument(width, height, `<g data-empty="1">\n${body}</g>\n`);
  }

  const grid = pivot(table, selector);
  const nx = grid.xs.length;
  const ny = grid.ys.length;
  const cellW = plotW / nx;
  const cellH = plotH / ny;
  const finite = grid.values.flat().filter((v) => Number.isFinite(v));
  const vMin = Math.min(...finite);
  const vMax = Math.max(...finite);
  const vSpan = vMax - vMin || 1;

  // Cells: x index left to right, y index bottom (smallest T) to top.
  let cells = "";
  const violated = (v: number) => Number.isFinite(v) && v > threshold;
  for (let yi = 0; yi < ny; yi++) {
    for (let xi = 0; xi < nx; xi++) {
      const v = grid.values[yi][xi];
      const fill = Number.isFinite(v) ? colormap((v - vMin) / vSpan) : "#bbbbbb";
      const x = MARGIN.left + xi * cellW;
      const y = MARGIN.top + (ny - 1 - yi) * cellH;
      cells +=
        `<rect x="${px(x)}" y="${px(y)}" width="${px(cellW)}" height="${px(cellH)}" ` +
        `fill="${fill}" data-x="${grid.xs[xi]}" data-y="${grid.ys[yi]}" ` +
        `data-violated="${violated(v) ? 1 : 0}"/>\n`;
    }
  }
  body += `<g shape-rendering="crispEdges">\n${cells}</g>\n`;

  if (overlay) {
    // Contour: edges between neighboring cells whose predicate differs.
    let segments = "";
    for (let yi = 0; yi < ny; yi++) {
      for (let xi = 0; xi < nx; xi++) {
        const here = violated(grid.values[yi][xi]);
        const left = MARGIN.left + xi * cellW;
        const top = MARGIN.top + (ny - 1 - yi) * cellH;
        if (xi + 1 < nx && violated(grid.values[yi][xi + 1]) !== here) {
          segments += `M ${px(left + cellW)} ${px(top)} V ${px(top + cellH)} `;
        }
        if (yi + 1 < ny && violated(grid.values[yi + 1][xi]) !== here) {
          segments += `M ${px(left)} ${px(top)} H ${px(left + cellW)} `;
        }
      }
    }
    if (segments) {
      body +=
        `<path d="${segments.trim()}" stroke="white" stroke-width="2" fill="none" ` +
        `data-contour="${threshold}"/>\n`;
    }
  }

  // Axes: ticks placed at the cell centers of selected grid values.
  const xScale = linearScale(0, nx - 1 || 1, MARGIN.left + cellW / 2, MARGIN.left + plotW - cellW / 2);
  const yScale = linearScale(0, ny - 1 || 1, MARGIN.top + plotH - cellH / 2, MARGIN.top + cellH / 2);
  body += axisFrame(plotW, plotH);
  for (const tick of pickIndexTicks(grid.xs, 8)) {
    const x = xScale(tick);
    body += `<line x1="${px(x)}" y1="${px(MARGIN.top + plotH)}" x2="${px(x)}" y2="${px(MARGIN.top + plotH + 4)}" stroke="#333"/>\n`;
    body += textEl(x, MARGIN.top + plotH + 16, fmtTick(grid.xs[tick]));
  }
  for (const tick of pickIndexTicks(grid.ys, 6)) {
    const y = yScale(tick);
    body += `<line x1="${px(MARGIN.left - 4)}" y1="${px(y)}" x2="${px(MARGIN.left)}" y2="${px(y)}" stroke="#333"/>\n`;
    body += textEl(MARGIN.left - 8, y + 3, fmtTick(grid.ys[tick]), { anchor: "end" });
  }
  body += textEl(MARGIN.left + plotW / 2, height - 10, spec.xlabel ?? "J/J0");
  body += textEl(16, MARGIN.top + plotH / 2, spec.ylabel ?? "T", { rotate: -90 });
  body += colorbar(width, plotH, vMin, vMax);
  return svgDocument(width, height, body);
}

function axisFrame(plotW: number, plotH: number): string {
  return (
    `<rect x="${px(MARGIN.left)}" y="${px(MARGIN.top)}" width="${px(plotW)}" height="${px(plotH)}" ` +
    `fill="none" stroke="#333"/>\n`
  );
}

function emptyAxes(plotW: number, plotH: number): string {
  return axisFrame(plotW, plotH);
}

function pickIndexTicks(values: number[], target: number): number[] {
  if (values.length <= target) return values.map((_, i) => i);
  const stride = Math.ceil(values.length / target);
  const ticks: number[] = [];
  for (let i = 0; i < values.length; i += stride) ticks.push(i);
  return ticks;
}

function colorbar(width: number, plotH: number, vMin: number, vMax: number): string {
  const x = width - MARGIN.right + 26;
  const barW = 14;
  const steps = 64;
  const stepH = plotH / steps;
  let out = "";
  for (let i = 0; i < steps; i++) {
    const frac = 1 - i / (steps - 1);
    const y = MARGIN.top + i * stepH;
    out += `<rect x="${px(x)}" y="${px(y)}" width="${px(barW)}" height="${px(stepH + 0.5)}" fill="${colormap(frac)}"/>\n`;
  }
  out += `<rect x="${px(x)}" y="${px(MARGIN.top)}" width="${px(barW)}" height="${px(plotH)}" fill="none" stroke="#333"/>\n`;
  for (const tick of niceTicks(vMin, vMax, 5)) {
    const y = MARGIN.top + plotH - ((tick - vMin) / (vMax - vMin || 1)) * plotH;
    out += textEl(x + barW + 6, y + 3, fmtTick(tick), { anchor: "start", size: 10 });
  }
  return out;
}
