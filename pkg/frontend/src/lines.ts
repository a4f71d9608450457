/**
 * Stacked line panels versus J/J0: energies, correlators, violation measures.
 * Panels holding a violation-measure column get a dashed guide line at the
 * classical bound.
 */

import { extractSeries, formatSelector, parseSelector, type Selector, type Table } from "./csv.js";
import type { FigureSpec, PanelSpec } from "./figure.js";
import { THRESHOLD_DEFAULT } from "./figure.js";
import { fmtTick, linearScale, niceTicks, px, SERIES_COLORS, svgDocument, textEl } from "./svg.js";

const MARGIN = { top: 34, right: 150, bottom: 44, left: 64 };
const PANEL_GAP = 14;
const BOUND_COLUMNS = new Set(["b_horodecki", "b_formula"]);

interface PanelData {
  spec: PanelSpec;
  series: Array<{ selector: Selector; points: Array<[number, number]> }>;
}

export function renderLines(table: Table, spec: FigureSpec): string {
  const width = spec.width ?? 720;
  const height = spec.height ?? (spec.panels && spec.panels.length > 1 ? 640 : 420);
  const threshold = spec.thresholdValue ?? THRESHOLD_DEFAULT;
  const overlay = spec.threshold !== false;
  const panelSpecs: PanelSpec[] = spec.panels ?? [{ columns: spec.columns ?? [], ylabel: spec.ylabel }];

  let body = "";
  body += textEl(MARGIN.left + (width - MARGIN.left - MARGIN.right) / 2, 20, spec.title ?? "", {
    size: 14,
  });

  if (table.rows.length === 0) {
    console.warn("lines: CSV has no data rows; rendering empty axes");
    const plotW = width - MARGIN.left - MARGIN.right;
    const plotH = height - MARGIN.top - MARGIN.bottom;
    body += `<g data-empty="1"><rect x="${px(MARGIN.left)}" y="${px(MARGIN.top)}" width="${px(plotW)}" height="${px(plotH)}" fill="none" stroke="#333"/></g>\n`;
    body += textEl(MARGIN.left + plotW / 2, MARGIN.top + plotH / 2, "no data", { size: 13, color: "#999" });
    return svgDocument(width, height, body);
  }

  const panels: PanelData[] = panelSpecs.map((p) => ({
    spec: p,
    series: p.columns.map((c) => {
      const selector = parseSelector(c);
      return { selector, points: extractSeries(table, "j_over_j0", selector) };
    }),
  }));

  const xsAll = panels.flatMap((p) => p.series.flatMap((s) => s.points.map(([x]) => x)));
  const xMin = Math.min(...xsAll);
  const xMax = Math.max(...xsAll);
  const plotW = width - MARGIN.left - MARGIN.right;
  const totalH = height - MARGIN.top - MARGIN.bottom - PANEL_GAP * (panels.length - 1);
  const panelH = totalH / panels.length;
  const xScale = linearScale(xMin, xMax, MARGIN.left, MARGIN.left + plotW);

  panels.forEach((panel, pi) => {
    const top = MARGIN.top + pi * (panelH + PANEL_GAP);
    const values = panel.series.flatMap((s) => s.points.map(([, y]) => y));
    const hasBound = overlay && panel.series.some((s) => BOUND_COLUMNS.has(s.selector.column));
    if (hasBound) values.push(threshold);
    let yMin = Math.min(...values);
    let yMax = Math.max(...values);
    const pad = (yMax - yMin || 1) * 0.06;
    yMin -= pad;
    yMax += pad;
    const yScale = linearScale(yMin, yMax, top + panelH, top);

    body += `<rect x="${px(MARGIN.left)}" y="${px(top)}" width="${px(plotW)}" height="${px(panelH)}" fill="none" stroke="#333"/>\n`;
    for (const tick of niceTicks(yMin, yMax, 4)) {
      const y = yScale(tick);
      body += `<line x1="${px(MARGIN.left - 4)}" y1="${px(y)}" x2="${px(MARGIN.left)}" y2="${px(y)}" stroke="#333"/>\n`;
      body += textEl(MARGIN.left - 8, y + 3, fmtTick(tick), { anchor: "end", size: 10 });
    }
    if (panel.spec.ylabel) {
      body += textEl(16, top + panelH / 2, panel.spec.ylabel, { rotate: -90 });
    }
    if (hasBound) {
      const y = yScale(threshold);
      body +=
        `<line x1="${px(MARGIN.left)}" y1="${px(y)}" x2="${px(MARGIN.left + plotW)}" y2="${px(y)}" ` +
        `stroke="#888" stroke-dasharray="6,4" data-guide="${threshold}"/>\n`;
    }
    panel.series.forEach((s, si) => {
      const color = SERIES_COLORS[si % SERIES_COLORS.length];
      const path = s.points
        .map(([x, y], i) => `${i === 0 ? "M" : "L"} ${px(xScale(x))} ${px(yScale(y))}`)
        .join(" ");
      const label = formatSelector(s.selector);
      body += `<path d="${path}" fill="none" stroke="${color}" stroke-width="1.4" data-series="${label}"/>\n`;
      body += textEl(MARGIN.left + plotW + 10, top + 14 + si * 14, label, {
        anchor: "start",
        size: 10,
        color,
      });
    });
  });

  const bottom = MARGIN.top + panels.length * panelH + PANEL_GAP * (panels.length - 1);
  for (const tick of niceTicks(xMin, xMax, 8)) {
    const x = xScale(tick);
    body += `<line x1="${px(x)}" y1="${px(bottom)}" x2="${px(x)}" y2="${px(bottom + 4)}" stroke="#333"/>\n`;
    body += textEl(x, bottom + 16, fmtTick(tick));
  }
  body += textEl(MARGIN.left + plotW / 2, height - 10, spec.xlabel ?? "J/J0");
  return svgDocument(width, height, body);
}
