/** Figure specification: what to plot, from which CSV, into which SVG. */

import { readFileSync } from "fs";

export interface PanelSpec {
  columns: string[];
  ylabel?: string;
}

export interface FigureSpec {
  kind: "heatmap" | "lines";
  input: string;
  output: string;
  /** Heatmap value selector, e.g. "b_horodecki[0,2]". */
  value?: string;
  /** Lines: single-panel shorthand. */
  columns?: string[];
  /** Lines: explicit panel layout (overrides `columns`). */
  panels?: PanelSpec[];
  /** Overlay marking the classical CHSH bound; on unless disabled. */
  threshold?: boolean;
  thresholdValue?: number;
  title?: string;
  xlabel?: string;
  ylabel?: string;
  width?: number;
  height?: number;
}

export class SpecError extends Error {}

export const THRESHOLD_DEFAULT = 2;

export function validateSpec(raw: unknown): FigureSpec {
  if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
    throw new SpecError("figure spec must be a JSON object");
  }
  const spec = raw as Record<string, unknown>;
  if (spec.kind !== "heatmap" && spec.kind !== "lines") {
    throw new SpecError(`kind must be "heatmap" or "lines", got ${JSON.stringify(spec.kind)}`);
  }
  for (const key of ["input", "output"]) {
    if (typeof spec[key] !== "string" || spec[key] === "") {
      throw new SpecError(`${key} must be a non-empty path`);
    }
  }
  if (spec.kind === "lines" && !spec.columns && !spec.panels) {
    throw new SpecError("lines figure needs columns or panels");
  }
  if (spec.panels !== undefined) {
    if (!Array.isArray(spec.panels) || spec.panels.length === 0) {
      throw new SpecError("panels must be a non-empty array");
    }
    for (const panel of spec.panels as unknown[]) {
      const p = panel as Record<string, unknown>;
      if (!Array.isArray(p.columns) || p.columns.length === 0) {
        throw new SpecError("every panel needs a non-empty columns list");
      }
    }
  }
  return spec as unknown as FigureSpec;
}

export function loadSpec(path: string): FigureSpec {
  let text: string;
  try {
    text = readFileSync(path, "utf-8");
  } catch (err) {
    throw new SpecError(`cannot read spec ${path}: ${(err as Error).message}`);
  }
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch (err) {
    throw new SpecError(`spec ${path} is not valid JSON: ${(err as Error).message}`);
  }
  return validateSpec(raw);
}
