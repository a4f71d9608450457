/**
 * Reader for the sweep CSV contract: a header row of column names followed
 * by purely numeric rows (pair_i / pair_j are integers, everything else
 * floating point).
 */

export interface Table {
  columns: string[];
  rows: number[][];
}

export class CsvError extends Error {}

export class MissingColumnError extends Error {
  constructor(public readonly column: string) {
    super(`column not present in CSV header: ${column}`);
  }
}

export function parseCsv(text: string): Table {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new CsvError("line 1: empty file, expected a header row");
  }
  const columns = lines[0].split(",");
  if (columns.some((c) => c.trim() === "")) {
    throw new CsvError("line 1: blank column name in header");
  }
  const rows: number[][] = [];
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(",");
    if (cells.length !== columns.length) {
      throw new CsvError(
        `line ${i + 1}: expected ${columns.length} cells, found ${cells.length}`
      );
    }
    const row = cells.map((cell, c) => {
      const value = Number(cell);
      if (cell.trim() === "" || Number.isNaN(value)) {
        throw new CsvError(`line ${i + 1}: cell ${columns[c]}=${JSON.stringify(cell)} is not numeric`);
      }
      return value;
    });
    rows.push(row);
  }
  return { columns, rows };
}

export function columnIndex(table: Table, name: string): number {
  const idx = table.columns.indexOf(name);
  if (idx < 0) throw new MissingColumnError(name);
  return idx;
}

/** A plottable column, optionally restricted to one site pair: `sxx[0,2]`. */
export interface Selector {
  column: string;
  pair?: [number, number];
}

export function parseSelector(text: string): Selector {
  const match = /^([A-Za-z0-9_]+)(?:\[(\d+)\s*,\s*(\d+)\])?$/.exec(text.trim());
  if (!match) {
    throw new CsvError(`bad column selector ${JSON.stringify(text)}; expected name or name[i,j]`);
  }
  if (match[2] === undefined) return { column: match[1] };
  return { column: match[1], pair: [Number(match[2]), Number(match[3])] };
}

export function formatSelector(sel: Selector): string {
  return sel.pair ? `${sel.column}[${sel.pair[0]},${sel.pair[1]}]` : sel.column;
}

export function distinctPairs(table: Table): Array<[number, number]> {
  const iCol = table.columns.indexOf("pair_i");
  const jCol = table.columns.indexOf("pair_j");
  if (iCol < 0 || jCol < 0) return [];
  const seen = new Map<string, [number, number]>();
  for (const row of table.rows) {
    seen.set(`${row[iCol]},${row[jCol]}`, [row[iCol], row[jCol]]);
  }
  return [...seen.values()].sort((a, b) => a[0] - b[0] || a[1] - b[1]);
}

/**
 * Rows matching the selector's pair filter.  A bare selector on a table with
 * several pairs is allowed only when the column's values are identical
 * across pairs at every grid point (as energies are); otherwise the pair
 * must be named.
 */
export function selectRows(table: Table, sel: Selector): number[][] {
  const pairs = distinctPairs(table);
  if (!sel.pair) {
    if (pairs.length > 1 && pairDependent(table, sel.column)) {
      throw new CsvError(
        `selector ${sel.column} is ambiguous: CSV holds pairs ` +
          pairs.map(([i, j]) => `(${i},${j})`).join(", ") +
          `; use ${sel.column}[i,j]`
      );
    }
    return table.rows;
  }
  const iCol = columnIndex(table, "pair_i");
  const jCol = columnIndex(table, "pair_j");
  const [pi, pj] = sel.pair;
  const rows = table.rows.filter((r) => r[iCol] === pi && r[jCol] === pj);
  if (table.rows.length > 0 && rows.length === 0) {
    throw new CsvError(`no rows for pair (${pi},${pj})`);
  }
  return rows;
}

function pairDependent(table: Table, column: string): boolean {
  const v = columnIndex(table, column);
  const t = table.columns.indexOf("t");
  const j = table.columns.indexOf("j_over_j0");
  const seen = new Map<string, number>();
  for (const row of table.rows) {
    const key = `${t >= 0 ? row[t] : 0}|${j >= 0 ? row[j] : 0}`;
    const prior = seen.get(key);
    if (prior === undefined) {
      seen.set(key, row[v]);
    } else if (prior !== row[v]) {
      return true;
    }
  }
  return false;
}

/** (x, y) series for a selector, ordered by x; duplicate x keep first row. */
export function extractSeries(table: Table, xColumn: string, sel: Selector): Array<[number, number]> {
  const x = columnIndex(table, xColumn);
  const y = columnIndex(table, sel.column);
  const rows = selectRows(table, sel);
  const byX = new Map<number, number>();
  for (const row of rows) {
    if (!byX.has(row[x])) byX.set(row[x], row[y]);
  }
  return [...byX.entries()].sort((a, b) => a[0] - b[0]);
}

export interface PivotGrid {
  xs: number[]; // ascending j_over_j0 values
  ys: number[]; // ascending t values
  values: number[][]; // values[yi][xi], NaN when the cell is absent
}

/** Pivot (j_over_j0, t) -> value for one selector. */
export function pivot(table: Table, sel: Selector): PivotGrid {
  const xCol = columnIndex(table, "j_over_j0");
  const yCol = columnIndex(table, "t");
  const vCol = columnIndex(table, sel.column);
  const rows = selectRows(table, sel);
  const xs = [...new Set(rows.map((r) => r[xCol]))].sort((a, b) => a - b);
  const ys = [...new Set(rows.map((r) => r[yCol]))].sort((a, b) => a - b);
  const xi = new Map(xs.map((v, i) => [v, i]));
  const yi = new Map(ys.map((v, i) => [v, i]));
  const values = ys.map(() => xs.map(() => Number.NaN));
  for (const row of rows) {
    values[yi.get(row[yCol])!][xi.get(row[xCol])!] = row[vCol];
  }
  return { xs, ys, values };
}
