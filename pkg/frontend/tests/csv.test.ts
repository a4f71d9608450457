import { readFileSync } from "fs";
import { join } from "path";
import { describe, expect, it } from "vitest";

import {
  columnIndex,
  CsvError,
  distinctPairs,
  extractSeries,
  MissingColumnError,
  parseCsv,
  parseSelector,
  pivot,
} from "../src/csv.js";

const FIXTURES = join(__dirname, "fixtures");

const SMALL = [
  "t,j_over_j0,pair_i,pair_j,b_horodecki",
  "0.1,-1,0,1,0.5",
  "0.1,-1,0,2,2.5",
  "0.1,0,0,1,0.25",
  "0.1,0,0,2,2.8",
  "0.2,-1,0,1,0.1",
  "0.2,-1,0,2,1.5",
  "0.2,0,0,1,0.05",
  "0.2,0,0,2,1.9",
].join("\n");

describe("parseCsv", () => {
  it("parses the sweep contract", () => {
    const table = parseCsv(SMALL);
    expect(table.columns).toEqual(["t", "j_over_j0", "pair_i", "pair_j", "b_horodecki"]);
    expect(table.rows).toHaveLength(8);
    expect(table.rows[1]).toEqual([0.1, -1, 0, 2, 2.5]);
  });

  it("parses a real sweep file", () => {
    const table = parseCsv(readFileSync(join(FIXTURES, "lines_sweep.csv"), "utf-8"));
    expect(table.columns).toContain("b_horodecki");
    expect(table.rows.length).toBe(242);
  });

  it("reports the line number of a short row", () => {
    const bad = "a,b\n1,2\n3\n";
    expect(() => parseCsv(bad)).toThrowError(/line 3/);
  });

  it("reports the line number and column of a non-numeric cell", () => {
    const bad = "a,b\n1,2\n3,oops\n";
    expect(() => parseCsv(bad)).toThrowError(/line 3: cell b/);
  });

  it("accepts a header-only file", () => {
    const table = parseCsv("t,j_over_j0,pair_i,pair_j,b_horodecki\n");
    expect(table.rows).toHaveLength(0);
  });

  it("rejects an empty file", () => {
    expect(() => parseCsv("")).toThrowError(CsvError);
  });
});

describe("columns and selectors", () => {
  it("names the missing column", () => {
    const table = parseCsv(SMALL);
    expect(() => columnIndex(table, "szz")).toThrowError(MissingColumnError);
    expect(() => columnIndex(table, "szz")).toThrowError(/szz/);
  });

  it("parses bare and pair-qualified selectors", () => {
    expect(parseSelector("e0")).toEqual({ column: "e0" });
    expect(parseSelector("sxx[0, 2]")).toEqual({ column: "sxx", pair: [0, 2] });
    expect(() => parseSelector("sxx[0]")).toThrowError(/selector/);
  });

  it("lists distinct pairs", () => {
    expect(distinctPairs(parseCsv(SMALL))).toEqual([
      [0, 1],
      [0, 2],
    ]);
  });

  it("rejects ambiguous bare selectors when several pairs are present", () => {
    const table = parseCsv(SMALL);
    expect(() => extractSeries(table, "j_over_j0", { column: "b_horodecki" })).toThrowError(
      /ambiguous/
    );
  });
});

describe("series and pivot", () => {
  it("extracts an x-sorted series for one pair", () => {
    const table = parseCsv(SMALL);
    const series = extractSeries(table, "j_over_j0", { column: "b_horodecki", pair: [0, 2] });
    // duplicate x (two temperatures) keeps the first row
    expect(series).toEqual([
      [-1, 2.5],
      [0, 2.8],
    ]);
  });

  it("pivots (j_over_j0, t) onto a grid", () => {
    const table = parseCsv(SMALL);
    const grid = pivot(table, { column: "b_horodecki", pair: [0, 2] });
    expect(grid.xs).toEqual([-1, 0]);
    expect(grid.ys).toEqual([0.1, 0.2]);
    expect(grid.values).toEqual([
      [2.5, 2.8],
      [1.5, 1.9],
    ]);
  });
});
