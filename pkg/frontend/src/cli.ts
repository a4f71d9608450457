#!/usr/bin/env node
/**
 * plot --spec <file.json>
 * plot --kind heatmap|lines --in sweep.csv --out figure.svg
 *      [--columns "e0,e1"] [--value "b_horodecki[0,2]"] [--no-threshold]
 *      [--title T] [--xlabel X] [--ylabel Y] [--width N] [--height N]
 */

import { readFileSync, writeFileSync } from "fs";

import { CsvError, MissingColumnError, parseCsv } from "./csv.js";
import { loadSpec, SpecError, validateSpec, type FigureSpec } from "./figure.js";
import { renderHeatmap } from "./heatmap.js";
import { renderLines } from "./lines.js";

export function specFromArgs(argv: string[]): FigureSpec {
  const flags = new Map<string, string | boolean>();
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    if (!arg.startsWith("--")) {
      throw new SpecError(`unexpected argument ${JSON.stringify(arg)}`);
    }
    const name = arg.slice(2);
    if (name === "no-threshold") {
      flags.set(name, true);
      continue;
    }
    const value = argv[i + 1];
    if (value === undefined || value.startsWith("--")) {
      throw new SpecError(`flag --${name} needs a value`);
    }
    flags.set(name, value);
    i++;
  }
  if (flags.has("spec")) {
    return loadSpec(flags.get("spec") as string);
  }
  const raw: Record<string, unknown> = {
    kind: flags.get("kind"),
    input: flags.get("in"),
    output: flags.get("out"),
  };
  if (flags.has("columns")) {
    // Split on commas that sit outside [i,j] pair brackets.
    raw.columns = (flags.get("columns") as string)
      .split(/,(?![^[]*\])/)
      .map((c) => c.trim())
      .filter((c) => c.length > 0);
  }
  if (flags.has("value")) raw.value = flags.get("value");
  if (flags.has("no-threshold")) raw.threshold = false;
  for (const key of ["title", "xlabel", "ylabel"]) {
    if (flags.has(key)) raw[key] = flags.get(key);
  }
  for (const key of ["width", "height"]) {
    if (flags.has(key)) raw[key] = Number(flags.get(key));
  }
  return validateSpec(raw);
}

export function render(spec: FigureSpec): string {
  const table = parseCsv(readFileSync(spec.input, "utf-8"));
  return spec.kind === "heatmap" ? renderHeatmap(table, spec) : renderLines(table, spec);
}

export function main(argv: string[]): number {
  let spec: FigureSpec;
  try {
    spec = specFromArgs(argv);
  } catch (err) {
    console.error(`plot: ${(err as Error).message}`);
    return 1;
  }
  try {
    const svg = render(spec);
    writeFileSync(spec.output, svg);
    console.log(`wrote ${spec.output}`);
    return 0;
  } catch (err) {
    if (err instanceof MissingColumnError || err instanceof CsvError || err instanceof SpecError) {
      console.error(`plot: ${err.message}`);
      return 1;
    }
    console.error(`plot: ${(err as Error).message}`);
    return 1;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined && import.meta.url === new URL(`file://${process.argv[1]}`).href;
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
