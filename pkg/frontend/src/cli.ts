#!/usr/bin/env node
/** Command line for turning a benchmark summary CSV into an SVG chart.
 *
 * Usage:
 *   neatsort-plots --kind relperf-scatter --x inv_pct \
 *     --in results_summary.csv --out fig.svg
 */

import * as fs from "node:fs";
import { parseSummaryCsv, CsvError } from "./csv";
import { renderChart, CHART_KINDS, ChartKind, ChartError } from "./charts";

interface CliArgs {
  kind: ChartKind;
  x: string;
  input: string;
  output: string;
}

const USAGE =
  "usage: neatsort-plots --kind KIND --in summary.csv --out fig.svg " +
  "[--x inv_pct|runs_pct|maxdist_pct]\n" +
  `kinds: ${CHART_KINDS.join(", ")}`;

export function parseArgs(argv: string[]): CliArgs {
  const opts: Record<string, string> = {};
  for (let i = 0; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (!flag.startsWith("--") || value === undefined) {
      throw new Error(USAGE);
    }
    opts[flag.slice(2)] = value;
  }
  for (const required of ["kind", "in", "out"]) {
    if (!(required in opts)) {
      throw new Error(`missing --${required}\n${USAGE}`);
    }
  }
  if (!(CHART_KINDS as string[]).includes(opts["kind"])) {
    throw new Error(`unknown kind: ${opts["kind"]}\n${USAGE}`);
  }
  return {
    kind: opts["kind"] as ChartKind,
    x: opts["x"] ?? "target_pct",
    input: opts["in"],
    output: opts["out"],
  };
}

export function main(argv: string[]): number {
  let args: CliArgs;
  try {
    args = parseArgs(argv);
  } catch (err) {
    process.stderr.write(`${(err as Error).message}\n`);
    return 2;
  }
  let text: string;
  try {
    text = fs.readFileSync(args.input, "utf-8");
  } catch {
    process.stderr.write(`cannot read input file: ${args.input}\n`);
    return 2;
  }
  try {
    const rows = parseSummaryCsv(text);
    const svg = renderChart(args.kind, rows, { xColumn: args.x });
    fs.writeFileSync(args.output, svg, "utf-8");
  } catch (err) {
    if (err instanceof CsvError || err instanceof ChartError) {
      process.stderr.write(`${err.message}\n`);
      return 2;
    }
    throw err;
  }
  return 0;
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
