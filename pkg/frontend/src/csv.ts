/** Parsing for the benchmark harness summary CSV.
 *
 * Expected header (comma-separated, LF line endings):
 *   algo,n,family,target_pct,median_ms,mean_ms,median_comparisons,rel_perf_pct
 *
 * Extra columns are carried through untouched so that enriched summaries
 * (e.g. with per-cell achieved disorder percentages) plot directly.
 */

export interface SummaryRow {
  algo: string;
  n: number;
  family: string;
  target_pct: number;
  median_ms: number;
  mean_ms: number;
  median_comparisons: number;
  rel_perf_pct: number;
  /** Any additional numeric columns present in the file. */
  extra: Record<string, number>;
}

export const REQUIRED_COLUMNS = [
  "algo",
  "n",
  "family",
  "target_pct",
  "median_ms",
  "mean_ms",
  "median_comparisons",
  "rel_perf_pct",
] as const;

const STRING_COLUMNS = new Set(["algo", "family"]);

export class CsvError extends Error {}

function splitLine(line: string): string[] {
  // The harness never quotes fields; a plain split is the whole grammar.
  return line.split(",");
}

export function parseSummaryCsv(text: string): SummaryRow[] {
  const lines = text
    .split("\n")
    .map((l) => l.replace(/\r$/, ""))
    .filter((l) => l.length > 0);
  if (lines.length === 0) {
    throw new CsvError("empty CSV: no header row");
  }
  const header = splitLine(lines[0]);
  const missing = REQUIRED_COLUMNS.filter((c) => !header.includes(c));
  if (missing.length > 0) {
    throw new CsvError(`missing CSV columns: ${missing.join(", ")}`);
  }
  if (lines.length === 1) {
    throw new CsvError("empty CSV: header but no data rows");
  }
  const rows: SummaryRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const cells = splitLine(lines[i]);
    if (cells.length !== header.length) {
      throw new CsvError(
        `row ${i + 1}: expected ${header.length} cells, got ${cells.length}`,
      );
    }
    const record: Record<string, string> = {};
    header.forEach((name, j) => {
      record[name] = cells[j];
    });
    const num = (name: string): number => {
      const v = Number(record[name]);
      if (!Number.isFinite(v)) {
        throw new CsvError(`row ${i + 1}: non-numeric value for ${name}`);
      }
      return v;
    };
    const extra: Record<string, number> = {};
    for (const name of header) {
      if (!(REQUIRED_COLUMNS as readonly string[]).includes(name)) {
        extra[name] = num(name);
      }
    }
    rows.push({
      algo: record["algo"],
      n: num("n"),
      family: record["family"],
      target_pct: num("target_pct"),
      median_ms: num("median_ms"),
      mean_ms: num("mean_ms"),
      median_comparisons: num("median_comparisons"),
      rel_perf_pct: num("rel_perf_pct"),
      extra,
    });
  }
  return rows;
}

/** Value of a named column for a row, looking at core fields then extras. */
export function columnValue(row: SummaryRow, name: string): number | undefined {
  switch (name) {
    case "n":
      return row.n;
    case "target_pct":
      return row.target_pct;
    case "median_ms":
      return row.median_ms;
    case "mean_ms":
      return row.mean_ms;
    case "median_comparisons":
      return row.median_comparisons;
    case "rel_perf_pct":
      return row.rel_perf_pct;
    default:
      return row.extra[name];
  }
}

/** True when every row carries the named column. */
export function hasColumn(rows: SummaryRow[], name: string): boolean {
  return rows.every((r) => columnValue(r, name) !== undefined);
}
