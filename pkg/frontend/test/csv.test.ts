import { describe, expect, it } from "vitest";
import { parseSummaryCsv, columnValue, CsvError } from "../src/csv";

const HEADER =
  "algo,n,family,target_pct,median_ms,mean_ms,median_comparisons,rel_perf_pct";

describe("parseSummaryCsv", () => {
  it("parses the canonical summary schema", () => {
    const text = `${HEADER}\nneatsort,1024,random,0.0,1.5,1.6,10240,25.0\n`;
    const rows = parseSummaryCsv(text);
    expect(rows).toHaveLength(1);
    expect(rows[0].algo).toBe("neatsort");
    expect(rows[0].n).toBe(1024);
    expect(rows[0].median_ms).toBeCloseTo(1.5);
    expect(rows[0].rel_perf_pct).toBeCloseTo(25.0);
  });

  it("carries extra numeric columns through", () => {
    const text = `${HEADER},inv_pct\nneatsort,64,inversion-pct,50.0,1,1,100,0,49.7\n`;
    const rows = parseSummaryCsv(text);
    expect(columnValue(rows[0], "inv_pct")).toBeCloseTo(49.7);
  });

  it("rejects an empty file", () => {
    expect(() => parseSummaryCsv("")).toThrow(CsvError);
    expect(() => parseSummaryCsv("")).toThrow(/empty CSV/);
  });

  it("rejects a header-only file", () => {
    expect(() => parseSummaryCsv(`${HEADER}\n`)).toThrow(/no data rows/);
  });

  it("lists every missing column by name", () => {
    const text = "algo,n\nneatsort,5\n";
    expect(() => parseSummaryCsv(text)).toThrow(
      /missing CSV columns: family, target_pct, median_ms, mean_ms, median_comparisons, rel_perf_pct/,
    );
  });

  it("rejects non-numeric cells", () => {
    const text = `${HEADER}\nneatsort,oops,random,0,1,1,1,0\n`;
    expect(() => parseSummaryCsv(text)).toThrow(/non-numeric/);
  });

  it("rejects ragged rows", () => {
    const text = `${HEADER}\nneatsort,64,random,0,1,1\n`;
    expect(() => parseSummaryCsv(text)).toThrow(/expected 8 cells/);
  });
});
