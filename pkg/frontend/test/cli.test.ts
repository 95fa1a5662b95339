import { afterEach, beforeEach, describe, expect, it } from "vitest";
import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";
import { main, parseArgs } from "../src/cli";

const HEADER =
  "algo,n,family,target_pct,median_ms,mean_ms,median_comparisons,rel_perf_pct";

let dir: string;

beforeEach(() => {
  dir = fs.mkdtempSync(path.join(os.tmpdir(), "plots-"));
});

afterEach(() => {
  fs.rmSync(dir, { recursive: true, force: true });
});

function writeFixture(name: string, body: string): string {
  const p = path.join(dir, name);
  fs.writeFileSync(p, body);
  return p;
}

describe("cli", () => {
  it("parses the documented flag set", () => {
    const args = parseArgs([
      "--kind", "relperf-scatter", "--x", "inv_pct",
      "--in", "results_summary.csv", "--out", "fig.svg",
    ]);
    expect(args.kind).toBe("relperf-scatter");
    expect(args.x).toBe("inv_pct");
    expect(args.input).toBe("results_summary.csv");
    expect(args.output).toBe("fig.svg");
  });

  it("renders a chart end to end", () => {
    const input = writeFixture(
      "summary.csv",
      `${HEADER}\nneatsort,1000,random,0,1.0,1.0,9000,30\n` +
        `neatsort,2000,random,0,2.2,2.2,19000,-30\n`,
    );
    const output = path.join(dir, "fig.svg");
    const rc = main([
      "--kind", "relperf-scatter", "--x", "inv_pct",
      "--in", input, "--out", output,
    ]);
    expect(rc).toBe(0);
    const svg = fs.readFileSync(output, "utf-8");
    expect(svg.startsWith("<svg ")).toBe(true);
  });

  it("exits 2 and writes no image for a missing-column file", () => {
    const input = writeFixture("bad.csv", "algo,n\nneatsort,5\n");
    const output = path.join(dir, "fig.svg");
    const rc = main(["--kind", "time-vs-n", "--in", input, "--out", output]);
    expect(rc).toBe(2);
    expect(fs.existsSync(output)).toBe(false);
  });

  it("exits 2 for an empty file", () => {
    const input = writeFixture("empty.csv", "");
    const output = path.join(dir, "fig.svg");
    const rc = main(["--kind", "time-vs-n", "--in", input, "--out", output]);
    expect(rc).toBe(2);
    expect(fs.existsSync(output)).toBe(false);
  });

  it("exits 2 for unknown kinds and missing flags", () => {
    expect(main(["--kind", "pie", "--in", "a", "--out", "b"])).toBe(2);
    expect(main(["--kind", "time-vs-n"])).toBe(2);
    expect(main(["--in", "nope.csv", "--out", "x.svg", "--kind", "time-vs-n"])).toBe(2);
  });
});
