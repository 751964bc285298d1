import { existsSync, mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";
import { main } from "../src/cli.js";

const FIXTURES = join(__dirname, "fixtures");

function tmp(): string {
  return mkdtempSync(join(tmpdir(), "primeap-fig-"));
}

describe("renderer CLI", () => {
  it("writes SVG and a passing self-report", () => {
    const dir = tmp();
    const out = join(dir, "fig7.svg");
    const code = main(["figure7", "--in", join(FIXTURES, "figure7-q2023.csv"),
                       "--out", out]);
    expect(code).toBe(0);
    expect(readFileSync(out, "utf-8")).toContain("<svg");
    const report = JSON.parse(readFileSync(`${out}.report.json`, "utf-8"));
    expect(report.all_series_match_csv).toBe(true);
    expect(report.figure).toBe("figure7");
  });

  it("renders figure8 with an explicit report path", () => {
    const dir = tmp();
    const out = join(dir, "fig8.svg");
    const rep = join(dir, "self.json");
    const code = main(["figure8", "--in", join(FIXTURES, "figure8-q30030.csv"),
                       "--out", out, "--report", rep]);
    expect(code).toBe(0);
    const report = JSON.parse(readFileSync(rep, "utf-8"));
    expect(report.series.map((s: { name: string }) => s.name))
      .toContain("modified_cdf");
  });

  it("exits non-zero and writes nothing when a column is missing", () => {
    const dir = tmp();
    const out = join(dir, "fig8.svg");
    const code = main(["figure8", "--in", join(FIXTURES, "figure7-q2023.csv"),
                       "--out", out]);
    expect(code).toBe(2);
    expect(existsSync(out)).toBe(false);
  });

  it("exits non-zero on empty data and writes nothing", () => {
    const dir = tmp();
    const empty = join(dir, "empty.csv");
    writeFileSync(empty, "# q: 3\nt_bin_left,empirical_density\n");
    const out = join(dir, "out.svg");
    expect(main(["figure7", "--in", empty, "--out", out])).toBe(2);
    expect(existsSync(out)).toBe(false);
  });

  it("rejects bad usage", () => {
    expect(main(["nonsense"])).toBe(1);
    expect(main(["figure7", "--in", "x.csv"])).toBe(1);
  });

  it("exits non-zero on unreadable input", () => {
    const dir = tmp();
    expect(main(["figure7", "--in", join(dir, "missing.csv"),
                 "--out", join(dir, "y.svg")])).toBe(2);
  });
});
