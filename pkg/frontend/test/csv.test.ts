import { describe, expect, it } from "vitest";
import { MalformedCsvError, MissingColumnError, parseFloatList,
         parseTable, requireColumns } from "../src/csv.js";

const SAMPLE = `# primeap figure7 v1
# q: 101
# samples: 100
t_bin_left,empirical_cdf
0.0,0.0
0.1,0.25
0.2,0.5
`;

describe("csv dialect", () => {
  it("parses metadata, header and numeric rows", () => {
    const table = parseTable(SAMPLE);
    expect(table.meta["q"]).toBe("101");
    expect(table.meta["samples"]).toBe("100");
    expect(table.columns).toEqual(["t_bin_left", "empirical_cdf"]);
    expect(table.rowCount).toBe(3);
    expect(table.data["empirical_cdf"]).toEqual([0.0, 0.25, 0.5]);
  });

  it("rejects a header-only file", () => {
    expect(() => parseTable("# q: 3\na,b\n")).toThrow(MalformedCsvError);
  });

  it("rejects ragged rows", () => {
    expect(() => parseTable("a,b\n1,2\n3\n")).toThrow(MalformedCsvError);
  });

  it("rejects non-numeric cells", () => {
    expect(() => parseTable("a,b\n1,zzz\n")).toThrow(/not a number/);
  });

  it("names the missing column", () => {
    const table = parseTable(SAMPLE);
    expect(() => requireColumns(table, ["modified_cdf"]))
      .toThrow(MissingColumnError);
    try {
      requireColumns(table, ["modified_cdf"]);
    } catch (err) {
      expect((err as MissingColumnError).column).toBe("modified_cdf");
      expect((err as Error).message).toContain("modified_cdf");
    }
  });

  it("parses breakpoint lists", () => {
    expect(parseFloatList("0.5,1.0,1.5")).toEqual([0.5, 1.0, 1.5]);
    expect(parseFloatList(undefined)).toEqual([]);
  });
});
