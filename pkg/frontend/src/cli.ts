/**
 * Standalone renderer: reads a figure CSV produced by the experiment CLI
 * and writes an SVG plus a JSON self-report.
 *
 *   node dist/cli.js figure7 --in fig7.csv --out fig7.svg [--report r.json]
 *   node dist/cli.js figure8 --in fig8.csv --out fig8.svg
 *
 * Exits 1 on bad usage, 2 on malformed/missing-column input; nothing is
 * written on failure.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { MalformedCsvError, MissingColumnError } from "./csv.js";
import { renderFigure7 } from "./figure7.js";
import { renderFigure8 } from "./figure8.js";

function parseArgs(argv: string[]): Map<string, string> {
  const out = new Map<string, string>();
  for (let i = 0; i < argv.length; i += 2) {
    const key = argv[i];
    if (!key.startsWith("--") || i + 1 >= argv.length) {
      throw new Error(`bad argument: ${key}`);
    }
    out.set(key.slice(2), argv[i + 1]);
  }
  return out;
}

export function main(argv: string[]): number {
  const [command, ...rest] = argv;
  if (command !== "figure7" && command !== "figure8") {
    process.stderr.write("error: usage: cli.js figure7|figure8 --in X --out Y\n");
    return 1;
  }
  let args: Map<string, string>;
  try {
    args = parseArgs(rest);
  } catch (err) {
    process.stderr.write(`error: ${(err as Error).message}\n`);
    return 1;
  }
  const input = args.get("in");
  const output = args.get("out");
  if (!input || !output) {
    process.stderr.write("error: both --in and --out are required\n");
    return 1;
  }
  let csvText: string;
  try {
    csvText = readFileSync(input, "utf-8");
  } catch (err) {
    process.stderr.write(`error: cannot read ${input}: ${(err as Error).message}\n`);
    return 2;
  }
  try {
    const render = command === "figure7" ? renderFigure7 : renderFigure8;
    const { svg, report } = render(csvText);
    writeFileSync(output, svg, "utf-8");
    const reportPath = args.get("report") ?? `${output}.report.json`;
    writeFileSync(reportPath, JSON.stringify(report, null, 2) + "\n", "utf-8");
    process.stderr.write(
      `wrote ${output} (${report.series.length} series, ` +
      `all_series_match_csv=${report.all_series_match_csv})\n`,
    );
    return report.all_series_match_csv ? 0 : 2;
  } catch (err) {
    if (err instanceof MissingColumnError || err instanceof MalformedCsvError) {
      process.stderr.write(`error: ${err.message}\n`);
      return 2;
    }
    process.stderr.write(`error: ${(err as Error).message}\n`);
    return 2;
  }
}

const isDirectRun = process.argv[1]?.endsWith("cli.js");
if (isDirectRun) {
  process.exit(main(process.argv.slice(2)));
}
