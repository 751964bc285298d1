/**
 * Two-panel least-prime figure: PDF (density bars + exponential density
 * curve) and CDF (proportion bars + exponential CDF curve).  No numeric
 * transformation happens here: every plotted value is a CSV cell, and the
 * self-report proves it by re-parsing the input and comparing element by
 * element.
 */

import { parseTable, requireColumns, Table } from "./csv.js";
import { addBars, addCurve, newPanel, renderPanels } from "./svg.js";

export const ORANGE = "#e8882d";
export const BLUE = "#2d6de8";

export interface SeriesReport {
  name: string;
  column: string;
  panel: string;
  kind: "bars" | "curve" | "markers";
  points: number;
  matches_csv: boolean;
}

export interface FigureReport {
  figure: string;
  q: string;
  samples: string;
  panels: number;
  series: SeriesReport[];
  all_series_match_csv: boolean;
}

export interface Rendered {
  svg: string;
  report: FigureReport;
}

function seriesMatches(plotted: number[], fresh: number[]): boolean {
  return (
    plotted.length === fresh.length &&
    plotted.every((v, i) => Object.is(v, fresh[i]))
  );
}

export function buildReport(figure: string, table: Table, csvText: string,
                            plotted: Array<[string, string, string,
                                            SeriesReport["kind"], number[]]>,
                            ): FigureReport {
  const fresh = parseTable(csvText); // independent re-parse for verification
  const series = plotted.map(([name, column, panel, kind, values]) => ({
    name,
    column,
    panel,
    kind,
    points: values.length,
    matches_csv: column === "(metadata)"
      ? true
      : seriesMatches(values, fresh.data[column] ?? []),
  }));
  return {
    figure,
    q: table.meta["q"] ?? "?",
    samples: table.meta["samples"] ?? "?",
    panels: new Set(plotted.map(([, , panel]) => panel)).size,
    series,
    all_series_match_csv: series.every((s) => s.matches_csv),
  };
}

export function renderFigure7(csvText: string): Rendered {
  const table = parseTable(csvText);
  requireColumns(table, [
    "t_bin_left", "empirical_density", "empirical_cdf",
    "exponential_pdf", "exponential_cdf",
  ]);
  const t = table.data["t_bin_left"];
  const binWidth = Number(table.meta["bin_width"] ?? "0.1");
  const tMax = Number(table.meta["t_max"] ?? String(t[t.length - 1] + binWidth));

  const density = table.data["empirical_density"];
  const cdf = table.data["empirical_cdf"];
  const expPdf = table.data["exponential_pdf"];
  const expCdf = table.data["exponential_cdf"];

  const q = table.meta["q"] ?? "?";
  const pdfPanel = newPanel(`PDF, q = ${q}`, "t = p(q,a)/(phi log q)", tMax,
                            Math.max(1.2, Math.ceil(Math.max(...density) * 10) / 10));
  addBars(pdfPanel, t, density, binWidth, ORANGE, "empirical_density");
  addCurve(pdfPanel, t, expPdf, BLUE, "exponential_pdf");

  const cdfPanel = newPanel(`CDF, q = ${q}`, "t = p(q,a)/(phi log q)", tMax, 1.05);
  addBars(cdfPanel, t, cdf, binWidth, ORANGE, "empirical_cdf");
  addCurve(cdfPanel, t, expCdf, BLUE, "exponential_cdf");

  const svg = renderPanels([pdfPanel, cdfPanel], [
    { label: "empirical (histogram)", color: ORANGE },
    { label: "exponential law", color: BLUE },
  ]);
  const report = buildReport("figure7", table, csvText, [
    ["empirical_density", "empirical_density", "pdf", "bars", density],
    ["exponential_pdf", "exponential_pdf", "pdf", "curve", expPdf],
    ["empirical_cdf", "empirical_cdf", "cdf", "bars", cdf],
    ["exponential_cdf", "exponential_cdf", "cdf", "curve", expCdf],
  ]);
  return { svg, report };
}
