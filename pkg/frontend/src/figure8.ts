/**
 * Single-panel CDF with the modified piecewise prediction: empirical
 * bars, exponential curve, modified curve, and dashed markers at the
 * slope breakpoints taken verbatim from the CSV metadata.
 */

import { parseFloatList, parseTable, requireColumns } from "./csv.js";
import { BLUE, ORANGE, Rendered, buildReport } from "./figure7.js";
import { addBars, addCurve, addVerticalMarkers, newPanel,
         renderPanels } from "./svg.js";

export const GREEN = "#1d9e50";

export function renderFigure8(csvText: string): Rendered {
  const table = parseTable(csvText);
  requireColumns(table, [
    "t_bin_left", "empirical_cdf", "exponential_cdf", "modified_cdf",
  ]);
  const t = table.data["t_bin_left"];
  const binWidth = Number(table.meta["bin_width"] ?? "0.1");
  const tMax = Number(table.meta["t_max"] ?? String(t[t.length - 1] + binWidth));
  const cdf = table.data["empirical_cdf"];
  const expCdf = table.data["exponential_cdf"];
  const modCdf = table.data["modified_cdf"];
  const breakpoints = parseFloatList(table.meta["breakpoints"]);

  const q = table.meta["q"] ?? "?";
  const panel = newPanel(`Modified prediction for the CDF, q = ${q}`,
                         "t = p(q,a)/(phi log q)", tMax, 1.05, 640, 400);
  addBars(panel, t, cdf, binWidth, ORANGE, "empirical_cdf");
  addCurve(panel, t, expCdf, BLUE, "exponential_cdf");
  addCurve(panel, t, modCdf, GREEN, "modified_cdf");
  addVerticalMarkers(panel, breakpoints, "#888888", "breakpoints");

  const svg = renderPanels([panel], [
    { label: "empirical (histogram)", color: ORANGE },
    { label: "exponential law", color: BLUE },
    { label: "modified prediction", color: GREEN },
    { label: "slope breakpoints (multiples of tau)", color: "#888888" },
  ]);
  const report = buildReport("figure8", table, csvText, [
    ["empirical_cdf", "empirical_cdf", "cdf", "bars", cdf],
    ["exponential_cdf", "exponential_cdf", "cdf", "curve", expCdf],
    ["modified_cdf", "modified_cdf", "cdf", "curve", modCdf],
    ["breakpoints", "(metadata)", "cdf", "markers", breakpoints],
  ]);
  return { svg, report };
}
