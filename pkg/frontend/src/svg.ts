/**
 * Minimal SVG assembly: bars, polylines, rulers, legends.  Pure string
 * construction, no DOM; identical inputs yield identical bytes.  The only
 * numerical work here is the affine map from data units to pixels -- the
 * plotted values themselves are forwarded untouched by the figure layer.
 */

export interface Panel {
  title: string;
  xLabel: string;
  width: number;
  height: number;
  xMax: number;
  yMax: number;
  parts: string[];
}

const MARGIN = { left: 46, right: 12, top: 28, bottom: 34 };

function px(v: number): string {
  return v.toFixed(2);
}

export function newPanel(title: string, xLabel: string, xMax: number,
                         yMax: number, width = 420, height = 300): Panel {
  return { title, xLabel, width, height, xMax, yMax, parts: [] };
}

function xPix(p: Panel, x: number): number {
  return MARGIN.left + (x / p.xMax) * (p.width - MARGIN.left - MARGIN.right);
}

function yPix(p: Panel, y: number): number {
  const h = p.height - MARGIN.top - MARGIN.bottom;
  return MARGIN.top + h - (y / p.yMax) * h;
}

export function addBars(p: Panel, xLeft: number[], values: number[],
                        binWidth: number, color: string, name: string): void {
  const pieces: string[] = [];
  for (let i = 0; i < xLeft.length; i += 1) {
    const x0 = xPix(p, xLeft[i]);
    const x1 = xPix(p, Math.min(xLeft[i] + binWidth, p.xMax));
    const y = yPix(p, Math.min(values[i], p.yMax));
    const base = yPix(p, 0);
    pieces.push(
      `<rect x="${px(x0)}" y="${px(y)}" width="${px(x1 - x0)}" ` +
      `height="${px(base - y)}" fill="${color}" fill-opacity="0.75"/>`,
    );
  }
  p.parts.push(`<g data-series="${name}" data-kind="bars">${pieces.join("")}</g>`);
}

export function addCurve(p: Panel, xs: number[], ys: number[], color: string,
                         name: string): void {
  const pts = xs
    .map((x, i) => `${px(xPix(p, x))},${px(yPix(p, Math.min(ys[i], p.yMax)))}`)
    .join(" ");
  p.parts.push(
    `<g data-series="${name}" data-kind="curve">` +
    `<polyline points="${pts}" fill="none" stroke="${color}" stroke-width="1.8"/></g>`,
  );
}

export function addVerticalMarkers(p: Panel, xs: number[], color: string,
                                   name: string): void {
  const pieces = xs
    .filter((x) => x <= p.xMax)
    .map((x) => {
      const xp = px(xPix(p, x));
      return `<line x1="${xp}" y1="${px(yPix(p, 0))}" x2="${xp}" ` +
        `y2="${px(MARGIN.top)}" stroke="${color}" stroke-width="1" ` +
        `stroke-dasharray="4,3"/>`;
    });
  p.parts.push(`<g data-series="${name}" data-kind="markers">${pieces.join("")}</g>`);
}

function frame(p: Panel): string {
  const pieces: string[] = [];
  const x0 = MARGIN.left;
  const y0 = yPix(p, 0);
  pieces.push(
    `<line x1="${px(x0)}" y1="${px(y0)}" x2="${px(p.width - MARGIN.right)}" ` +
    `y2="${px(y0)}" stroke="black" stroke-width="1"/>`,
    `<line x1="${px(x0)}" y1="${px(y0)}" x2="${px(x0)}" ` +
    `y2="${px(MARGIN.top)}" stroke="black" stroke-width="1"/>`,
  );
  for (let x = 0; x <= p.xMax + 1e-9; x += 1) {
    const xp = px(xPix(p, x));
    pieces.push(
      `<line x1="${xp}" y1="${px(y0)}" x2="${xp}" y2="${px(y0 + 4)}" stroke="black"/>`,
      `<text x="${xp}" y="${px(y0 + 16)}" font-size="10" text-anchor="middle">${x}</text>`,
    );
  }
  const yStep = p.yMax > 2 ? 0.5 : 0.2;
  for (let y = 0; y <= p.yMax + 1e-9; y += yStep) {
    const yp = px(yPix(p, y));
    pieces.push(
      `<line x1="${px(x0 - 4)}" y1="${yp}" x2="${px(x0)}" y2="${yp}" stroke="black"/>`,
      `<text x="${px(x0 - 7)}" y="${yp}" font-size="10" text-anchor="end" ` +
      `dominant-baseline="middle">${y.toFixed(1)}</text>`,
    );
  }
  pieces.push(
    `<text x="${px((x0 + p.width - MARGIN.right) / 2)}" y="16" font-size="12" ` +
    `text-anchor="middle" font-weight="bold">${p.title}</text>`,
    `<text x="${px((x0 + p.width - MARGIN.right) / 2)}" ` +
    `y="${px(p.height - 8)}" font-size="10" text-anchor="middle">${p.xLabel}</text>`,
  );
  return pieces.join("");
}

export interface LegendEntry {
  label: string;
  color: string;
}

export function renderPanels(panels: Panel[], legend: LegendEntry[]): string {
  const width = panels.reduce((w, p) => w + p.width, 0);
  const height = Math.max(...panels.map((p) => p.height)) + 18 * legend.length;
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}" font-family="sans-serif">`,
    `<rect width="${width}" height="${height}" fill="white"/>`,
  ];
  let offset = 0;
  for (const p of panels) {
    parts.push(`<g transform="translate(${offset},0)">${frame(p)}${p.parts.join("")}</g>`);
    offset += p.width;
  }
  legend.forEach((entry, i) => {
    const y = Math.max(...panels.map((p) => p.height)) + 14 + 18 * i;
    parts.push(
      `<rect x="50" y="${y - 9}" width="12" height="10" fill="${entry.color}"/>`,
      `<text x="68" y="${y}" font-size="11">${entry.label}</text>`,
    );
  });
  parts.push("</svg>");
  return parts.join("\n");
}
