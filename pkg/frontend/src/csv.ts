/**
 * Parser for the experiment CSV dialect: '#'-prefixed "key: value"
 * metadata lines, then one header row, then comma-separated numeric rows
 * with '.' decimals and LF endings.
 */

export interface Table {
  meta: Record<string, string>;
  columns: string[];
  /** column name -> numeric values, row order preserved */
  data: Record<string, number[]>;
  rowCount: number;
}

export class MissingColumnError extends Error {
  constructor(readonly column: string) {
    super(`required column "${column}" is missing from the CSV input`);
    this.name = "MissingColumnError";
  }
}

export class MalformedCsvError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "MalformedCsvError";
  }
}

export function parseTable(text: string): Table {
  const meta: Record<string, string> = {};
  const lines = text.split("\n");
  let i = 0;
  for (; i < lines.length; i += 1) {
    const line = lines[i];
    if (!line.startsWith("#")) break;
    const body = line.slice(1).trim();
    const sep = body.indexOf(":");
    if (sep > 0) {
      meta[body.slice(0, sep).trim()] = body.slice(sep + 1).trim();
    }
  }
  if (i >= lines.length || lines[i].trim() === "") {
    throw new MalformedCsvError("no header row found");
  }
  const columns = lines[i].split(",").map((c) => c.trim());
  const data: Record<string, number[]> = {};
  for (const c of columns) data[c] = [];
  let rowCount = 0;
  for (i += 1; i < lines.length; i += 1) {
    const line = lines[i];
    if (line.trim() === "") continue;
    const cells = line.split(",");
    if (cells.length !== columns.length) {
      throw new MalformedCsvError(
        `row ${rowCount + 1} has ${cells.length} cells, expected ${columns.length}`,
      );
    }
    cells.forEach((cell, j) => {
      const value = Number(cell);
      if (!Number.isFinite(value)) {
        throw new MalformedCsvError(
          `row ${rowCount + 1}, column "${columns[j]}": not a number: ${cell}`,
        );
      }
      data[columns[j]].push(value);
    });
    rowCount += 1;
  }
  if (rowCount === 0) {
    throw new MalformedCsvError("CSV contains a header but no data rows");
  }
  return { meta, columns, data, rowCount };
}

export function requireColumns(table: Table, names: string[]): void {
  for (const name of names) {
    if (!table.columns.includes(name)) throw new MissingColumnError(name);
  }
}

/** Comma-separated float list from a metadata value (e.g. breakpoints). */
export function parseFloatList(value: string | undefined): number[] {
  if (!value) return [];
  return value
    .split(",")
    .map((v) => Number(v.trim()))
    .filter((v) => Number.isFinite(v));
}
