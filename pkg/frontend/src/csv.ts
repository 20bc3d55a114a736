/** Parsers for the simulator's emitted files (per-UE CSV and map-grid CSV).
 *
 * Parsing is strict: a malformed cell fails with an error naming the file,
 * row, and column so broken pipelines surface immediately.
 */

import * as fs from 'node:fs';
import Papa from 'papaparse';

export interface UeRow {
  scenario: string;
  direction: string;
  drop: number;
  ue_index: number;
  x_m: number;
  y_m: number;
  serving_bs: number;
  los: boolean;
  d2d_m: number;
  d3d_m: number;
  pl_db: number;
  rx_dbm: number;
  interference_dbm: number | null;
  noise_dbm: number;
  snr_db: number;
  sinr_db: number;
  se_bps_hz: number;
  covered: boolean;
  outage: boolean;
}

export interface MapGrid {
  x: number[];
  y: number[];
  /** values[i][j] is the dB value at (x[j], y[i]) */
  values: number[][];
}

export const PER_UE_COLUMNS = [
  'scenario', 'direction', 'drop', 'ue_index', 'x_m', 'y_m', 'serving_bs', 'los',
  'd2d_m', 'd3d_m', 'pl_db', 'rx_dbm', 'interference_dbm', 'noise_dbm',
  'snr_db', 'sinr_db', 'se_bps_hz', 'covered', 'outage',
] as const;

function parseNumber(raw: string, file: string, row: number, column: string): number {
  const value = Number(raw);
  if (raw === '' || !Number.isFinite(value)) {
    throw new Error(`${file}: row ${row}: column '${column}' has non-numeric value '${raw}'`);
  }
  return value;
}

function parseBool(raw: string, file: string, row: number, column: string): boolean {
  if (raw === 'true') return true;
  if (raw === 'false') return false;
  throw new Error(`${file}: row ${row}: column '${column}' has non-boolean value '${raw}'`);
}

export function readPerUeCsv(path: string): UeRow[] {
  const text = fs.readFileSync(path, 'utf-8');
  const parsed = Papa.parse<string[]>(text.trim(), { delimiter: ',' });
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    throw new Error(`${path}: row ${(e.row ?? 0) + 1}: ${e.message}`);
  }
  const rows = parsed.data;
  if (rows.length === 0 || rows[0].join(',') !== PER_UE_COLUMNS.join(',')) {
    throw new Error(`${path}: unexpected per-UE CSV header: ${rows[0]?.join(',')}`);
  }
  const out: UeRow[] = [];
  for (let i = 1; i < rows.length; i++) {
    const r = rows[i];
    const line = i + 1;
    if (r.length !== PER_UE_COLUMNS.length) {
      throw new Error(`${path}: row ${line}: expected ${PER_UE_COLUMNS.length} fields, got ${r.length}`);
    }
    out.push({
      scenario: r[0],
      direction: r[1],
      drop: parseNumber(r[2], path, line, 'drop'),
      ue_index: parseNumber(r[3], path, line, 'ue_index'),
      x_m: parseNumber(r[4], path, line, 'x_m'),
      y_m: parseNumber(r[5], path, line, 'y_m'),
      serving_bs: parseNumber(r[6], path, line, 'serving_bs'),
      los: parseBool(r[7], path, line, 'los'),
      d2d_m: parseNumber(r[8], path, line, 'd2d_m'),
      d3d_m: parseNumber(r[9], path, line, 'd3d_m'),
      pl_db: parseNumber(r[10], path, line, 'pl_db'),
      rx_dbm: parseNumber(r[11], path, line, 'rx_dbm'),
      interference_dbm: r[12] === '' ? null : parseNumber(r[12], path, line, 'interference_dbm'),
      noise_dbm: parseNumber(r[13], path, line, 'noise_dbm'),
      snr_db: parseNumber(r[14], path, line, 'snr_db'),
      sinr_db: parseNumber(r[15], path, line, 'sinr_db'),
      se_bps_hz: parseNumber(r[16], path, line, 'se_bps_hz'),
      covered: parseBool(r[17], path, line, 'covered'),
      outage: parseBool(r[18], path, line, 'outage'),
    });
  }
  if (out.length === 0) throw new Error(`${path}: no data rows`);
  return out;
}

export function readMapCsv(path: string): MapGrid {
  const text = fs.readFileSync(path, 'utf-8');
  const parsed = Papa.parse<string[]>(text.trim(), { delimiter: ',' });
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    throw new Error(`${path}: row ${(e.row ?? 0) + 1}: ${e.message}`);
  }
  const rows = parsed.data;
  if (rows.length < 2 || rows[0][0] !== '') {
    throw new Error(`${path}: map CSV must start with an empty corner cell followed by x coordinates`);
  }
  const x = rows[0].slice(1).map((v, j) => parseNumber(v, path, 1, `x[${j}]`));
  const y: number[] = [];
  const values: number[][] = [];
  for (let i = 1; i < rows.length; i++) {
    const r = rows[i];
    if (r.length !== x.length + 1) {
      throw new Error(`${path}: row ${i + 1}: expected ${x.length + 1} fields, got ${r.length}`);
    }
    y.push(parseNumber(r[0], path, i + 1, 'y'));
    values.push(r.slice(1).map((v, j) => parseNumber(v, path, i + 1, `value[${j}]`)));
  }
  return { x, y, values };
}
