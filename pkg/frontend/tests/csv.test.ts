import * as fs from 'node:fs';
import * as os from 'node:os';
import * as path from 'node:path';
import { fileURLToPath } from 'node:url';
import { describe, expect, it } from 'vitest';
import { readMapCsv, readPerUeCsv } from '../src/csv.js';

const FIXTURES = path.join(path.dirname(fileURLToPath(import.meta.url)), 'fixtures');
const PER_UE = path.join(FIXTURES, 'run-single', 'per_ue.csv');
const MAP = path.join(FIXTURES, 'map-single', 'map_snr.csv');

function tempFile(content: string): string {
  const p = path.join(fs.mkdtempSync(path.join(os.tmpdir(), 'figtest-')), 'bad.csv');
  fs.writeFileSync(p, content);
  return p;
}

describe('readPerUeCsv', () => {
  it('parses both direction blocks with typed fields', () => {
    const rows = readPerUeCsv(PER_UE);
    expect(rows.length).toBe(2 * 800);
    expect(rows.filter((r) => r.direction === 'DL').length).toBe(800);
    expect(rows.filter((r) => r.direction === 'UL').length).toBe(800);
    const r = rows[0];
    expect(r.scenario).toBe('table1-single');
    expect(typeof r.se_bps_hz).toBe('number');
    expect(typeof r.covered).toBe('boolean');
    // single-cell runs carry no interference
    expect(rows.every((row) => row.interference_dbm === null)).toBe(true);
    // flags consistent with the SINR thresholds
    for (const row of rows) {
      expect(row.covered).toBe(row.sinr_db >= 0);
      expect(row.outage).toBe(row.sinr_db < -10);
    }
  });

  it('rejects a wrong header', () => {
    const p = tempFile('a,b,c\n1,2,3\n');
    expect(() => readPerUeCsv(p)).toThrow(/header/);
  });

  it('names the row and column of a malformed numeric cell', () => {
    const rows = fs.readFileSync(PER_UE, 'utf-8').trim().split('\n');
    const broken = rows[1].split(',');
    broken[15] = 'not-a-number'; // sinr_db
    const p = tempFile([rows[0], broken.join(',')].join('\n') + '\n');
    expect(() => readPerUeCsv(p)).toThrow(/row 2: column 'sinr_db' has non-numeric value 'not-a-number'/);
  });

  it('names the column of a malformed boolean cell', () => {
    const rows = fs.readFileSync(PER_UE, 'utf-8').trim().split('\n');
    const broken = rows[1].split(',');
    broken[17] = 'yes'; // covered
    const p = tempFile([rows[0], broken.join(',')].join('\n') + '\n');
    expect(() => readPerUeCsv(p)).toThrow(/column 'covered'/);
  });

  it('rejects rows with missing fields', () => {
    const rows = fs.readFileSync(PER_UE, 'utf-8').trim().split('\n');
    const p = tempFile([rows[0], '1,2,3'].join('\n') + '\n');
    expect(() => readPerUeCsv(p)).toThrow(/row 2/);
  });
});

describe('readMapCsv', () => {
  it('parses the grid with matching shapes', () => {
    const grid = readMapCsv(MAP);
    expect(grid.x.length).toBe(101); // [-250, 250] at 5 m
    expect(grid.y.length).toBe(101);
    expect(grid.x[0]).toBe(-250);
    expect(grid.x[100]).toBe(250);
    expect(grid.values.length).toBe(101);
    expect(grid.values[0].length).toBe(101);
  });

  it('is radially symmetric for the single-cell field', () => {
    const grid = readMapCsv(MAP);
    const v = grid.values;
    const n = v.length;
    for (let i = 0; i < n; i += 10) {
      for (let j = 0; j < n; j += 10) {
        expect(v[i][j]).toBeCloseTo(v[n - 1 - i][n - 1 - j], 9);
      }
    }
  });

  it('rejects a grid without the empty corner cell', () => {
    const p = tempFile('x,1,2\n0,3,4\n');
    expect(() => readMapCsv(p)).toThrow(/corner/);
  });
});
