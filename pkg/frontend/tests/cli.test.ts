import * as fs from 'node:fs';
import * as os from 'node:os';
import * as path from 'node:path';
import { fileURLToPath } from 'node:url';
import { describe, expect, it, vi } from 'vitest';
import { buildFigure, main, parseArgs } from '../src/cli.js';

const FIXTURES = path.join(path.dirname(fileURLToPath(import.meta.url)), 'fixtures');
const PER_UE_SINGLE = path.join(FIXTURES, 'run-single', 'per_ue.csv');
const PER_UE_SEVEN = path.join(FIXTURES, 'run-seven', 'per_ue.csv');
const MAP_SINGLE = path.join(FIXTURES, 'map-single', 'map_snr.csv');

function tmpOut(name: string): string {
  return path.join(fs.mkdtempSync(path.join(os.tmpdir(), 'figcli-')), name);
}

describe('parseArgs', () => {
  it('splits comma-separated inputs', () => {
    const args = parseArgs(['--kind', 'cdf', '--in', 'a.csv,b.csv', '--out', 'o.svg']);
    expect(args.inputs).toEqual(['a.csv', 'b.csv']);
  });

  it('accepts repeated --in flags', () => {
    const args = parseArgs(['--kind', 'cdf', '--in', 'a.csv', '--in', 'b.csv', '--out', 'o.svg']);
    expect(args.inputs).toEqual(['a.csv', 'b.csv']);
  });

  it.each([
    [['--kind', 'pie', '--in', 'a', '--out', 'b'], /--kind/],
    [['--kind', 'cdf', '--out', 'b'], /--in/],
    [['--kind', 'cdf', '--in', 'a'], /--out/],
    [['--kind', 'cdf', '--in', 'a', '--out', 'b', '--direction', 'sideways'], /--direction/],
    [['--bogus'], /unknown flag/],
  ])('rejects bad argv %j', (argv, pattern) => {
    expect(() => parseArgs(argv as string[])).toThrow(pattern);
  });
});

describe('end-to-end figure generation', () => {
  it('writes a CDF overlay from two per-UE files', () => {
    const out = tmpOut('cdf.svg');
    const code = main(['--kind', 'cdf', '--in', `${PER_UE_SINGLE},${PER_UE_SEVEN}`, '--out', out]);
    expect(code).toBe(0);
    const svg = fs.readFileSync(out, 'utf-8');
    expect(svg).toContain('<svg');
    expect(svg).toContain('table1-single DL');
    expect(svg).toContain('table1-seven UL');
  });

  it('writes a heatmap with a contour path', () => {
    const out = tmpOut('heat.svg');
    expect(main(['--kind', 'heatmap', '--in', MAP_SINGLE, '--out', out])).toBe(0);
    expect(fs.readFileSync(out, 'utf-8')).toContain('<path');
  });

  it('writes a scatter with the outage color when outage rows exist', () => {
    const out = tmpOut('scatter.svg');
    expect(main(['--kind', 'scatter', '--in', PER_UE_SEVEN, '--out', out, '--direction', 'DL'])).toBe(0);
    expect(fs.readFileSync(out, 'utf-8')).toContain('#08306b');
  });

  it('is deterministic across invocations', () => {
    const out1 = tmpOut('a.svg');
    const out2 = tmpOut('b.svg');
    expect(main(['--kind', 'cdf', '--in', PER_UE_SINGLE, '--out', out1])).toBe(0);
    expect(main(['--kind', 'cdf', '--in', PER_UE_SINGLE, '--out', out2])).toBe(0);
    expect(fs.readFileSync(out1).equals(fs.readFileSync(out2))).toBe(true);
  });

  it('exits nonzero with a descriptive error on malformed input', () => {
    const dir = fs.mkdtempSync(path.join(os.tmpdir(), 'figcli-'));
    const bad = path.join(dir, 'bad.csv');
    fs.writeFileSync(bad, 'not,a,per,ue,file\n1,2,3,4,5\n');
    const spy = vi.spyOn(console, 'error').mockImplementation(() => {});
    try {
      expect(main(['--kind', 'cdf', '--in', bad, '--out', path.join(dir, 'o.svg')])).toBe(1);
      expect(String(spy.mock.calls[0][0])).toMatch(/header/);
    } finally {
      spy.mockRestore();
    }
  });

  it('heatmap refuses multiple inputs', () => {
    expect(() =>
      buildFigure({ kind: 'heatmap', inputs: [MAP_SINGLE, MAP_SINGLE], out: 'x.svg' }),
    ).toThrow(/exactly one/);
  });
});
