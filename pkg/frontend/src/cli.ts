#!/usr/bin/env node
/** figures --kind cdf|heatmap|scatter --in <files> --out <image.svg>
 *
 * cdf:     one or more per-UE CSVs; overlays one curve per (scenario,
 *          direction) group; --direction DL|UL filters.
 * heatmap: one map grid CSV (map_snr.csv / map_sinr.csv); draws the field
 *          with the 0 dB contour.
 * scatter: one per-UE CSV; UEs colored covered / below 0 dB / outage
 *          (< -10 dB); --direction selects the link direction (default DL).
 */

import * as fs from 'node:fs';
import * as path from 'node:path';
import { readMapCsv, readPerUeCsv } from './csv.js';
import { cdfSeriesFromRows, renderCdf, renderHeatmap, renderScatter } from './render.js';

interface Args {
  kind: string;
  inputs: string[];
  out: string;
  direction?: string;
}

export function parseArgs(argv: string[]): Args {
  let kind = '';
  let out = '';
  let direction: string | undefined;
  const inputs: string[] = [];
  for (let i = 0; i < argv.length; i++) {
    const a = argv[i];
    const next = () => {
      if (i + 1 >= argv.length) throw new Error(`missing value for ${a}`);
      return argv[++i];
    };
    if (a === '--kind') kind = next();
    else if (a === '--in') inputs.push(...next().split(',').filter((s) => s.length > 0));
    else if (a === '--out') out = next();
    else if (a === '--direction') direction = next();
    else throw new Error(`unknown flag: ${a}`);
  }
  if (!['cdf', 'heatmap', 'scatter'].includes(kind)) {
    throw new Error(`--kind must be cdf, heatmap, or scatter (got '${kind}')`);
  }
  if (inputs.length === 0) throw new Error('--in is required');
  if (!out) throw new Error('--out is required');
  if (direction && !['DL', 'UL'].includes(direction)) {
    throw new Error(`--direction must be DL or UL (got '${direction}')`);
  }
  return { kind, inputs, out, direction };
}

export function buildFigure(args: Args): string {
  if (args.kind === 'cdf') {
    const rows = args.inputs.flatMap((f) => readPerUeCsv(f));
    const series = cdfSeriesFromRows(rows, args.direction);
    const suffix = args.direction ? ` (${args.direction})` : '';
    return renderCdf(series, `user spectral efficiency CDF${suffix}`).svg;
  }
  if (args.kind === 'heatmap') {
    if (args.inputs.length !== 1) throw new Error('heatmap takes exactly one map CSV');
    const grid = readMapCsv(args.inputs[0]);
    return renderHeatmap(grid, path.basename(args.inputs[0], '.csv')).svg;
  }
  const rows = args.inputs.flatMap((f) => readPerUeCsv(f));
  const direction = args.direction ?? 'DL';
  return renderScatter(rows, direction, `UE coverage classes (${direction})`).svg;
}

export function main(argv: string[]): number {
  try {
    const args = parseArgs(argv);
    const svg = buildFigure(args);
    fs.mkdirSync(path.dirname(path.resolve(args.out)), { recursive: true });
    fs.writeFileSync(args.out, svg);
    console.log(`wrote ${args.out}`);
    return 0;
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : err}`);
    return 1;
  }
}

const invokedDirectly = (() => {
  if (!process.argv[1]) return false;
  try {
    return fs.realpathSync(process.argv[1]) === fs.realpathSync(new URL(import.meta.url).pathname);
  } catch {
    return false;
  }
})();
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
