/** Figure builders: SE CDF overlays, coverage heatmaps with the 0 dB
 * contour, and UE scatter plots colored by coverage class. */

import { contours } from 'd3-contour';
import { cdfSeries, CdfSeries } from './cdf.js';
import { MapGrid, UeRow } from './csv.js';
import { DEFAULT_MARGINS, LinearScale, SERIES_COLORS, Svg, divergingColor } from './svg.js';

export const COVERAGE_THRESHOLD_DB = 0;
export const OUTAGE_THRESHOLD_DB = -10;

const WIDTH = 640;
const HEIGHT = 480;

function frameScales(
  xDomain: [number, number],
  yDomain: [number, number],
): { x: LinearScale; y: LinearScale } {
  const m = DEFAULT_MARGINS;
  return {
    x: new LinearScale(xDomain[0], xDomain[1], m.left, WIDTH - m.right),
    y: new LinearScale(yDomain[0], yDomain[1], HEIGHT - m.bottom, m.top),
  };
}

/** One CDF curve per (scenario, direction) group present in the rows. */
export function cdfSeriesFromRows(rows: UeRow[], direction?: string): CdfSeries[] {
  const groups = new Map<string, number[]>();
  for (const r of rows) {
    if (direction && r.direction !== direction) continue;
    const key = `${r.scenario} ${r.direction}`;
    if (!groups.has(key)) groups.set(key, []);
    groups.get(key)!.push(r.se_bps_hz);
  }
  if (groups.size === 0) {
    throw new Error(direction ? `no rows with direction '${direction}'` : 'no rows to plot');
  }
  return [...groups.entries()].map(([label, values]) => cdfSeries(values, label));
}

export interface CdfFigure {
  svg: string;
  series: CdfSeries[];
  /** pixel-space polylines, parallel to series (for verification) */
  points: Array<Array<[number, number]>>;
}

export function renderCdf(seriesList: CdfSeries[], title: string): CdfFigure {
  const xMax = Math.max(...seriesList.map((s) => s.x[s.x.length - 1]));
  const { x, y } = frameScales([0, xMax], [0, 1]);
  const svg = new Svg(WIDTH, HEIGHT);
  svg.axes(x, y, 'spectral efficiency (bps/Hz)', 'cumulative probability');
  svg.text(WIDTH / 2, 20, title, 13, 'middle');
  const points: Array<Array<[number, number]>> = [];
  seriesList.forEach((s, k) => {
    const pts = s.x.map((v, i) => [x.apply(v), y.apply(s.y[i])] as [number, number]);
    points.push(pts);
    svg.polyline(pts, SERIES_COLORS[k % SERIES_COLORS.length], 2);
    svg.text(WIDTH - DEFAULT_MARGINS.right - 8, DEFAULT_MARGINS.top + 16 * (k + 1),
      s.label, 11, 'end', ` fill="${SERIES_COLORS[k % SERIES_COLORS.length]}"`);
  });
  return { svg: svg.render(), series: seriesList, points };
}

export interface HeatmapFigure {
  svg: string;
  /** 0 dB contour rings in data coordinates (meters) */
  zeroContours: Array<Array<[number, number]>>;
}

/** Contour rings at a threshold, in data coordinates.
 *
 * d3-contour works in grid-index space where the sample values[i][j] sits
 * at position (j + 0.5, i + 0.5); the -0.5 shift below maps ring vertices
 * back onto the tick lattice.
 */
export function contourRings(grid: MapGrid, threshold: number): Array<Array<[number, number]>> {
  const nY = grid.y.length;
  const nX = grid.x.length;
  const flat = new Float64Array(nX * nY);
  for (let i = 0; i < nY; i++) {
    for (let j = 0; j < nX; j++) flat[i * nX + j] = grid.values[i][j];
  }
  const stepX = nX > 1 ? grid.x[1] - grid.x[0] : 1;
  const stepY = nY > 1 ? grid.y[1] - grid.y[0] : 1;
  const polys = contours().size([nX, nY]).thresholds([threshold])(Array.from(flat));
  const rings: Array<Array<[number, number]>> = [];
  for (const poly of polys) {
    for (const polygon of poly.coordinates) {
      for (const ring of polygon) {
        rings.push(
          ring.map(([gx, gy]) => [
            grid.x[0] + (gx - 0.5) * stepX,
            grid.y[0] + (gy - 0.5) * stepY,
          ] as [number, number]),
        );
      }
    }
  }
  return rings;
}

export function renderHeatmap(grid: MapGrid, title: string): HeatmapFigure {
  const { x, y } = frameScales([grid.x[0], grid.x[grid.x.length - 1]], [grid.y[0], grid.y[grid.y.length - 1]]);
  const svg = new Svg(WIDTH, HEIGHT);
  const lo = Math.min(...grid.values.map((row) => Math.min(...row)));
  const hi = Math.max(...grid.values.map((row) => Math.max(...row)));
  const stepX = grid.x.length > 1 ? grid.x[1] - grid.x[0] : 1;
  const stepY = grid.y.length > 1 ? grid.y[1] - grid.y[0] : 1;
  const w = Math.abs(x.apply(stepX) - x.apply(0));
  const h = Math.abs(y.apply(stepY) - y.apply(0));
  for (let i = 0; i < grid.y.length; i++) {
    for (let j = 0; j < grid.x.length; j++) {
      const px = x.apply(grid.x[j] - stepX / 2);
      const py = y.apply(grid.y[i] + stepY / 2);
      svg.rect(px, py, w + 0.5, h + 0.5, divergingColor(grid.values[i][j], lo, hi));
    }
  }
  const rings = contourRings(grid, COVERAGE_THRESHOLD_DB);
  for (const ring of rings) {
    const d = ring
      .map(([rx, ry], k) => `${k === 0 ? 'M' : 'L'}${x.apply(rx).toFixed(2)} ${y.apply(ry).toFixed(2)}`)
      .join(' ') + ' Z';
    svg.path(d, '#000000', 2);
  }
  svg.axes(x, y, 'x (m)', 'y (m)');
  svg.text(WIDTH / 2, 20, `${title} (black: 0 dB contour)`, 13, 'middle');
  return { svg: svg.render(), zeroContours: rings };
}

export interface ScatterFigure {
  svg: string;
  counts: { covered: number; uncovered: number; outage: number };
}

export const SCATTER_COLORS = {
  covered: '#4daf4a',
  uncovered: '#ff7f00',
  outage: '#08306b',
} as const;

export function classifyRow(row: UeRow): keyof typeof SCATTER_COLORS {
  if (row.sinr_db < OUTAGE_THRESHOLD_DB) return 'outage';
  if (row.sinr_db < COVERAGE_THRESHOLD_DB) return 'uncovered';
  return 'covered';
}

export function renderScatter(rows: UeRow[], direction: string, title: string): ScatterFigure {
  const subset = rows.filter((r) => r.direction === direction);
  if (subset.length === 0) throw new Error(`no rows with direction '${direction}'`);
  const extent = Math.max(...subset.map((r) => Math.max(Math.abs(r.x_m), Math.abs(r.y_m))));
  const { x, y } = frameScales([-extent, extent], [-extent, extent]);
  const svg = new Svg(WIDTH, HEIGHT);
  svg.axes(x, y, 'x (m)', 'y (m)');
  svg.text(WIDTH / 2, 20, title, 13, 'middle');
  const counts = { covered: 0, uncovered: 0, outage: 0 };
  for (const r of subset) {
    const cls = classifyRow(r);
    counts[cls] += 1;
    svg.circle(x.apply(r.x_m), y.apply(r.y_m), 2.2, SCATTER_COLORS[cls]);
  }
  const legend: Array<[string, string]> = [
    [`SINR >= 0 dB (${counts.covered})`, SCATTER_COLORS.covered],
    [`below 0 dB (${counts.uncovered})`, SCATTER_COLORS.uncovered],
    [`outage < -10 dB (${counts.outage})`, SCATTER_COLORS.outage],
  ];
  legend.forEach(([label, color], k) => {
    svg.circle(DEFAULT_MARGINS.left + 10, DEFAULT_MARGINS.top + 14 + 16 * k, 4, color);
    svg.text(DEFAULT_MARGINS.left + 20, DEFAULT_MARGINS.top + 18 + 16 * k, label, 11);
  });
  return { svg: svg.render(), counts };
}
