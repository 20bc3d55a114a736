/** Minimal SVG document builder: enough for line plots, cell heatmaps, and
 * scatter plots without a DOM. */

export interface Margins {
  top: number;
  right: number;
  bottom: number;
  left: number;
}

export const DEFAULT_MARGINS: Margins = { top: 36, right: 24, bottom: 48, left: 60 };

/** Affine map from data space to pixel space (y inverted for screen coords). */
export class LinearScale {
  constructor(
    readonly d0: number,
    readonly d1: number,
    readonly r0: number,
    readonly r1: number,
  ) {}

  apply(v: number): number {
    return this.r0 + ((v - this.d0) / (this.d1 - this.d0)) * (this.r1 - this.r0);
  }

  invert(px: number): number {
    return this.d0 + ((px - this.r0) / (this.r1 - this.r0)) * (this.d1 - this.d0);
  }
}

export function niceTicks(lo: number, hi: number, count = 6): number[] {
  const span = hi - lo;
  if (span <= 0) return [lo];
  const rawStep = span / count;
  const mag = 10 ** Math.floor(Math.log10(rawStep));
  const step = [1, 2, 2.5, 5, 10].map((m) => m * mag).find((s) => span / s <= count) ?? mag * 10;
  const start = Math.ceil(lo / step) * step;
  const ticks: number[] = [];
  for (let t = start; t <= hi + 1e-9 * span; t += step) ticks.push(Number(t.toPrecision(12)));
  return ticks;
}

const esc = (s: string) => s.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;').replace(/"/g, '&quot;');

export class Svg {
  private parts: string[] = [];

  constructor(readonly width: number, readonly height: number) {}

  raw(fragment: string): void {
    this.parts.push(fragment);
  }

  rect(x: number, y: number, w: number, h: number, fill: string, extra = ''): void {
    this.parts.push(`<rect x="${x}" y="${y}" width="${w}" height="${h}" fill="${fill}"${extra}/>`);
  }

  circle(cx: number, cy: number, r: number, fill: string): void {
    this.parts.push(`<circle cx="${cx}" cy="${cy}" r="${r}" fill="${fill}"/>`);
  }

  line(x1: number, y1: number, x2: number, y2: number, stroke: string, width = 1): void {
    this.parts.push(`<line x1="${x1}" y1="${y1}" x2="${x2}" y2="${y2}" stroke="${stroke}" stroke-width="${width}"/>`);
  }

  polyline(points: Array<[number, number]>, stroke: string, width = 1.5, extra = ''): void {
    const pts = points.map(([x, y]) => `${x},${y}`).join(' ');
    this.parts.push(`<polyline points="${pts}" fill="none" stroke="${stroke}" stroke-width="${width}"${extra}/>`);
  }

  path(d: string, stroke: string, width = 2, fill = 'none'): void {
    this.parts.push(`<path d="${d}" fill="${fill}" stroke="${stroke}" stroke-width="${width}"/>`);
  }

  text(x: number, y: number, content: string, size = 12, anchor = 'start', extra = ''): void {
    this.parts.push(
      `<text x="${x}" y="${y}" font-size="${size}" text-anchor="${anchor}" font-family="sans-serif"${extra}>${esc(content)}</text>`,
    );
  }

  axes(
    xScale: LinearScale,
    yScale: LinearScale,
    xLabel: string,
    yLabel: string,
    margins: Margins = DEFAULT_MARGINS,
  ): void {
    const x0 = margins.left;
    const x1 = this.width - margins.right;
    const y0 = this.height - margins.bottom;
    const y1 = margins.top;
    this.line(x0, y0, x1, y0, '#000');
    this.line(x0, y0, x0, y1, '#000');
    for (const t of niceTicks(xScale.d0, xScale.d1)) {
      const px = xScale.apply(t);
      this.line(px, y0, px, y0 + 5, '#000');
      this.text(px, y0 + 18, String(t), 10, 'middle');
    }
    for (const t of niceTicks(yScale.d0, yScale.d1)) {
      const py = yScale.apply(t);
      this.line(x0 - 5, py, x0, py, '#000');
      this.text(x0 - 8, py + 3, String(t), 10, 'end');
    }
    this.text((x0 + x1) / 2, this.height - 10, xLabel, 12, 'middle');
    this.text(14, (y0 + y1) / 2, yLabel, 12, 'middle', ` transform="rotate(-90 14 ${(y0 + y1) / 2})"`);
  }

  render(): string {
    return (
      `<svg xmlns="http://www.w3.org/2000/svg" width="${this.width}" height="${this.height}" ` +
      `viewBox="0 0 ${this.width} ${this.height}">\n<rect width="100%" height="100%" fill="white"/>\n` +
      this.parts.join('\n') +
      '\n</svg>\n'
    );
  }
}

export const SERIES_COLORS = ['#0072bd', '#d95319', '#77ac30', '#7e2f8e', '#edb120', '#4dbeee'];

/** Blue-to-red diverging color for dB values (white near zero). */
export function divergingColor(value: number, lo: number, hi: number): string {
  const clamp = (v: number) => Math.max(0, Math.min(1, v));
  const t = clamp(value <= 0 ? 0.5 * (value - lo) / (0 - lo || 1) : 0.5 + 0.5 * value / (hi || 1));
  const lerp = (a: number, b: number, u: number) => Math.round(a + (b - a) * u);
  if (t < 0.5) {
    const u = t / 0.5;
    return `rgb(${lerp(20, 255, u)},${lerp(40, 255, u)},${lerp(140, 255, u)})`;
  }
  const u = (t - 0.5) / 0.5;
  return `rgb(${lerp(255, 180, u)},${lerp(255, 30, u)},${lerp(255, 40, u)})`;
}
