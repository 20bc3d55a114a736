/** Empirical CDF series exactly as plotted: sorted values vs (i+1)/n. */

export interface CdfSeries {
  label: string;
  x: number[];
  y: number[];
}

export function cdfSeries(values: number[], label: string): CdfSeries {
  if (values.length === 0) throw new Error(`empty sample for CDF series '${label}'`);
  const x = [...values].sort((a, b) => a - b);
  const n = x.length;
  const y = x.map((_, i) => (i + 1) / n);
  return { label, x, y };
}

/** Linear-interpolated quantile matching numpy's default percentile method. */
export function quantile(sorted: number[], p: number): number {
  const n = sorted.length;
  const h = (n - 1) * p;
  const lo = Math.floor(h);
  const hi = Math.min(lo + 1, n - 1);
  return sorted[lo] + (h - lo) * (sorted[hi] - sorted[lo]);
}
