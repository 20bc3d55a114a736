// Minimal declarations for dependencies that ship without bundled types
// (covering only the APIs this package uses).

declare module 'papaparse' {
  export interface ParseError {
    type: string;
    code: string;
    message: string;
    row?: number;
  }
  export interface ParseResult<T> {
    data: T[];
    errors: ParseError[];
  }
  export interface ParseConfig {
    delimiter?: string;
  }
  function parse<T>(input: string, config?: ParseConfig): ParseResult<T>;
  const Papa: { parse: typeof parse };
  export default Papa;
}

declare module 'd3-contour' {
  export interface ContourMultiPolygon {
    type: 'MultiPolygon';
    value: number;
    coordinates: number[][][][];
  }
  export interface Contours {
    (values: ArrayLike<number>): ContourMultiPolygon[];
    size(size: [number, number]): this;
    thresholds(thresholds: number[]): this;
    smooth(smooth: boolean): this;
  }
  export function contours(): Contours;
}
