// Deterministic layout of seed positions.
//
// The service orders positions as: mutable grid vertices (i, j) with
// 1 <= i < m, 1 <= j < n-m in row-major order, then the frozen ring in
// cyclic-interval order: base, bottom row (m, 1..n-m), and the right
// column (m-1..1, n-m).  Slots never move under mutation, so laying out
// by index keeps the picture stable whether or not labels survive.

export interface Point {
  x: number;
  y: number;
}

export function gridLayout(m: number, n: number): Point[] {
  const width = n - m;
  const points: Point[] = [];
  for (let i = 1; i < m; i++) {
    for (let j = 1; j < width; j++) {
      points.push({ x: j, y: i });
    }
  }
  points.push({ x: 0, y: 0 }); // base, up-left of (1,1)
  for (let j = 1; j <= width; j++) {
    points.push({ x: j, y: m });
  }
  for (let i = m - 1; i >= 1; i--) {
    points.push({ x: width, y: i });
  }
  return points;
}

export function positionCount(m: number, n: number): number {
  return m * (n - m) + 1;
}

/** Pixel coordinates with margins, scaled for an SVG canvas. */
export function toPixels(
  points: Point[],
  cell = 110,
  margin = 70,
): { pixels: Point[]; width: number; height: number } {
  const xs = points.map((p) => p.x);
  const ys = points.map((p) => p.y);
  const minX = Math.min(...xs);
  const minY = Math.min(...ys);
  const pixels = points.map((p) => ({
    x: margin + (p.x - minX) * cell,
    y: margin + (p.y - minY) * cell,
  }));
  const width = margin * 2 + (Math.max(...xs) - minX) * cell;
  const height = margin * 2 + (Math.max(...ys) - minY) * cell;
  return { pixels, width, height };
}
