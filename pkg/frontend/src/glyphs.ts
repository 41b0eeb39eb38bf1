// Partition glyphs: the small Young-diagram icon drawn beside a label.
//
// A label {i_1 < ... < i_m} corresponds to the partition whose k-th part
// from the bottom is i_k - k; the glyph shows the diagram inside the
// m x (n-m) box.  This is presentation only; no algebra happens here.

export function partitionOf(label: number[]): number[] {
  const m = label.length;
  const parts = new Array<number>(m).fill(0);
  label.forEach((element, index) => {
    parts[m - 1 - index] = element - (index + 1);
  });
  return parts;
}

/** SVG fragment of the partition diagram, anchored at (x, y). */
export function partitionGlyph(
  label: number[],
  m: number,
  n: number,
  x: number,
  y: number,
  unit = 6,
): string {
  const parts = partitionOf(label);
  const width = n - m;
  const bits: string[] = [
    `<rect x="${x}" y="${y}" width="${width * unit}" height="${m * unit}" class="glyph-box"/>`,
  ];
  parts.forEach((part, row) => {
    for (let col = 0; col < part; col++) {
      bits.push(
        `<rect x="${x + col * unit}" y="${y + row * unit}" width="${unit}" height="${unit}" class="glyph-cell"/>`,
      );
    }
  });
  return `<g class="partition-glyph">${bits.join("")}</g>`;
}
