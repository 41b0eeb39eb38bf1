// Pure SVG rendering of a seed view.  The output is a string so the
// renderer can be tested without a DOM; main.ts injects it and binds
// events by the data-position attributes.

import { gridLayout, toPixels } from "./layout.js";
import { partitionGlyph } from "./glyphs.js";
import { labelText, type SessionInfo } from "./types.js";

export interface ExchangeBadge {
  position: number; // 1-based
  from: number[] | null;
  to: number[];
}

export interface SeedView {
  info: SessionInfo;
  selected: number[]; // up to two 1-based positions for the lambda panel
  badge: ExchangeBadge | null;
  pending: boolean;
}

const VERTEX_RADIUS = 26;

function arrowLine(
  from: { x: number; y: number },
  to: { x: number; y: number },
  bend: number,
): string {
  const dx = to.x - from.x;
  const dy = to.y - from.y;
  const len = Math.hypot(dx, dy) || 1;
  const ux = dx / len;
  const uy = dy / len;
  const sx = from.x + ux * VERTEX_RADIUS;
  const sy = from.y + uy * VERTEX_RADIUS;
  const ex = to.x - ux * (VERTEX_RADIUS + 8);
  const ey = to.y - uy * (VERTEX_RADIUS + 8);
  const mx = (sx + ex) / 2 - uy * bend;
  const my = (sy + ey) / 2 + ux * bend;
  return `<path class="arrow" marker-end="url(#arrowhead)" d="M ${sx} ${sy} Q ${mx} ${my} ${ex} ${ey}"/>`;
}

export function renderSeedSVG(view: SeedView): string {
  const { seed, arrows, mutablePositions } = view.info;
  const layout = gridLayout(seed.m, seed.n);
  if (layout.length !== seed.positions.length) {
    throw new Error(
      `layout has ${layout.length} slots but payload has ${seed.positions.length} positions`,
    );
  }
  const { pixels, width, height } = toPixels(layout);
  const mutable = new Set(mutablePositions);
  const parts: string[] = [];

  // arrows first so vertices draw over them; parallel arrows get a bend
  const seen = new Map<string, number>();
  for (const [from, to] of arrows) {
    const key = `${from}->${to}`;
    const count = seen.get(key) ?? 0;
    seen.set(key, count + 1);
    const a = pixels[from - 1];
    const b = pixels[to - 1];
    if (!a || !b) continue;
    parts.push(arrowLine(a, b, count * 14));
  }

  seed.positions.forEach((position, index) => {
    const pos = index + 1;
    const point = pixels[index];
    if (!point) return;
    const isMutable = mutable.has(pos);
    const classes = [
      "vertex",
      isMutable ? "mutable" : "frozen",
      view.selected.includes(pos) ? "selected" : "",
      view.pending ? "pending" : "",
    ]
      .filter(Boolean)
      .join(" ");
    const shape = isMutable
      ? `<circle cx="${point.x}" cy="${point.y}" r="${VERTEX_RADIUS}"/>`
      : `<rect x="${point.x - VERTEX_RADIUS}" y="${point.y - VERTEX_RADIUS}" width="${2 * VERTEX_RADIUS}" height="${2 * VERTEX_RADIUS}" rx="5"/>`;
    parts.push(
      `<g class="${classes}" data-position="${pos}">` +
        shape +
        `<text x="${point.x}" y="${point.y + 4}" text-anchor="middle">${labelText(position.label)}</text>` +
        (position.label
          ? partitionGlyph(
              position.label,
              seed.m,
              seed.n,
              point.x + VERTEX_RADIUS - 4,
              point.y - VERTEX_RADIUS - 2,
            )
          : "") +
        `</g>`,
    );
  });

  if (view.badge) {
    parts.push(
      `<text class="badge" x="${width / 2}" y="${height - 12}" text-anchor="middle">` +
        `${labelText(view.badge.from)} → ${labelText(view.badge.to)} at position ${view.badge.position}` +
        `</text>`,
    );
  }

  return (
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" width="${width}" height="${height}">` +
    `<defs><marker id="arrowhead" markerWidth="9" markerHeight="7" refX="8" refY="3.5" orient="auto">` +
    `<polygon points="0 0, 9 3.5, 0 7"/></marker></defs>` +
    parts.join("") +
    `</svg>`
  );
}

/** The quasi-commutation rule line shown when two vertices are selected. */
export function lambdaRuleText(view: SeedView): string | null {
  if (view.selected.length !== 2) {
    return null;
  }
  const [a, b] = view.selected as [number, number];
  const row = view.info.seed.L[a - 1];
  if (!row) return null;
  const lambda = row[b - 1];
  if (lambda === undefined) return null;
  return `X${a}·X${b} = q^${lambda} X${b}·X${a}`;
}
