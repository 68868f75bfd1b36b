// Geometry: nodes on a circle, mark glyphs and click zones near the
// two ends of each edge line.

export interface Point {
  x: number;
  y: number;
}

export function circleLayout(
  nodes: string[],
  cx: number,
  cy: number,
  radius: number,
): Map<string, Point> {
  const out = new Map<string, Point>();
  nodes.forEach((name, i) => {
    const angle = (2 * Math.PI * i) / nodes.length - Math.PI / 2;
    out.set(name, {
      x: cx + radius * Math.cos(angle),
      y: cy + radius * Math.sin(angle),
    });
  });
  return out;
}

// point `dist` along the segment from p to q
export function along(p: Point, q: Point, dist: number): Point {
  const dx = q.x - p.x;
  const dy = q.y - p.y;
  const len = Math.hypot(dx, dy) || 1;
  return { x: p.x + (dx / len) * dist, y: p.y + (dy / len) * dist };
}

export interface EdgeGeometry {
  from: Point; // on the rim of the x node
  to: Point; // on the rim of the y node
  glyphX: Point; // where the mark at x is drawn
  glyphY: Point;
  hitX: { a: Point; b: Point }; // x-end click segment (inner 40%)
  hitY: { a: Point; b: Point };
  angle: number; // direction x -> y in radians
}

export function edgeGeometry(
  px: Point,
  py: Point,
  nodeRadius: number,
): EdgeGeometry {
  const from = along(px, py, nodeRadius);
  const to = along(py, px, nodeRadius);
  const len = Math.hypot(to.x - from.x, to.y - from.y);
  const mid = along(from, to, len / 2);
  return {
    from,
    to,
    glyphX: along(from, to, 9),
    glyphY: along(to, from, 9),
    hitX: { a: from, b: mid },
    hitY: { a: to, b: mid },
    angle: Math.atan2(py.y - px.y, py.x - px.x),
  };
}
