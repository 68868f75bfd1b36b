// SVG rendering of a ViewGraph: one line per edge, a glyph per edge
// end (circle / arrowhead / nothing for a tail), two invisible click
// segments per edge, highlight colors from the last trace.

import { circleLayout, edgeGeometry, Point } from "./layout.js";
import { Mark } from "./pmg.js";
import { ViewEdge, ViewGraph } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const NODE_RADIUS = 16;

export type EndClickHandler = (
  edge: ViewEdge,
  end: "x" | "y",
  at: Point,
) => void;

function el(name: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, name);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  return node;
}

function markGlyph(mark: Mark, at: Point, angleIn: number): SVGElement | null {
  if (mark === "circ") {
    return el("circle", {
      cx: String(at.x),
      cy: String(at.y),
      r: "4.5",
      fill: "white",
      stroke: "currentColor",
      "stroke-width": "1.6",
    });
  }
  if (mark === "arrow") {
    // triangle pointing along angleIn (towards the node)
    const tip = {
      x: at.x + 7 * Math.cos(angleIn),
      y: at.y + 7 * Math.sin(angleIn),
    };
    const left = {
      x: at.x + 6 * Math.cos(angleIn + (Math.PI * 3) / 4),
      y: at.y + 6 * Math.sin(angleIn + (Math.PI * 3) / 4),
    };
    const right = {
      x: at.x + 6 * Math.cos(angleIn - (Math.PI * 3) / 4),
      y: at.y + 6 * Math.sin(angleIn - (Math.PI * 3) / 4),
    };
    return el("polygon", {
      points: `${tip.x},${tip.y} ${left.x},${left.y} ${right.x},${right.y}`,
      fill: "currentColor",
    });
  }
  return null; // a tail is just the bare line end
}

export function drawGraph(
  svg: SVGSVGElement,
  view: ViewGraph,
  onEndClick: EndClickHandler,
): void {
  svg.replaceChildren();
  const width = svg.clientWidth || Number(svg.getAttribute("width")) || 520;
  const height = svg.clientHeight || Number(svg.getAttribute("height")) || 420;
  const layout = circleLayout(
    view.nodes,
    width / 2,
    height / 2,
    Math.min(width, height) / 2 - 48,
  );

  for (const edge of view.edges) {
    const px = layout.get(edge.x)!;
    const py = layout.get(edge.y)!;
    const geo = edgeGeometry(px, py, NODE_RADIUS);
    const highlighted = edge.highlights.length > 0;
    const group = el("g", {
      class: "edge" + (highlighted ? " fired" : ""),
      color: highlighted ? "#c75000" : "#333",
    });
    group.appendChild(
      el("line", {
        x1: String(geo.from.x),
        y1: String(geo.from.y),
        x2: String(geo.to.x),
        y2: String(geo.to.y),
        stroke: "currentColor",
        "stroke-width": highlighted ? "2.4" : "1.6",
      }),
    );
    const glyphX = markGlyph(edge.atX, geo.glyphX, geo.angle + Math.PI);
    if (glyphX) group.appendChild(glyphX);
    const glyphY = markGlyph(edge.atY, geo.glyphY, geo.angle);
    if (glyphY) group.appendChild(glyphY);
    if (highlighted) {
      const mid = { x: (geo.from.x + geo.to.x) / 2, y: (geo.from.y + geo.to.y) / 2 };
      const label = el("text", {
        x: String(mid.x + 6),
        y: String(mid.y - 6),
        class: "rule-label",
      });
      label.textContent = edge.highlights.join(",");
      group.appendChild(label);
    }
    for (const end of ["x", "y"] as const) {
      const zone = end === "x" ? geo.hitX : geo.hitY;
      const hit = el("line", {
        x1: String(zone.a.x),
        y1: String(zone.a.y),
        x2: String(zone.b.x),
        y2: String(zone.b.y),
        stroke: "transparent",
        "stroke-width": "14",
        class: "hit",
      });
      hit.addEventListener("click", (ev) => {
        ev.stopPropagation();
        onEndClick(edge, end, zone.a);
      });
      group.appendChild(hit);
    }
    svg.appendChild(group);
  }

  for (const name of view.nodes) {
    const p = layout.get(name)!;
    const group = el("g", { class: "node" });
    group.appendChild(
      el("circle", {
        cx: String(p.x),
        cy: String(p.y),
        r: String(NODE_RADIUS),
        fill: "#f6f4ef",
        stroke: "#555",
        "stroke-width": "1.4",
      }),
    );
    const label = el("text", {
      x: String(p.x),
      y: String(p.y + 4),
      "text-anchor": "middle",
      class: "node-label",
    });
    label.textContent = name;
    group.appendChild(label);
    svg.appendChild(group);
  }
}
