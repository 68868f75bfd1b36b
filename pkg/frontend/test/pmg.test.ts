import { describe, expect, it } from "vitest";

import {
  Edge,
  Graph,
  Mark,
  PmgError,
  findEdge,
  markAt,
  parsePmg,
  renderPmg,
  TOKENS,
} from "../src/pmg.js";
import { created, afterKnowledge } from "./fixtures.js";

// small deterministic generator, enough to sweep the grammar
function lcg(seed: number): () => number {
  let s = seed >>> 0;
  return () => {
    s = (s * 1664525 + 1013904223) >>> 0;
    return s / 2 ** 32;
  };
}

function randomGraph(rand: () => number): Graph {
  const n = 2 + Math.floor(rand() * 5);
  const nodes = Array.from({ length: n }, (_, i) => `N${i}`);
  const marks: Mark[] = ["tail", "arrow", "circ"];
  const edges: Edge[] = [];
  for (let i = 0; i < n; i++) {
    for (let j = i + 1; j < n; j++) {
      if (rand() < 0.5) continue;
      let atX = marks[Math.floor(rand() * 3)];
      let atY = marks[Math.floor(rand() * 3)];
      if (atX === "tail" && atY !== "arrow") atY = "arrow";
      if (atY === "tail" && atX !== "arrow") atX = "arrow";
      edges.push(
        rand() < 0.5
          ? { x: nodes[i], y: nodes[j], atX, atY }
          : { x: nodes[j], y: nodes[i], atX: atY, atY: atX },
      );
    }
  }
  return { nodes, edges };
}

describe("pmg grammar", () => {
  it("parses every token", () => {
    const g = parsePmg(
      "nodes: A B C D E F G\n" +
        "A o-o B\nB o-> C\nC <-o D\nD --> E\nE <-- F\nF <-> G\n",
    );
    expect(g.nodes).toEqual(["A", "B", "C", "D", "E", "F", "G"]);
    expect(markAt(findEdge(g, "B", "A")!, "A")).toBe("circ");
    expect(markAt(findEdge(g, "B", "C")!, "C")).toBe("arrow");
    expect(markAt(findEdge(g, "C", "D")!, "C")).toBe("arrow");
    expect(markAt(findEdge(g, "D", "E")!, "D")).toBe("tail");
    expect(markAt(findEdge(g, "E", "F")!, "E")).toBe("arrow");
    expect(markAt(findEdge(g, "F", "G")!, "F")).toBe("arrow");
    expect(markAt(findEdge(g, "F", "G")!, "G")).toBe("arrow");
  });

  it("round-trips random graphs", () => {
    const rand = lcg(20250814);
    for (let trial = 0; trial < 200; trial++) {
      const g = randomGraph(rand);
      expect(parsePmg(renderPmg(g))).toEqual(g);
    }
  });

  it("round-trips server renders byte for byte", () => {
    for (const text of [created.graph, afterKnowledge.graph]) {
      expect(renderPmg(parsePmg(text))).toBe(text);
    }
  });

  it("skips comments and blank lines", () => {
    const g = parsePmg("# header\nnodes: A B\n\nA o-o B  # trailing\n");
    expect(g.edges).toHaveLength(1);
  });

  it("rejects bad input with line numbers", () => {
    expect(() => parsePmg("A o-o B\n")).toThrow(/line 1: expected a `nodes:`/);
    expect(() => parsePmg("nodes: A B\nA --o B\n")).toThrow(
      /line 2: unknown edge token '--o'/,
    );
    expect(() => parsePmg("nodes: A B\nA o-o Z\n")).toThrow(/unknown node/);
    expect(() => parsePmg("nodes: A B\nA o-o B\nB o-> A\n")).toThrow(
      /duplicate edge/,
    );
    expect(() => parsePmg("nodes: A A\n")).toThrow(PmgError);
    expect(() => parsePmg("nodes: A B\nA o-o A\n")).toThrow(/self loop/);
  });

  it("has exactly the six edge tokens", () => {
    expect(Object.keys(TOKENS).sort()).toEqual([
      "-->",
      "<--",
      "<->",
      "<-o",
      "o->",
      "o-o",
    ]);
  });
});
