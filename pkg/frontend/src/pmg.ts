// Client-side parser/renderer for the .pmg text format the server
// speaks: a `nodes:` header line, then one `X token Y` line per edge.

export type Mark = "tail" | "arrow" | "circ";

export interface Edge {
  x: string;
  y: string;
  atX: Mark;
  atY: Mark;
}

export interface Graph {
  nodes: string[];
  edges: Edge[];
}

export const TOKENS: Record<string, [Mark, Mark]> = {
  "o-o": ["circ", "circ"],
  "o->": ["circ", "arrow"],
  "<-o": ["arrow", "circ"],
  "-->": ["tail", "arrow"],
  "<--": ["arrow", "tail"],
  "<->": ["arrow", "arrow"],
};

const GLYPH_X: Record<Mark, string> = { tail: "-", circ: "o", arrow: "<" };
const GLYPH_Y: Record<Mark, string> = { tail: "-", circ: "o", arrow: ">" };

export class PmgError extends Error {
  line: number;

  constructor(line: number, message: string) {
    super(`line ${line}: ${message}`);
    this.line = line;
  }
}

export function edgeToken(atX: Mark, atY: Mark): string {
  const token = GLYPH_X[atX] + "-" + GLYPH_Y[atY];
  if (!(token in TOKENS)) {
    throw new Error(`no edge token for marks ${atX}, ${atY}`);
  }
  return token;
}

export function parsePmg(text: string): Graph {
  const nodes: string[] = [];
  const edges: Edge[] = [];
  const seen = new Set<string>();
  let haveHeader = false;
  const lines = text.split("\n");
  for (let i = 0; i < lines.length; i++) {
    const line = lines[i].split("#", 1)[0].trim();
    if (line === "") continue;
    const lineNo = i + 1;
    if (!haveHeader) {
      if (!line.startsWith("nodes:")) {
        throw new PmgError(lineNo, "expected a `nodes:` header first");
      }
      for (const name of line.slice("nodes:".length).trim().split(/\s+/)) {
        if (name === "") continue;
        if (nodes.includes(name)) {
          throw new PmgError(lineNo, `duplicate node ${name}`);
        }
        nodes.push(name);
      }
      haveHeader = true;
      continue;
    }
    const fields = line.split(/\s+/);
    if (fields.length !== 3) {
      throw new PmgError(lineNo, "expected `X token Y`");
    }
    const [x, token, y] = fields;
    const marks = TOKENS[token];
    if (marks === undefined) {
      throw new PmgError(
        lineNo,
        `unknown edge token '${token}' (valid: ${Object.keys(TOKENS).join(" ")})`,
      );
    }
    if (!nodes.includes(x) || !nodes.includes(y)) {
      throw new PmgError(lineNo, `unknown node in '${line}'`);
    }
    if (x === y) {
      throw new PmgError(lineNo, `self loop at ${x}`);
    }
    const key = x < y ? `${x}|${y}` : `${y}|${x}`;
    if (seen.has(key)) {
      throw new PmgError(lineNo, `duplicate edge ${x}-${y}`);
    }
    seen.add(key);
    edges.push({ x, y, atX: marks[0], atY: marks[1] });
  }
  if (!haveHeader) {
    throw new PmgError(1, "expected a `nodes:` header first");
  }
  return { nodes, edges };
}

export function renderPmg(g: Graph): string {
  const lines = ["nodes: " + g.nodes.join(" ")];
  for (const e of g.edges) {
    lines.push(`${e.x} ${edgeToken(e.atX, e.atY)} ${e.y}`);
  }
  return lines.join("\n") + "\n";
}

// Edges are undirected records; a-b and b-a name the same edge.
export function findEdge(g: Graph, a: string, b: string): Edge | null {
  for (const e of g.edges) {
    if ((e.x === a && e.y === b) || (e.x === b && e.y === a)) return e;
  }
  return null;
}

export function markAt(e: Edge, node: string): Mark {
  if (node === e.x) return e.atX;
  if (node === e.y) return e.atY;
  throw new Error(`${node} is not an endpoint of ${e.x}-${e.y}`);
}
