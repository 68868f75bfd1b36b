// Session store: the single source of truth behind the page. Every
// field is rebuilt from server responses; nothing is mutated locally.

import {
  AdmissibleEdge,
  AdmissibleForm,
  Api,
  ApiError,
  PieceToken,
  SessionState,
  TraceStep,
} from "./api.js";
import { Graph, Mark, parsePmg } from "./pmg.js";

export interface ViewEdge {
  x: string;
  y: string;
  atX: Mark;
  atY: Mark;
  // rule ids from the last trace that touched this edge, in order
  highlights: string[];
  admissible: Record<PieceToken, AdmissibleForm> | null;
}

export interface ViewGraph {
  nodes: string[];
  edges: ViewEdge[];
}

export interface Preview {
  piece: string;
  // exactly one of the two is set
  state: SessionState | null;
  reason: string | null;
}

export interface EndChoice {
  piece: string;
  token: PieceToken;
  label: string;
  ok: boolean;
  reason: string | null;
}

const MIRROR: Record<PieceToken, PieceToken> = {
  "-->": "<--",
  "<--": "-->",
  "*->": "<-*",
  "<-*": "*->",
};

function formsFor(
  admissible: AdmissibleEdge[],
  x: string,
  y: string,
): Record<PieceToken, AdmissibleForm> | null {
  for (const entry of admissible) {
    if (entry.x === x && entry.y === y) return entry.forms;
    if (entry.x === y && entry.y === x) {
      const flipped = {} as Record<PieceToken, AdmissibleForm>;
      for (const token of Object.keys(entry.forms) as PieceToken[]) {
        flipped[MIRROR[token]] = entry.forms[token];
      }
      return flipped;
    }
  }
  return null;
}

export function buildView(state: SessionState): ViewGraph {
  const graph: Graph = parsePmg(state.graph);
  const trace: TraceStep[] = state.trace ?? [];
  return {
    nodes: graph.nodes,
    edges: graph.edges.map((e) => ({
      ...e,
      highlights: trace
        .filter(
          (t) =>
            (t.x === e.x && t.y === e.y) || (t.x === e.y && t.y === e.x),
        )
        .map((t) => t.rule),
      admissible: formsFor(state.admissible, e.x, e.y),
    })),
  };
}

// The two statements a click on one edge end can assert: an arrowhead
// at that end, or a tail there (which directs the edge outward).
export function endChoices(edge: ViewEdge, end: "x" | "y"): EndChoice[] {
  const tokens: PieceToken[] = end === "y" ? ["*->", "<--"] : ["<-*", "-->"];
  const labels =
    end === "y"
      ? [`arrowhead at ${edge.y}`, `tail at ${edge.y} (${edge.y} → ${edge.x})`]
      : [`arrowhead at ${edge.x}`, `tail at ${edge.x} (${edge.x} → ${edge.y})`];
  return tokens.map((token, i) => {
    const form = edge.admissible?.[token];
    return {
      piece: `${edge.x} ${token} ${edge.y}`,
      token,
      label: labels[i],
      ok: form?.ok ?? false,
      reason: form?.reason ?? null,
    };
  });
}

export class SessionStore {
  api: Api;
  state: SessionState | null = null;
  view: ViewGraph | null = null;
  mec: number | null = null; // null = unknown or over the cap: hide the badge
  preview: Preview | null = null;
  verdict: boolean | null = null;
  busy = false;
  lastError: string | null = null;

  private listeners: Array<() => void> = [];

  constructor(api: Api) {
    this.api = api;
  }

  subscribe(fn: () => void): void {
    this.listeners.push(fn);
  }

  private notify(): void {
    for (const fn of this.listeners) fn();
  }

  private apply(state: SessionState): void {
    this.state = state;
    this.view = buildView(state);
    this.preview = null;
    this.verdict = null;
  }

  // one mutation in flight per session: reject overlapping calls
  private async exclusive<T>(work: () => Promise<T>): Promise<T> {
    if (this.busy) {
      throw new Error("a request is already in flight");
    }
    this.busy = true;
    this.lastError = null;
    this.notify();
    try {
      return await work();
    } finally {
      this.busy = false;
      this.notify();
    }
  }

  private async refreshMec(): Promise<void> {
    if (this.state === null) return;
    try {
      const info = await this.api.mecSize(
        this.state.id,
        this.state.accepted.length > 0,
      );
      this.mec = info.size;
    } catch (err) {
      if (err instanceof ApiError && err.status === 413) {
        this.mec = null; // class too large to count: hide, don't guess
      } else {
        throw err;
      }
    }
  }

  async load(graphText: string): Promise<void> {
    await this.exclusive(async () => {
      try {
        this.apply(await this.api.createSession(graphText));
        await this.refreshMec();
      } catch (err) {
        this.lastError = errorText(err);
        throw err;
      }
    });
  }

  async assert(piece: string): Promise<void> {
    await this.exclusive(async () => {
      if (this.state === null) throw new Error("no session");
      try {
        this.apply(await this.api.addKnowledge(this.state.id, piece));
        await this.refreshMec();
      } catch (err) {
        this.lastError = errorText(err);
        if (!(err instanceof ApiError)) throw err;
      }
    });
  }

  // preview only: the session state is left untouched either way
  async whatIf(piece: string): Promise<void> {
    await this.exclusive(async () => {
      if (this.state === null) throw new Error("no session");
      try {
        const state = await this.api.whatIf(this.state.id, piece);
        this.preview = { piece, state, reason: null };
      } catch (err) {
        if (err instanceof ApiError) {
          this.preview = { piece, state: null, reason: err.detail };
        } else {
          throw err;
        }
      }
    });
  }

  async undo(): Promise<void> {
    await this.exclusive(async () => {
      if (this.state === null) throw new Error("no session");
      try {
        this.apply(await this.api.undo(this.state.id));
        await this.refreshMec();
      } catch (err) {
        this.lastError = errorText(err);
        if (!(err instanceof ApiError)) throw err;
      }
    });
  }

  async verify(): Promise<void> {
    await this.exclusive(async () => {
      if (this.state === null) throw new Error("no session");
      const res = await this.api.verify(this.state.id);
      this.verdict = res.verdict;
    });
  }
}

function errorText(err: unknown): string {
  if (err instanceof ApiError) return err.detail || err.error;
  return err instanceof Error ? err.message : String(err);
}
