// Typed fetch client for the session service. Every method maps to
// one endpoint; errors carry the server's {error, detail} body.

export type PieceToken = "-->" | "<--" | "*->" | "<-*";

export interface AdmissibleForm {
  ok: boolean;
  reason: string | null;
}

export interface AdmissibleEdge {
  x: string;
  y: string;
  forms: Record<PieceToken, AdmissibleForm>;
}

export interface TraceStep {
  rule: string;
  x: string;
  y: string;
  mark: string;
  witness: string[];
}

export interface SessionState {
  id: string;
  graph: string;
  accepted: string[];
  admissible: AdmissibleEdge[];
  canUndo: boolean;
  trace?: TraceStep[];
}

export interface MecInfo {
  size: number;
  restricted: boolean;
}

export interface VerifyResult {
  verdict: boolean;
  report: Record<string, unknown>;
}

export class ApiError extends Error {
  status: number;
  error: string;
  detail: string;

  constructor(status: number, error: string, detail: string) {
    super(detail || error);
    this.status = status;
    this.error = error;
    this.detail = detail;
  }
}

export interface Api {
  createSession(graph: string): Promise<SessionState>;
  getSession(id: string): Promise<SessionState>;
  addKnowledge(id: string, piece: string): Promise<SessionState>;
  whatIf(id: string, piece: string): Promise<SessionState>;
  undo(id: string): Promise<SessionState>;
  mecSize(id: string, restrict: boolean): Promise<MecInfo>;
  verify(id: string): Promise<VerifyResult>;
}

export class SessionApi implements Api {
  baseUrl: string;

  constructor(baseUrl = "") {
    this.baseUrl = baseUrl;
  }

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    const res = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!res.ok) {
      let error = `http ${res.status}`;
      let detail = "";
      try {
        const payload = await res.json();
        error = payload.error ?? error;
        detail = payload.detail ?? "";
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(res.status, error, detail);
    }
    return res.json() as Promise<T>;
  }

  createSession(graph: string): Promise<SessionState> {
    return this.request("POST", "/sessions", { graph });
  }

  getSession(id: string): Promise<SessionState> {
    return this.request("GET", `/sessions/${id}`);
  }

  addKnowledge(id: string, piece: string): Promise<SessionState> {
    return this.request("POST", `/sessions/${id}/knowledge`, { piece });
  }

  whatIf(id: string, piece: string): Promise<SessionState> {
    return this.request("POST", `/sessions/${id}/whatif`, { piece });
  }

  undo(id: string): Promise<SessionState> {
    return this.request("POST", `/sessions/${id}/undo`);
  }

  mecSize(id: string, restrict: boolean): Promise<MecInfo> {
    const query = restrict ? "?restrict=true" : "";
    return this.request("GET", `/sessions/${id}/mec${query}`);
  }

  verify(id: string): Promise<VerifyResult> {
    return this.request("POST", `/sessions/${id}/verify`);
  }
}
