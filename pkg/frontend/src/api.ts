/** Typed fetch client for the workbench API. */

import type {
  GeneratorName,
  MoveKind,
  RestrictView,
  SessionState,
  Suggestion,
  TraceDocument,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly errorName: string,
    message: string,
  ) {
    super(message);
  }
}

async function unwrap<T>(response: Response): Promise<T> {
  if (response.ok) {
    return (await response.json()) as T;
  }
  let name = `HTTP ${response.status}`;
  let message = response.statusText;
  try {
    const body = await response.json();
    const detail = body?.detail;
    if (typeof detail === "string") {
      message = detail;
    } else if (detail && typeof detail === "object") {
      name = detail.error ?? name;
      message = detail.message ?? JSON.stringify(detail);
    }
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(response.status, name, message);
}

export class ApiClient {
  constructor(readonly baseUrl: string) {}

  private url(path: string): string {
    return `${this.baseUrl}${path}`;
  }

  private post<T>(path: string, body?: unknown): Promise<T> {
    return fetch(this.url(path), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    }).then((r) => unwrap<T>(r));
  }

  private get<T>(path: string): Promise<T> {
    return fetch(this.url(path)).then((r) => unwrap<T>(r));
  }

  health(): Promise<{ status: string }> {
    return this.get("/health");
  }

  createFromGenerator(
    name: GeneratorName,
    params: Record<string, number>,
  ): Promise<SessionState> {
    return this.post("/sessions", { source: { kind: "generator", name, params } });
  }

  createFromDocument(document: unknown): Promise<SessionState> {
    return this.post("/sessions", { source: { kind: "upload", document } });
  }

  getSession(id: string): Promise<SessionState> {
    return this.get(`/sessions/${id}`);
  }

  applyMove(
    id: string,
    kind: MoveKind,
    endpoints: [number, number],
  ): Promise<SessionState> {
    return this.post(`/sessions/${id}/moves`, { kind, endpoints });
  }

  undo(id: string): Promise<SessionState> {
    return this.post(`/sessions/${id}/undo`);
  }

  restrict(id: string, face: number[]): Promise<RestrictView> {
    return this.get(`/sessions/${id}/restrict?face=${face.join(",")}`);
  }

  suggestions(id: string, targets?: string[]): Promise<{ suggestions: Suggestion[] }> {
    const query = targets?.length ? `?targets=${targets.join(",")}` : "";
    return this.get(`/sessions/${id}/suggestions${query}`);
  }

  trace(id: string): Promise<TraceDocument> {
    return this.get(`/sessions/${id}/trace`);
  }
}
