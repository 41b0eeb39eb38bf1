import type {
  MutateResponse,
  SeedPayload,
  SessionCreated,
  SessionInfo,
  VariableTerm,
} from "./types.js";

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Minimal typed client for the qgrass session service. */
export class QgrassClient {
  private readonly fetchImpl: FetchLike;

  constructor(readonly baseUrl: string, fetchImpl?: FetchLike) {
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    const payload = await response.json().catch(() => ({}));
    if (!response.ok) {
      const message =
        typeof payload === "object" && payload !== null && "error" in payload
          ? String((payload as { error: unknown }).error)
          : `${method} ${path} failed with ${response.status}`;
      throw new ApiError(response.status, message);
    }
    return payload as T;
  }

  createSession(m: number, n: number): Promise<SessionCreated> {
    return this.request<SessionCreated>("POST", "/sessions", { m, n });
  }

  getSession(id: string): Promise<SessionInfo> {
    return this.request<SessionInfo>("GET", `/sessions/${id}`);
  }

  mutate(id: string, position: number): Promise<MutateResponse> {
    return this.request<MutateResponse>("POST", `/sessions/${id}/mutate`, {
      position,
    });
  }

  undo(id: string): Promise<{ seed: SeedPayload }> {
    return this.request<{ seed: SeedPayload }>("POST", `/sessions/${id}/undo`);
  }

  variable(id: string, position: number): Promise<VariableTerm[]> {
    return this.request<VariableTerm[]>("GET", `/sessions/${id}/variables/${position}`);
  }

  quasiCommutation(id: string, a: number, b: number): Promise<number> {
    return this.request<{ lambda: number }>(
      "GET",
      `/sessions/${id}/quasicommutation?a=${a}&b=${b}`,
    ).then((payload) => payload.lambda);
  }
}
