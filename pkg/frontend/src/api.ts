import type {
  AnalysisQuery,
  AnalysisResponse,
  ErrorBody,
  Health,
  PlayerEntry,
} from "./types.js";

export const DEFAULT_API_BASE = "http://127.0.0.1:8000";

/** Error reported by the service with a machine-readable code. */
export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

// Structural subset of the fetch Response so tests can stub it.
export interface HttpResponse {
  ok: boolean;
  status: number;
  statusText: string;
  json(): Promise<unknown>;
}

export type FetchLike = (
  input: string,
  init?: { signal?: AbortSignal },
) => Promise<HttpResponse>;

export function buildAnalysisQuery(query: AnalysisQuery): string {
  const qs = new URLSearchParams();
  qs.set("player", query.player);
  qs.set("type", query.type);
  qs.set("opponents", query.opponents);
  if (query.from) qs.set("from", query.from);
  if (query.to) qs.set("to", query.to);
  if (query.top_k !== undefined) qs.set("top_k", String(query.top_k));
  return qs.toString();
}

async function toApiError(res: HttpResponse): Promise<ApiError> {
  let body: ErrorBody | null = null;
  try {
    body = (await res.json()) as ErrorBody;
  } catch {
    body = null;
  }
  if (body && body.error && typeof body.error.code === "string") {
    return new ApiError(body.error.code, body.error.message, res.status);
  }
  return new ApiError(
    `HTTP_${res.status}`,
    res.statusText || "request failed",
    res.status,
  );
}

export class ApiClient {
  constructor(
    readonly baseUrl: string = DEFAULT_API_BASE,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  health(): Promise<Health> {
    return this.get("/health");
  }

  players(): Promise<PlayerEntry[]> {
    return this.get("/players");
  }

  analysis(query: AnalysisQuery, signal?: AbortSignal): Promise<AnalysisResponse> {
    return this.get(`/analysis?${buildAnalysisQuery(query)}`, signal);
  }

  private async get<T>(path: string, signal?: AbortSignal): Promise<T> {
    const res = await this.fetchFn(`${this.baseUrl}${path}`, { signal });
    if (!res.ok) {
      throw await toApiError(res);
    }
    return (await res.json()) as T;
  }
}

/**
 * Supersession of in-flight requests. begin() hands out a monotonically
 * increasing ticket and aborts the previous request's signal; only the holder
 * of the latest ticket may render, so a response that arrives after a newer
 * request was issued is discarded.
 */
export class RequestSequencer {
  private seq = 0;
  private controller: AbortController | null = null;

  begin(): { ticket: number; signal: AbortSignal } {
    this.controller?.abort();
    this.controller = new AbortController();
    this.seq += 1;
    return { ticket: this.seq, signal: this.controller.signal };
  }

  isCurrent(ticket: number): boolean {
    return ticket === this.seq;
  }
}
