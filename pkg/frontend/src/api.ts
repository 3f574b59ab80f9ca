import type {
  CandidatePage,
  DecisionBody,
  PlanMeta,
  ProgressSummary,
  StoredDecision,
} from "./types.js";

/** Error carrying the HTTP status so the UI can distinguish 404/422. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

/**
 * Thin client over the review service. Tracks the plan hash from the
 * first response and flags any later mismatch (plan/log swapped under a
 * running session).
 */
export class ApiClient {
  planHash: string | null = null;
  planChanged = false;

  constructor(
    private readonly base: string = "",
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private checkHash(response: Response): void {
    const hash = response.headers.get("X-Plan-Hash");
    if (hash === null) return;
    if (this.planHash === null) {
      this.planHash = hash;
    } else if (hash !== this.planHash) {
      this.planChanged = true;
    }
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(`${this.base}${path}`, init);
    this.checkHash(response);
    if (!response.ok) {
      let detail = response.statusText;
      try {
        const body = (await response.json()) as { detail?: string };
        if (body.detail) detail = body.detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  planMeta(): Promise<PlanMeta> {
    return this.request<PlanMeta>("/api/plan");
  }

  candidates(page: number, pageSize: number, status = "", bucket = ""): Promise<CandidatePage> {
    const params = new URLSearchParams({
      page: String(page),
      page_size: String(pageSize),
    });
    if (status) params.set("status", status);
    if (bucket) params.set("bucket", bucket);
    return this.request<CandidatePage>(`/api/candidates?${params}`);
  }

  postDecision(body: DecisionBody): Promise<StoredDecision> {
    return this.request<StoredDecision>("/api/decisions", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  progress(): Promise<ProgressSummary> {
    return this.request<ProgressSummary>("/api/progress");
  }
}
