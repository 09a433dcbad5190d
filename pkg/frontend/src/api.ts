// Typed client for the descent-cycling JSON service.

export type Perm = number[];

export interface Problem {
  u: Perm;
  v: Perm;
  w: Perm;
}

export interface Move {
  col: number;
  from: number;
  to: number;
}

export interface Analysis {
  problem: Problem;
  n: number;
  lengths: number[];
  descents: number[][];
  vertex: boolean;
  dc_trivial: boolean | null;
  witness_column: number | null;
  legal_moves: Move[];
  bruhat_possible: boolean | null;
}

export interface MoveResponse {
  problem: Problem;
  analysis: Analysis;
}

export interface PathResponse {
  found: boolean;
  goal: string;
  path?: { start: Problem; moves: Move[] };
  end?: Problem;
}

export interface ApiError {
  error: { code: string; message: string };
}

export class ServiceError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message);
  }
}

export type FetchLike = (
  input: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string },
) => Promise<{ status: number; json(): Promise<unknown> }>;

export class Client {
  constructor(
    private baseUrl: string = "",
    private fetchImpl: FetchLike = fetch.bind(globalThis),
  ) {}

  private async post<T>(endpoint: string, body: unknown): Promise<T> {
    const res = await this.fetchImpl(this.baseUrl + endpoint, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    const data = (await res.json()) as T | ApiError;
    if (res.status >= 400) {
      const err = data as ApiError;
      throw new ServiceError(
        res.status,
        err.error?.code ?? "unknown",
        err.error?.message ?? `request failed with ${res.status}`,
      );
    }
    return data as T;
  }

  analyze(problem: Problem | { u: string; v: string; w: string }): Promise<Analysis> {
    return this.post("/analyze", problem);
  }

  move(problem: Problem, move: Move): Promise<MoveResponse> {
    return this.post("/move", { problem, move });
  }

  path(problem: Problem, goal: "easy" | "trivial"): Promise<PathResponse> {
    return this.post("/path", { problem, goal });
  }

  number(problem: Problem): Promise<{ value: number }> {
    return this.post("/number", problem);
  }
}

export function parsePermText(text: string): Perm {
  const s = text.trim();
  if (!/^[1-9]+$/.test(s)) {
    throw new Error(`expected a digit string like 132, got "${text}"`);
  }
  const vals = s.split("").map(Number);
  const sorted = [...vals].sort((a, b) => a - b);
  for (let i = 0; i < sorted.length; i++) {
    if (sorted[i] !== i + 1) {
      throw new Error(`"${text}" is not a permutation of 1..${vals.length}`);
    }
  }
  return vals;
}

export function formatPerm(p: Perm): string {
  return p.join("");
}

export function sameProblem(a: Problem, b: Problem): boolean {
  return (
    formatPerm(a.u) === formatPerm(b.u) &&
    formatPerm(a.v) === formatPerm(b.v) &&
    formatPerm(a.w) === formatPerm(b.w)
  );
}
