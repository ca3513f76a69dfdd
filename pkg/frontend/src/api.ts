/** Typed client for the game service. All bodies mirror the server wire
 * format exactly; nothing here mutates or reinterprets the payloads. */

export type MoveKind = "lend" | "borrow";

export interface Rational {
  num: number;
  den: number;
}

export interface InstancePayload {
  name?: string | null;
  num_vertices: number;
  edges: [number, number][];
  divisor: number[];
  expected?: unknown;
}

export interface GameState {
  id: string;
  state: number[];
  move_count: number;
  is_effective: boolean;
  is_stable: boolean;
  m0: number | null;
  bound: Rational | null;
  instance: InstancePayload;
}

export interface Hint {
  vertex: number;
  kind: MoveKind;
  rationale: string;
  remaining_estimate: number | null;
}

export interface SolveReport {
  status: string;
  side: string;
  method: string | null;
  m0: number | null;
  m_min: number | null;
  bound_rational: Rational | null;
  bound_ceiling: number | null;
  holds: boolean | null;
  tight: boolean | null;
  witness_moves: { vertex: number; kind: MoveKind }[];
  witness_target: number[] | null;
  witness: number[] | null;
}

export class ApiError extends Error {
  constructor(public readonly status: number, detail: string) {
    super(detail);
    this.name = "ApiError";
  }
}

async function readDetail(res: Response): Promise<string> {
  try {
    const body = await res.json();
    if (body && typeof body.detail === "string") return body.detail;
    return JSON.stringify(body);
  } catch {
    return res.statusText || `HTTP ${res.status}`;
  }
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await fetch(this.base + path, init);
    if (!res.ok) throw new ApiError(res.status, await readDetail(res));
    return (await res.json()) as T;
  }

  private post<T>(path: string, body?: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: body === undefined ? "{}" : JSON.stringify(body),
    });
  }

  family(
    name: string,
    params: Record<string, number> = {},
  ): Promise<InstancePayload> {
    const qs = new URLSearchParams();
    for (const [key, value] of Object.entries(params)) qs.set(key, String(value));
    const suffix = qs.size > 0 ? `?${qs.toString()}` : "";
    return this.request<InstancePayload>(`/api/families/${name}${suffix}`);
  }

  async createGame(instance: InstancePayload): Promise<string> {
    const made = await this.post<{ id: string; state: number[] }>("/api/games", {
      instance,
    });
    return made.id;
  }

  getGame(id: string): Promise<GameState> {
    return this.request<GameState>(`/api/games/${id}`);
  }

  move(id: string, vertex: number, kind: MoveKind): Promise<GameState> {
    return this.post<GameState>(`/api/games/${id}/moves`, { vertex, kind });
  }

  undo(id: string): Promise<GameState> {
    return this.post<GameState>(`/api/games/${id}/undo`);
  }

  /** Resolves null when the server answers 204: nothing left to suggest. */
  async hint(id: string, strategy: "greedy" | "optimal"): Promise<Hint | null> {
    const res = await fetch(`${this.base}/api/games/${id}/hint?strategy=${strategy}`);
    if (res.status === 204) return null;
    if (!res.ok) throw new ApiError(res.status, await readDetail(res));
    return (await res.json()) as Hint;
  }

  analyze(instance: InstancePayload): Promise<SolveReport> {
    return this.post<SolveReport>("/api/analyze", { instance });
  }
}
