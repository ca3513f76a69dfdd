/** Headless game state for the playground. Holds exactly what the widgets
 * show and talks to the service; rendering subscribes and stays dumb.
 *
 * Moves render optimistically from the local firing rule, then the server
 * answer replaces the prediction wholesale. A 4xx rolls back by refetching.
 * Actions are applied in order through a single promise chain, so a burst
 * of clicks cannot interleave requests for the same session. */

import {
  ApiClient,
  ApiError,
  GameState,
  Hint,
  InstancePayload,
  MoveKind,
  Rational,
} from "./api.js";

export type Banner = "playing" | "won";

export interface ViewState {
  sessionId: string | null;
  instance: InstancePayload | null;
  divisor: number[];
  moveCount: number;
  banner: Banner;
  m0: number | null;
  bound: Rational | null;
  hint: Hint | null;
  hintNote: string | null;
  busy: boolean;
}

export type Listener = (view: ViewState) => void;
export type ToastListener = (message: string) => void;

function neighborsOf(instance: InstancePayload): number[][] {
  const adj: number[][] = Array.from({ length: instance.num_vertices }, () => []);
  for (const [u, v] of instance.edges) {
    adj[u].push(v);
    adj[v].push(u);
  }
  return adj;
}

export function applyMove(
  divisor: number[],
  adjacency: number[][],
  vertex: number,
  kind: MoveKind,
): number[] {
  const sign = kind === "lend" ? 1 : -1;
  const next = divisor.slice();
  next[vertex] -= sign * adjacency[vertex].length;
  for (const other of adjacency[vertex]) next[other] += sign;
  return next;
}

export class GameStore {
  private view: ViewState = {
    sessionId: null,
    instance: null,
    divisor: [],
    moveCount: 0,
    banner: "playing",
    m0: null,
    bound: null,
    hint: null,
    hintNote: null,
    busy: false,
  };
  private adjacency: number[][] = [];
  private listeners: Listener[] = [];
  private toasts: ToastListener[] = [];
  private queue: Promise<void> = Promise.resolve();
  /** False when the last optimistic prediction disagreed with the server. */
  reconciled = true;

  constructor(private readonly api: ApiClient) {}

  get state(): ViewState {
    return this.view;
  }

  onChange(listener: Listener): void {
    this.listeners.push(listener);
  }

  onToast(listener: ToastListener): void {
    this.toasts.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener(this.view);
  }

  private toast(message: string): void {
    for (const listener of this.toasts) listener(message);
  }

  private accept(server: GameState): void {
    this.view = {
      ...this.view,
      sessionId: server.id,
      instance: server.instance,
      divisor: server.state.slice(),
      moveCount: server.move_count,
      banner: server.is_effective ? "won" : "playing",
      m0: server.m0,
      bound: server.bound,
    };
    this.adjacency = neighborsOf(server.instance);
    this.notify();
  }

  /** Serialize user actions; each settles before the next one starts. */
  private enqueue(action: () => Promise<void>): Promise<void> {
    const run = this.queue.then(action);
    // keep the chain alive after failures; errors surface as toasts
    this.queue = run.catch(() => undefined);
    return run;
  }

  loadInstance(instance: InstancePayload): Promise<void> {
    return this.enqueue(async () => {
      this.view = { ...this.view, busy: true, hint: null, hintNote: null };
      this.notify();
      try {
        const id = await this.api.createGame(instance);
        this.accept(await this.api.getGame(id));
      } catch (err) {
        this.toast(err instanceof ApiError ? err.message : String(err));
      } finally {
        this.view = { ...this.view, busy: false };
        this.notify();
      }
    });
  }

  loadFamily(name: string, params: Record<string, number> = {}): Promise<void> {
    return this.enqueue(async () => {
      this.view = { ...this.view, busy: true, hint: null, hintNote: null };
      this.notify();
      try {
        const instance = await this.api.family(name, params);
        const id = await this.api.createGame(instance);
        this.accept(await this.api.getGame(id));
      } catch (err) {
        this.toast(err instanceof ApiError ? err.message : String(err));
      } finally {
        this.view = { ...this.view, busy: false };
        this.notify();
      }
    });
  }

  playMove(vertex: number, kind: MoveKind): Promise<void> {
    return this.enqueue(async () => {
      const id = this.view.sessionId;
      if (id === null) return;
      const predicted = applyMove(this.view.divisor, this.adjacency, vertex, kind);
      this.view = {
        ...this.view,
        divisor: predicted,
        moveCount: this.view.moveCount + 1,
        hint: null,
        hintNote: null,
        busy: true,
      };
      this.notify();
      try {
        const server = await this.api.move(id, vertex, kind);
        this.reconciled =
          server.state.length === predicted.length &&
          server.state.every((chips, i) => chips === predicted[i]);
        this.accept(server);
        if (!this.reconciled) this.toast("state drifted; showing the server's view");
      } catch (err) {
        this.toast(err instanceof ApiError ? err.message : String(err));
        await this.refetch(id);
      } finally {
        this.view = { ...this.view, busy: false };
        this.notify();
      }
    });
  }

  undo(): Promise<void> {
    return this.enqueue(async () => {
      const id = this.view.sessionId;
      if (id === null) return;
      try {
        this.accept(await this.api.undo(id));
      } catch (err) {
        this.toast(err instanceof ApiError ? err.message : String(err));
        await this.refetch(id);
      }
    });
  }

  requestHint(strategy: "greedy" | "optimal"): Promise<void> {
    return this.enqueue(async () => {
      const id = this.view.sessionId;
      if (id === null) return;
      try {
        const hint = await this.api.hint(id, strategy);
        this.view = {
          ...this.view,
          hint,
          hintNote: hint === null ? "no hint: nothing left to do" : null,
        };
        this.notify();
      } catch (err) {
        this.toast(err instanceof ApiError ? err.message : String(err));
      }
    });
  }

  /** Poll the authoritative state; used after actions, never on a timer. */
  refresh(): Promise<void> {
    return this.enqueue(async () => {
      const id = this.view.sessionId;
      if (id === null) return;
      await this.refetch(id);
    });
  }

  private async refetch(id: string): Promise<void> {
    try {
      this.accept(await this.api.getGame(id));
    } catch (err) {
      this.toast(err instanceof ApiError ? err.message : String(err));
    }
  }
}
