import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient, GameState, InstancePayload, MoveKind } from "../src/api.js";
import { GameStore, applyMove } from "../src/store.js";

const INTRO: InstancePayload = {
  name: "intro",
  num_vertices: 6,
  edges: [[0, 1], [0, 2], [0, 3], [0, 4], [1, 2], [1, 5], [2, 3], [3, 5], [4, 5]],
  divisor: [-1, 0, 2, 0, 2, 3],
};

/** Minimal stand-in for the service: one session, real firing rule. */
class FakeServer {
  state: number[] = [];
  history: number[][] = [];
  adjacency: number[][] = [];
  hintQueue: (object | null)[] = [];
  rejectNextMove: { status: number; detail: string } | null = null;

  constructor(private readonly instance: InstancePayload) {
    this.reset();
  }

  reset(): void {
    this.state = this.instance.divisor.slice();
    this.history = [];
    this.adjacency = Array.from({ length: this.instance.num_vertices }, () => []);
    for (const [u, v] of this.instance.edges) {
      this.adjacency[u].push(v);
      this.adjacency[v].push(u);
    }
  }

  payload(): GameState {
    return {
      id: "fake-1",
      state: this.state.slice(),
      move_count: this.history.length,
      is_effective: this.state.every((chips) => chips >= 0),
      is_stable: false,
      m0: 4,
      bound: { num: 4, den: 5 },
      instance: this.instance,
    };
  }

  handle(url: string, init?: RequestInit): Response {
    const method = init?.method ?? "GET";
    const json = (body: unknown, status = 200) =>
      new Response(JSON.stringify(body), {
        status,
        headers: { "content-type": "application/json" },
      });
    if (url.endsWith("/api/games") && method === "POST") {
      this.reset();
      return json({ id: "fake-1", state: this.state });
    }
    if (url.endsWith("/api/games/fake-1") && method === "GET") {
      return json(this.payload());
    }
    if (url.endsWith("/api/games/fake-1/moves") && method === "POST") {
      if (this.rejectNextMove) {
        const { status, detail } = this.rejectNextMove;
        this.rejectNextMove = null;
        return json({ detail }, status);
      }
      const body = JSON.parse(String(init?.body)) as { vertex: number; kind: MoveKind };
      this.history.push(this.state.slice());
      this.state = applyMove(this.state, this.adjacency, body.vertex, body.kind);
      return json(this.payload());
    }
    if (url.endsWith("/api/games/fake-1/undo") && method === "POST") {
      const prev = this.history.pop();
      if (!prev) return json({ detail: "nothing to undo" }, 422);
      this.state = prev;
      return json(this.payload());
    }
    if (url.includes("/api/games/fake-1/hint")) {
      const hint = this.hintQueue.shift();
      if (hint === null || hint === undefined) return new Response(null, { status: 204 });
      return json(hint);
    }
    return json({ detail: `unhandled ${method} ${url}` }, 500);
  }
}

let server: FakeServer;
let store: GameStore;

beforeEach(() => {
  server = new FakeServer(INTRO);
  vi.stubGlobal("fetch", (url: string, init?: RequestInit) =>
    Promise.resolve(server.handle(url, init)),
  );
  store = new GameStore(new ApiClient(""));
});

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("loading", () => {
  it("adopts the server state and analytics", async () => {
    await store.loadInstance(INTRO);
    expect(store.state.sessionId).toBe("fake-1");
    expect(store.state.divisor).toEqual([-1, 0, 2, 0, 2, 3]);
    expect(store.state.m0).toBe(4);
    expect(store.state.bound).toEqual({ num: 4, den: 5 });
    expect(store.state.banner).toBe("playing");
    expect(store.state.busy).toBe(false);
  });
});

describe("moves", () => {
  it("optimistic prediction matches the authoritative answer", async () => {
    await store.loadInstance(INTRO);
    const seen: number[][] = [];
    store.onChange((view) => seen.push(view.divisor.slice()));
    await store.playMove(4, "lend");
    expect(store.reconciled).toBe(true);
    expect(store.state.divisor).toEqual([0, 0, 2, 0, 0, 4]);
    expect(store.state.moveCount).toBe(1);
    // the optimistic frame already showed the final divisor
    expect(seen[0]).toEqual([0, 0, 2, 0, 0, 4]);
  });

  it("raises the won banner exactly when no badge is negative", async () => {
    await store.loadInstance(INTRO);
    expect(store.state.banner).toBe("playing");
    await store.playMove(4, "lend");
    expect(store.state.divisor.every((chips) => chips >= 0)).toBe(true);
    expect(store.state.banner).toBe("won");
    await store.playMove(0, "lend"); // free play: back into debt
    expect(store.state.divisor.some((chips) => chips < 0)).toBe(true);
    expect(store.state.banner).toBe("playing");
  });

  it("counts borrows too and allows them anywhere", async () => {
    await store.loadInstance(INTRO);
    await store.playMove(5, "borrow");
    expect(store.state.moveCount).toBe(1);
    expect(store.state.divisor[5]).toBe(6);
  });

  it("surfaces a toast on rejection and refetches the server state", async () => {
    await store.loadInstance(INTRO);
    const messages: string[] = [];
    store.onToast((message) => messages.push(message));
    server.rejectNextMove = { status: 422, detail: "vertex 9 does not exist" };
    await store.playMove(4, "lend");
    expect(messages).toEqual(["vertex 9 does not exist"]);
    // rollback: the optimistic frame was discarded in favor of the refetch
    expect(store.state.divisor).toEqual([-1, 0, 2, 0, 2, 3]);
    expect(store.state.moveCount).toBe(0);
  });

  it("serializes a burst of clicks in order", async () => {
    await store.loadInstance(INTRO);
    const first = store.playMove(0, "borrow");
    const second = store.playMove(1, "borrow");
    await Promise.all([first, second]);
    expect(store.state.moveCount).toBe(2);
    // matches applying the two moves sequentially
    const adj = server.adjacency;
    let expected = applyMove(INTRO.divisor, adj, 0, "borrow");
    expected = applyMove(expected, adj, 1, "borrow");
    expect(store.state.divisor).toEqual(expected);
  });
});

describe("undo", () => {
  it("returns to the previous divisor and count", async () => {
    await store.loadInstance(INTRO);
    await store.playMove(4, "lend");
    await store.undo();
    expect(store.state.divisor).toEqual([-1, 0, 2, 0, 2, 3]);
    expect(store.state.moveCount).toBe(0);
    expect(store.state.banner).toBe("playing");
  });

  it("toasts when there is nothing to undo", async () => {
    await store.loadInstance(INTRO);
    const messages: string[] = [];
    store.onToast((message) => messages.push(message));
    await store.undo();
    expect(messages).toEqual(["nothing to undo"]);
  });
});

describe("hints", () => {
  it("holds the server suggestion until the next action", async () => {
    await store.loadInstance(INTRO);
    server.hintQueue.push({
      vertex: 4,
      kind: "lend",
      rationale: "one move wins",
      remaining_estimate: 1,
    });
    await store.requestHint("optimal");
    expect(store.state.hint?.vertex).toBe(4);
    expect(store.state.hint?.kind).toBe("lend");
    await store.playMove(4, "lend");
    expect(store.state.hint).toBeNull();
  });

  it("shows the no-hint note on 204", async () => {
    await store.loadInstance(INTRO);
    server.hintQueue.push(null);
    await store.requestHint("greedy");
    expect(store.state.hint).toBeNull();
    expect(store.state.hintNote).toContain("no hint");
  });
});
