import { describe, expect, it } from "vitest";

import { InstancePayload } from "../src/api.js";
import { forceLayout, layoutFor, mulberry32 } from "../src/layout.js";

const PATH: [number, number][] = [
  [0, 1],
  [1, 2],
  [2, 3],
];

function inst(
  name: string | null,
  numVertices: number,
  edges: [number, number][],
): InstancePayload {
  return { name, num_vertices: numVertices, edges, divisor: new Array(numVertices).fill(0) };
}

describe("seeded prng", () => {
  it("replays the same stream for the same seed", () => {
    const a = mulberry32(7);
    const b = mulberry32(7);
    const streamA = [a(), a(), a(), a()];
    const streamB = [b(), b(), b(), b()];
    expect(streamA).toEqual(streamB);
  });

  it("stays inside [0, 1)", () => {
    const rand = mulberry32(99);
    for (let i = 0; i < 200; i++) {
      const x = rand();
      expect(x).toBeGreaterThanOrEqual(0);
      expect(x).toBeLessThan(1);
    }
  });
});

describe("force layout", () => {
  it("is deterministic for a fixed seed", () => {
    const one = forceLayout(4, PATH, 5);
    const two = forceLayout(4, PATH, 5);
    expect(one).toEqual(two);
  });

  it("moves when the seed moves", () => {
    const one = forceLayout(4, PATH, 5);
    const two = forceLayout(4, PATH, 6);
    expect(one).not.toEqual(two);
  });

  it("keeps every vertex inside the drawing box", () => {
    const spots = forceLayout(7, [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 6], [6, 0]], 3);
    for (const { x, y } of spots) {
      expect(x).toBeGreaterThanOrEqual(0.05);
      expect(x).toBeLessThanOrEqual(0.95);
      expect(y).toBeGreaterThanOrEqual(0.05);
      expect(y).toBeLessThanOrEqual(0.95);
    }
  });

  it("separates adjacent vertices", () => {
    const spots = forceLayout(4, PATH, 11);
    for (const [u, v] of PATH) {
      const gap = Math.hypot(spots[u].x - spots[v].x, spots[u].y - spots[v].y);
      expect(gap).toBeGreaterThan(0.05);
    }
  });
});

describe("preset routing", () => {
  it("pins the intro screen to fixed coordinates", () => {
    const payload = inst("intro", 6, [[0, 1], [0, 2], [0, 3], [0, 4], [1, 2], [1, 5], [2, 3], [3, 5], [4, 5]]);
    const spots = layoutFor(payload);
    expect(spots).toHaveLength(6);
    expect(layoutFor(payload)).toEqual(spots);
    expect(spots[0]).toEqual({ x: 0.4, y: 0.5 });
  });

  it("centers the star hub", () => {
    const edges: [number, number][] = [[0, 1], [0, 2], [0, 3], [0, 4]];
    const spots = layoutFor(inst("star(n=5,k=2)", 5, edges));
    expect(spots[0]).toEqual({ x: 0.5, y: 0.5 });
    for (let leaf = 1; leaf < 5; leaf++) {
      const r = Math.hypot(spots[leaf].x - 0.5, spots[leaf].y - 0.5);
      expect(r).toBeCloseTo(0.38, 6);
    }
  });

  it("lays the hybrid hub between clique and pendants", () => {
    const edges: [number, number][] = [[0, 1], [0, 2], [0, 3], [0, 4], [1, 2]];
    const spots = layoutFor(inst("hybrid(n=4,k=1)", 5, edges));
    expect(spots).toHaveLength(5);
    // clique side sits left of the hub, pendants right
    expect(spots[1].x).toBeLessThan(spots[0].x);
    expect(spots[4].x).toBeGreaterThan(spots[0].x);
  });

  it("falls back to the seeded embedding for anything else", () => {
    const payload = inst("random(n=4,p=0.5,seed=1)", 4, PATH);
    expect(layoutFor(payload)).toEqual(forceLayout(4, PATH, 12));
  });
});
