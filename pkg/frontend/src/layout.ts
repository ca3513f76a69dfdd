/** Vertex placement. The three named families get fixed hand-laid
 * coordinates so their screens always look the same; anything else falls
 * back to a force-directed embedding seeded deterministically. */

import { InstancePayload } from "./api.js";

export interface Point {
  x: number;
  y: number;
}

// deterministic PRNG so the fallback layout is stable across reloads
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

const INTRO_SPOTS: Point[] = [
  { x: 0.4, y: 0.5 },
  { x: 0.6, y: 0.22 },
  { x: 0.27, y: 0.18 },
  { x: 0.3, y: 0.8 },
  { x: 0.63, y: 0.78 },
  { x: 0.86, y: 0.5 },
];

function ring(count: number, cx: number, cy: number, r: number, phase = 0): Point[] {
  const spots: Point[] = [];
  for (let i = 0; i < count; i++) {
    const angle = phase + (2 * Math.PI * i) / count;
    spots.push({ x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  }
  return spots;
}

function starLayout(n: number): Point[] {
  return [{ x: 0.5, y: 0.5 }, ...ring(n - 1, 0.5, 0.5, 0.38, -Math.PI / 2)];
}

function hybridLayout(numVertices: number): Point[] {
  // hub in the middle, the clique fanned out left, pendants right
  const half = Math.floor((numVertices - 1) / 2);
  const clique = ring(half, 0.28, 0.5, 0.2, Math.PI / 2);
  const pendants = ring(numVertices - 1 - half, 0.78, 0.5, 0.3, -Math.PI / 2);
  return [{ x: 0.53, y: 0.5 }, ...clique, ...pendants];
}

export function forceLayout(
  numVertices: number,
  edges: [number, number][],
  seed = 12,
): Point[] {
  const rand = mulberry32(seed);
  const xs = new Array<number>(numVertices);
  const ys = new Array<number>(numVertices);
  for (let i = 0; i < numVertices; i++) {
    xs[i] = 0.2 + 0.6 * rand();
    ys[i] = 0.2 + 0.6 * rand();
  }
  const ideal = 0.9 / Math.sqrt(Math.max(numVertices, 1));
  let heat = 0.12;
  for (let step = 0; step < 260; step++) {
    const dx = new Array<number>(numVertices).fill(0);
    const dy = new Array<number>(numVertices).fill(0);
    for (let i = 0; i < numVertices; i++) {
      for (let j = i + 1; j < numVertices; j++) {
        let ux = xs[i] - xs[j];
        let uy = ys[i] - ys[j];
        let dist = Math.hypot(ux, uy);
        if (dist < 1e-6) {
          ux = 1e-3;
          uy = 1e-3;
          dist = Math.hypot(ux, uy);
        }
        const push = (ideal * ideal) / dist;
        dx[i] += (ux / dist) * push;
        dy[i] += (uy / dist) * push;
        dx[j] -= (ux / dist) * push;
        dy[j] -= (uy / dist) * push;
      }
    }
    for (const [u, v] of edges) {
      const ux = xs[u] - xs[v];
      const uy = ys[u] - ys[v];
      const dist = Math.max(Math.hypot(ux, uy), 1e-6);
      const pull = (dist * dist) / ideal;
      dx[u] -= (ux / dist) * pull;
      dy[u] -= (uy / dist) * pull;
      dx[v] += (ux / dist) * pull;
      dy[v] += (uy / dist) * pull;
    }
    for (let i = 0; i < numVertices; i++) {
      const mag = Math.max(Math.hypot(dx[i], dy[i]), 1e-6);
      xs[i] += (dx[i] / mag) * Math.min(mag, heat);
      ys[i] += (dy[i] / mag) * Math.min(mag, heat);
    }
    heat *= 0.985;
  }
  // squeeze into the drawing box, keeping the aspect of the embedding
  const loX = Math.min(...xs);
  const hiX = Math.max(...xs);
  const loY = Math.min(...ys);
  const hiY = Math.max(...ys);
  const span = Math.max(hiX - loX, hiY - loY, 1e-6);
  return xs.map((x, i) => ({
    x: 0.1 + (0.8 * (x - loX)) / span,
    y: 0.1 + (0.8 * (ys[i] - loY)) / span,
  }));
}

export function layoutFor(instance: InstancePayload, seed = 12): Point[] {
  const name = instance.name ?? "";
  if (name === "intro" && instance.num_vertices === INTRO_SPOTS.length) {
    return INTRO_SPOTS;
  }
  if (name.startsWith("star(")) return starLayout(instance.num_vertices);
  if (name.startsWith("hybrid(")) return hybridLayout(instance.num_vertices);
  return forceLayout(instance.num_vertices, instance.edges, seed);
}
