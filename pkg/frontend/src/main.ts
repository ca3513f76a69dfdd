/** Entry point: wires the store to the DOM and the family picker. */

import { ApiClient } from "./api.js";
import { Handlers, PanelRefs, renderBoard, renderPanel, showToast } from "./render.js";
import { GameStore } from "./store.js";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

function familyParams(name: string): Record<string, number> {
  const n = Number(byId<HTMLInputElement>("param-n").value);
  const k = Number(byId<HTMLInputElement>("param-k").value);
  const p = Number(byId<HTMLInputElement>("param-p").value);
  const seed = Number(byId<HTMLInputElement>("param-seed").value);
  if (name === "star") return { n, k };
  if (name === "hybrid") return { n, k };
  if (name === "random") return { n, p, seed };
  return {};
}

function main(): void {
  const api = new ApiClient("");
  const store = new GameStore(api);

  const board = byId<HTMLDivElement>("board");
  const toasts = byId<HTMLDivElement>("toasts");
  const refs: PanelRefs = {
    banner: byId("banner"),
    yourMoves: byId("your-moves"),
    m0: byId("stat-m0"),
    bound: byId("stat-bound"),
    hintText: byId("hint-text"),
    session: byId("session-id"),
    busyButtons: [
      byId<HTMLButtonElement>("load"),
      byId<HTMLButtonElement>("undo"),
      byId<HTMLButtonElement>("hint-greedy"),
      byId<HTMLButtonElement>("hint-optimal"),
    ],
  };

  const handlers: Handlers = {
    onMove: (vertex, kind) => void store.playMove(vertex, kind),
  };

  store.onChange((view) => {
    renderBoard(board, view, handlers);
    renderPanel(refs, view);
  });
  store.onToast((message) => showToast(toasts, message));

  byId<HTMLButtonElement>("load").addEventListener("click", () => {
    const name = byId<HTMLSelectElement>("family").value;
    void store.loadFamily(name, familyParams(name));
  });
  byId<HTMLButtonElement>("undo").addEventListener("click", () => void store.undo());
  byId<HTMLButtonElement>("hint-greedy").addEventListener("click", () =>
    void store.requestHint("greedy"),
  );
  byId<HTMLButtonElement>("hint-optimal").addEventListener("click", () =>
    void store.requestHint("optimal"),
  );

  void store.loadFamily("intro");
}

main();
