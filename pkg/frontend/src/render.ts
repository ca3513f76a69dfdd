/** DOM rendering. Rebuilds the board SVG and the side panel from a
 * ViewState on every change; graphs here are tiny so there is no need to
 * diff anything. */

import { MoveKind } from "./api.js";
import { layoutFor, Point } from "./layout.js";
import { ViewState } from "./store.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const BOARD = 560;

export interface Handlers {
  onMove(vertex: number, kind: MoveKind): void;
}

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) el.setAttribute(key, value);
  return el;
}

function place(p: Point): Point {
  return { x: p.x * BOARD, y: p.y * BOARD };
}

export function renderBoard(
  host: HTMLElement,
  view: ViewState,
  handlers: Handlers,
): void {
  host.textContent = "";
  const instance = view.instance;
  if (!instance) {
    const idle = document.createElement("p");
    idle.className = "idle";
    idle.textContent = "load a family to start playing";
    host.append(idle);
    return;
  }
  const spots = layoutFor(instance).map(place);
  const svg = svgEl("svg", {
    viewBox: `0 0 ${BOARD} ${BOARD}`,
    class: "board",
    role: "img",
  });

  for (const [u, v] of instance.edges) {
    svg.append(
      svgEl("line", {
        x1: String(spots[u].x),
        y1: String(spots[u].y),
        x2: String(spots[v].x),
        y2: String(spots[v].y),
        class: "edge",
      }),
    );
  }

  view.divisor.forEach((chips, vertex) => {
    const spot = spots[vertex];
    const group = svgEl("g", {
      class: "vertex" + (chips < 0 ? " debt" : ""),
      transform: `translate(${spot.x} ${spot.y})`,
    });
    if (view.hint && view.hint.vertex === vertex) {
      group.append(svgEl("circle", { r: "34", class: "hint-ring" }));
      const tagText = svgEl("text", { y: "-42", class: "hint-kind" });
      tagText.textContent = view.hint.kind;
      group.append(tagText);
    }
    group.append(svgEl("circle", { r: "26", class: "disc" }));
    const badge = svgEl("text", { y: "6", class: "chips" });
    badge.textContent = String(chips);
    group.append(badge);
    const label = svgEl("text", { y: "44", class: "index" });
    label.textContent = String(vertex);
    group.append(label);
    group.addEventListener("click", (event) => {
      // plain click lends, alt (or ctrl) click borrows
      const kind: MoveKind = event.altKey || event.ctrlKey ? "borrow" : "lend";
      handlers.onMove(vertex, kind);
    });
    svg.append(group);
  });

  host.append(svg);
}

export function renderPanel(refs: PanelRefs, view: ViewState): void {
  refs.banner.textContent = view.banner === "won" ? "won" : "playing";
  refs.banner.className = `banner ${view.banner}`;
  refs.yourMoves.textContent = String(view.moveCount);
  refs.m0.textContent = view.m0 === null ? "n/a" : String(view.m0);
  refs.bound.textContent =
    view.bound === null ? "n/a" : `${view.bound.num}/${view.bound.den}`;
  refs.hintText.textContent = view.hintNote ?? view.hint?.rationale ?? "";
  refs.session.textContent = view.sessionId ?? "-";
  for (const button of refs.busyButtons) button.disabled = view.busy;
}

export interface PanelRefs {
  banner: HTMLElement;
  yourMoves: HTMLElement;
  m0: HTMLElement;
  bound: HTMLElement;
  hintText: HTMLElement;
  session: HTMLElement;
  busyButtons: HTMLButtonElement[];
}

export function showToast(host: HTMLElement, message: string): void {
  const note = document.createElement("div");
  note.className = "toast";
  note.textContent = message;
  host.append(note);
  setTimeout(() => note.remove(), 4000);
}
