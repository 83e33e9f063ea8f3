/** SVG graph rendering plus the badge, suggestion and history panels.
 *
 * Click an edge to contract it; click two blocks in turn to add an edge
 * between them.  All numbers shown come from the store (and hence from
 * the API).
 */

import { computeLayout } from "./layout.js";
import type { SessionStore } from "./store.js";
import type { SpgDocument } from "./types.js";

const SVG = "http://www.w3.org/2000/svg";
const GROUP_COLORS = ["#e4572e", "#2e86ab", "#f6ae2d", "#9c89b8", "#44af69"];

function blockLabel(doc: SpgDocument, index: number): string {
  const names = doc.vertices[index]
    .map((dset) => dset.map((s) => doc.labels?.[s] ?? String(s)).join(""))
    .join(", ");
  return `{${names}}`;
}

export interface RenderCallbacks {
  onContract: (i: number, j: number) => void;
  onAddEdge: (i: number, j: number) => void;
}

export class GraphView {
  private selected: number | null = null;

  constructor(
    private readonly svg: SVGSVGElement,
    private readonly store: SessionStore,
    private readonly callbacks: RenderCallbacks,
  ) {}

  render(): void {
    const state = this.store.current;
    this.svg.replaceChildren();
    if (!state) return;
    const doc = state.graph;
    const width = this.svg.clientWidth || 900;
    const height = this.svg.clientHeight || 520;
    const layout = computeLayout(doc, width, height);
    const highlight = this.store.witnessHighlight;
    const groupOf = new Map<number, number>();
    highlight?.blockGroups.forEach((group, gi) =>
      group.forEach((b) => groupOf.set(b, gi)),
    );

    for (const [i, j] of doc.edges) {
      const line = document.createElementNS(SVG, "line");
      line.setAttribute("x1", String(layout[i].x));
      line.setAttribute("y1", String(layout[i].y));
      line.setAttribute("x2", String(layout[j].x));
      line.setAttribute("y2", String(layout[j].y));
      const isWitnessEdge =
        highlight?.edge &&
        highlight.edge[0] === Math.min(i, j) &&
        highlight.edge[1] === Math.max(i, j);
      line.setAttribute("class", isWitnessEdge ? "edge witness" : "edge");
      line.addEventListener("click", () => this.callbacks.onContract(i, j));
      const title = document.createElementNS(SVG, "title");
      title.textContent = `contract (${i},${j})`;
      line.appendChild(title);
      this.svg.appendChild(line);
    }

    doc.vertices.forEach((_, index) => {
      const group = document.createElementNS(SVG, "g");
      const circle = document.createElementNS(SVG, "circle");
      circle.setAttribute("cx", String(layout[index].x));
      circle.setAttribute("cy", String(layout[index].y));
      circle.setAttribute("r", "16");
      const classes = ["block"];
      if (this.selected === index) classes.push("selected");
      circle.setAttribute("class", classes.join(" "));
      const witnessGroup = groupOf.get(index);
      if (witnessGroup !== undefined) {
        circle.setAttribute(
          "style",
          `fill:${GROUP_COLORS[witnessGroup % GROUP_COLORS.length]}`,
        );
      }
      circle.addEventListener("click", () => this.pick(index));
      const title = document.createElementNS(SVG, "title");
      title.textContent = blockLabel(doc, index);
      circle.appendChild(title);
      group.appendChild(circle);

      const text = document.createElementNS(SVG, "text");
      text.setAttribute("x", String(layout[index].x));
      text.setAttribute("y", String(layout[index].y - 22));
      text.setAttribute("class", "block-label");
      text.textContent = String(index);
      group.appendChild(text);
      this.svg.appendChild(group);
    });
  }

  private pick(index: number): void {
    if (this.selected === null) {
      this.selected = index;
    } else if (this.selected === index) {
      this.selected = null;
    } else {
      const [i, j] = [this.selected, index];
      this.selected = null;
      this.callbacks.onAddEdge(i, j);
    }
    this.render();
  }
}

export function renderBadges(
  container: HTMLElement,
  store: SessionStore,
  onShowWitness: (property: string) => void,
): void {
  container.replaceChildren();
  const badges = store.badges;
  for (const [name, holds] of Object.entries(badges)) {
    const badge = document.createElement("button");
    badge.className = `badge ${holds ? "ok" : "bad"}`;
    badge.textContent = `${holds ? "✓" : "✗"} ${name}`;
    badge.title = holds ? `${name} holds` : `show the ${name} witness`;
    if (!holds) badge.addEventListener("click", () => onShowWitness(name));
    container.appendChild(badge);
  }
}

export function renderDiameter(element: HTMLElement, store: SessionStore): void {
  const state = store.current;
  element.textContent = state
    ? `diameter ${state.diameter.value} (blocks ${state.diameter.farthestPair[0]} ↔ ${state.diameter.farthestPair[1]})`
    : "no session";
}

export function renderHistory(container: HTMLElement, store: SessionStore): void {
  container.replaceChildren();
  store.history.forEach((move, index) => {
    const row = document.createElement("li");
    row.textContent =
      `${index + 1}. ${move.kind} (${move.endpoints[0]},${move.endpoints[1]})` +
      ` → diameter ${move.diameter}`;
    container.appendChild(row);
  });
}

export function renderSuggestions(
  container: HTMLElement,
  store: SessionStore,
  onApply: (kind: "contract" | "addEdge", endpoints: [number, number]) => void,
): void {
  container.replaceChildren();
  for (const suggestion of store.lastSuggestions.slice(0, 12)) {
    const row = document.createElement("li");
    const button = document.createElement("button");
    button.textContent =
      `${suggestion.kind} (${suggestion.endpoints[0]},${suggestion.endpoints[1]})` +
      ` → diameter ${suggestion.diameter}`;
    button.title = `repairs ${suggestion.property}`;
    button.addEventListener("click", () =>
      onApply(suggestion.kind, suggestion.endpoints),
    );
    row.appendChild(button);
    container.appendChild(row);
  }
}

export function renderWitnessNote(element: HTMLElement, store: SessionStore): void {
  const highlight = store.witnessHighlight;
  element.textContent = highlight
    ? `${highlight.property}: ${highlight.description}`
    : "";
}
