/** Wire the store, graph view and panels to the page. */

import { ApiClient, ApiError } from "./api.js";
import {
  GraphView,
  renderBadges,
  renderDiameter,
  renderHistory,
  renderSuggestions,
  renderWitnessNote,
} from "./render.js";
import { SessionStore } from "./store.js";
import type { GeneratorName } from "./types.js";

const apiBase =
  new URLSearchParams(window.location.search).get("api") ?? "http://127.0.0.1:8000";
const store = new SessionStore(new ApiClient(apiBase));

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

const log = el<HTMLUListElement>("log");

function toast(message: string): void {
  const row = document.createElement("li");
  row.textContent = message;
  log.prepend(row);
  while (log.childElementCount > 8) log.lastElementChild?.remove();
}

function guard(action: () => Promise<unknown>): void {
  action().catch((err) => {
    if (err instanceof ApiError) {
      toast(`${err.errorName}: ${err.message}`);
    } else {
      toast(String(err));
    }
  });
}

const svg = document.getElementById("graph") as unknown as SVGSVGElement;
const view = new GraphView(svg, store, {
  onContract: (i, j) => guard(() => store.applyMove("contract", [i, j])),
  onAddEdge: (i, j) => guard(() => store.applyMove("addEdge", [i, j])),
});

store.subscribe(() => {
  view.render();
  renderBadges(el("badges"), store, (property) =>
    guard(() => store.showWitness(property)),
  );
  renderDiameter(el("diameter"), store);
  renderHistory(el<HTMLUListElement>("history"), store);
  renderSuggestions(el<HTMLUListElement>("suggestions"), store, (kind, endpoints) =>
    guard(() => store.applyMove(kind, endpoints)),
  );
  renderWitnessNote(el("witness-note"), store);
});

function generatorParams(name: GeneratorName): Record<string, number> {
  const m = Number(el<HTMLInputElement>("param-m").value || "2");
  const n = Number(el<HTMLInputElement>("param-n").value || "12");
  const d = Number(el<HTMLInputElement>("param-d").value || "8");
  const dim = Number(el<HTMLInputElement>("param-dim").value || "3");
  switch (name) {
    case "spindle":
      return { m };
    case "cyclic":
      return { n, d };
    case "cube":
      return { dim };
    case "hirsch-path":
      return { n, d };
    case "figure1":
      return {};
  }
}

el<HTMLButtonElement>("load").addEventListener("click", () => {
  const name = el<HTMLSelectElement>("generator").value as GeneratorName;
  guard(() => store.loadFromGenerator(name, generatorParams(name)));
});

el<HTMLInputElement>("upload").addEventListener("change", (event) => {
  const input = event.target as HTMLInputElement;
  const file = input.files?.[0];
  if (!file) return;
  guard(async () => {
    const text = await file.text();
    await store.loadFromDocument(JSON.parse(text));
  });
});

el<HTMLButtonElement>("undo").addEventListener("click", () =>
  guard(() => store.undo()),
);

el<HTMLButtonElement>("suggest").addEventListener("click", () =>
  guard(() => store.fetchSuggestions()),
);

el<HTMLButtonElement>("export").addEventListener("click", () =>
  guard(async () => {
    const trace = await store.exportTrace();
    const blob = new Blob([JSON.stringify(trace, null, 2)], {
      type: "application/json",
    });
    const url = URL.createObjectURL(blob);
    const link = document.createElement("a");
    link.href = url;
    link.download = "trace.json";
    link.click();
    URL.revokeObjectURL(url);
  }),
);

guard(() => store.loadFromGenerator("spindle", { m: 2 }));
