/** Session view-state.
 *
 * Every displayed value (diameter, badges, block contents, witness
 * regions) is taken verbatim from the latest API response; nothing is
 * recomputed client-side, so the view can never disagree with a fresh
 * GET of the session.
 */

import { ApiClient } from "./api.js";
import type {
  GeneratorName,
  MoveKind,
  RestrictView,
  SessionState,
  Suggestion,
  TraceDocument,
} from "./types.js";

export interface AppliedMove {
  kind: MoveKind;
  endpoints: [number, number];
  diameter: number;
}

export interface WitnessHighlight {
  property: string;
  /** blocks to emphasize, grouped (e.g. the components of a separating face) */
  blockGroups: number[][];
  /** an offending edge, when the witness is one */
  edge?: [number, number];
  description: string;
}

type Listener = () => void;

export class SessionStore {
  private state: SessionState | null = null;
  private moves: AppliedMove[] = [];
  private witness: WitnessHighlight | null = null;
  private suggestionsCache: Suggestion[] = [];
  private listeners: Listener[] = [];

  constructor(readonly api: ApiClient) {}

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  private setState(state: SessionState): void {
    this.state = state;
    this.witness = null;
    this.suggestionsCache = [];
    this.emit();
  }

  get current(): SessionState | null {
    return this.state;
  }

  get history(): readonly AppliedMove[] {
    return this.moves;
  }

  get witnessHighlight(): WitnessHighlight | null {
    return this.witness;
  }

  get lastSuggestions(): readonly Suggestion[] {
    return this.suggestionsCache;
  }

  /** Displayed diameter: always the API's number. */
  get diameter(): number | null {
    return this.state ? this.state.diameter.value : null;
  }

  /** Badge color per property: true = green, false = red. */
  get badges(): Record<string, boolean> {
    if (!this.state) return {};
    const out: Record<string, boolean> = {};
    for (const [name, entry] of Object.entries(this.state.report)) {
      out[name] = entry.holds;
    }
    return out;
  }

  async loadFromGenerator(
    name: GeneratorName,
    params: Record<string, number>,
  ): Promise<SessionState> {
    const state = await this.api.createFromGenerator(name, params);
    this.moves = [];
    this.setState(state);
    return state;
  }

  async loadFromDocument(document: unknown): Promise<SessionState> {
    const state = await this.api.createFromDocument(document);
    this.moves = [];
    this.setState(state);
    return state;
  }

  async refresh(): Promise<SessionState> {
    if (!this.state) throw new Error("no session loaded");
    const state = await this.api.getSession(this.state.id);
    this.setState(state);
    return state;
  }

  async applyMove(kind: MoveKind, endpoints: [number, number]): Promise<SessionState> {
    if (!this.state) throw new Error("no session loaded");
    const state = await this.api.applyMove(this.state.id, kind, endpoints);
    this.moves.push({ kind, endpoints, diameter: state.diameter.value });
    this.setState(state);
    return state;
  }

  async undo(): Promise<SessionState> {
    if (!this.state) throw new Error("no session loaded");
    const state = await this.api.undo(this.state.id);
    this.moves.pop();
    this.setState(state);
    return state;
  }

  async fetchSuggestions(targets?: string[]): Promise<Suggestion[]> {
    if (!this.state) throw new Error("no session loaded");
    const { suggestions } = await this.api.suggestions(this.state.id, targets);
    this.suggestionsCache = suggestions;
    this.emit();
    return suggestions;
  }

  /** Resolve a failing property's witness into highlightable regions.
   *
   * A separating face is expanded through the restrict endpoint so the
   * disconnected survivor groups come from the server too.
   */
  async showWitness(property: string): Promise<WitnessHighlight | null> {
    if (!this.state) throw new Error("no session loaded");
    const entry = this.state.report[property];
    if (!entry || entry.holds || !entry.witness) {
      this.witness = null;
      this.emit();
      return null;
    }
    const witness = entry.witness as Record<string, unknown>;
    let highlight: WitnessHighlight;
    if (Array.isArray(witness.face)) {
      const view: RestrictView = await this.api.restrict(
        this.state.id,
        witness.face as number[],
      );
      highlight = {
        property,
        blockGroups: view.components,
        description: `face [${(witness.face as number[]).join(",")}] leaves ` +
          `${view.components.length} separated survivor groups`,
      };
    } else if (Array.isArray(witness.edge)) {
      const [i, j] = witness.edge as [number, number];
      highlight = {
        property,
        blockGroups: [[i], [j]],
        edge: [i, j],
        description: `edge (${i},${j}) has no d-1 witness pair`,
      };
    } else if (Array.isArray(witness.pair)) {
      const pair = witness.pair as unknown[];
      const blocks = this.blocksContaining(pair);
      highlight = {
        property,
        blockGroups: blocks.map((b) => [b]),
        description: `witness pair in blocks ${blocks.join(" and ")}`,
      };
    } else if (typeof witness.block === "number") {
      highlight = {
        property,
        blockGroups: [[witness.block]],
        description: `block ${witness.block}`,
      };
    } else {
      highlight = { property, blockGroups: [], description: "see report" };
    }
    this.witness = highlight;
    this.emit();
    return highlight;
  }

  private blocksContaining(pair: unknown[]): number[] {
    const state = this.state;
    if (!state) return [];
    const out: number[] = [];
    for (const item of pair) {
      if (typeof item === "number") {
        out.push(item);
        continue;
      }
      const key = JSON.stringify(item);
      state.graph.vertices.forEach((block, index) => {
        if (block.some((dset) => JSON.stringify(dset) === key)) out.push(index);
      });
    }
    return out;
  }

  async exportTrace(): Promise<TraceDocument> {
    if (!this.state) throw new Error("no session loaded");
    return this.api.trace(this.state.id);
  }
}
