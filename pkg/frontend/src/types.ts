/** Wire types mirroring the workbench API. */

export interface SpgDocument {
  format: string;
  n: number;
  d: number;
  labels?: string[];
  vertices: number[][][];
  edges: number[][];
  apices?: number[][];
}

export interface PropertyEntry {
  holds: boolean;
  witness?: Record<string, unknown>;
}

export type PropertyReport = Record<string, PropertyEntry>;

export interface DiameterInfo {
  value: number;
  farthestPair: [number, number];
}

export interface SessionState {
  id: string;
  graph: SpgDocument;
  report: PropertyReport;
  diameter: DiameterInfo;
}

export type MoveKind = "contract" | "addEdge";

export interface Suggestion {
  kind: MoveKind;
  endpoints: [number, number];
  diameter: number;
  property: string;
}

export interface RestrictView {
  face: number[];
  survivingBlocks: number[];
  inducedEdges: number[][];
  components: number[][];
  connected: boolean;
}

export interface TraceMove {
  kind: MoveKind;
  endpoints: [number, number];
  diameter: number;
  report: PropertyReport;
}

export interface TraceDocument {
  format: string;
  targets: string[];
  initial: SpgDocument;
  moves: TraceMove[];
  final: SpgDocument;
  finalDiameter: number;
}

export type GeneratorName =
  | "spindle"
  | "cyclic"
  | "cube"
  | "hirsch-path"
  | "figure1";
