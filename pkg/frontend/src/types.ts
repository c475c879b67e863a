/** Payload shapes mirrored from the proof-session service. */

export interface QuiverJson {
  n: number;
  arcs: [number, number][];
}

export interface QuiverPayload {
  quiver: QuiverJson;
  dot: string;
}

export interface SessionState {
  id: string;
  status: "open" | "closed";
  context: QuiverPayload[];
  premises: string[];
  goal: string;
  hints: string[];
  steps: number;
}

export interface ScriptPayload {
  script: string;
  status: "open" | "closed";
}

export interface BipathJson {
  u: number;
  v: number;
  left: number[];
  right: number[];
}

export interface CommergeReport {
  verdict: boolean;
  failing_pairs: { u: number; v: number; components: number[][] }[];
}

export interface AssumptionJson {
  subquiver?: { v: number[]; a: number[] };
  bipath?: BipathJson;
}
