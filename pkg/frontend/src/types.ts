// Payload shapes of the play service's JSON API.  The client never derives
// game rules itself: legality, safety and outcomes all arrive in these
// fields.

export type Outcome = "captured" | "resigned" | null;

export interface GraphPayload {
  n: number;
  edges: [number, number][];
}

export interface SessionView {
  id: string;
  graph: GraphPayload;
  layout: [number, number][];
  cops: number[];
  robber: number | null;
  turn: "place" | "robber" | null;
  outcome: Outcome;
  captured: boolean;
  round: number;
  mode: "optimal" | "heuristic";
  theoretically_winning: boolean;
  capture_in: number | null;
  legal_moves: number[];
  safe_moves: number[] | null;
  history: MoveRecord[];
  warning: string | null;
}

export interface MoveRecord {
  actor: "cops" | "robber";
  from: number[] | number | null;
  to: number[] | number;
  round: number;
}

export interface PresetInfo {
  name: string;
  n: number;
  m: number;
  description: string;
}

export interface RobberRequest {
  vertex: number;
  round?: number;
}

export interface CreateRequest {
  preset?: string;
  edge_list?: string;
  cops: number;
  robber_speed?: number | "inf";
  cop_speed?: number;
}
