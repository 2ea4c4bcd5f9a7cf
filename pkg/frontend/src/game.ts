// Client-side game state machine.  Pure: it only stores the latest server
// view and answers UI questions about it, so it is testable against
// recorded API fixtures without a DOM or a network.

import type { RobberRequest, SessionView } from "./types.js";

export type Phase = "idle" | "place" | "robber" | "awaiting" | "over";

export class GameClient {
  view: SessionView | null = null;
  private awaiting = false;
  hintsOn = false;

  applyServer(view: SessionView): void {
    this.view = view;
    this.awaiting = false;
  }

  phase(): Phase {
    if (!this.view) return "idle";
    if (this.awaiting) return "awaiting";
    if (this.view.outcome !== null) return "over";
    return this.view.robber === null ? "place" : "robber";
  }

  /** Vertices the UI highlights as clickable: exactly the server's legal set. */
  highlights(): number[] {
    if (!this.view || this.awaiting || this.view.outcome !== null) return [];
    return this.view.legal_moves;
  }

  /** Hint overlay: does moving to v keep the robber outside the cops'
   * winning region?  Only meaningful in optimal mode with hints on. */
  safety(v: number): "safe" | "losing" | null {
    if (!this.view || !this.hintsOn || this.view.safe_moves === null) return null;
    if (!this.view.legal_moves.includes(v)) return null;
    return this.view.safe_moves.includes(v) ? "safe" : "losing";
  }

  hintsAvailable(): boolean {
    return this.view !== null && this.view.mode === "optimal";
  }

  toggleHints(): boolean {
    if (this.hintsAvailable()) this.hintsOn = !this.hintsOn;
    return this.hintsOn;
  }

  /** Returns the request to submit, or null when the click must be ignored
   * (stale view, busy, not highlighted).  Marks the client busy: input is
   * locked until the next applyServer. */
  clickVertex(v: number): RobberRequest | null {
    if (!this.view || this.awaiting || this.view.outcome !== null) return null;
    if (!this.view.legal_moves.includes(v)) return null;
    this.awaiting = true;
    if (this.view.robber === null) return { vertex: v };
    return { vertex: v, round: this.view.round };
  }

  /** Recover input after a failed submit (e.g. a 422 resync). */
  submitFailed(): void {
    this.awaiting = false;
  }

  banner(): string {
    if (!this.view) return "pick a graph and start a game";
    if (this.view.outcome === "captured") return "captured! the cops win";
    if (this.view.outcome === "resigned") return "you resigned";
    const fate = this.view.theoretically_winning
      ? "cops can force capture"
      : this.view.mode === "optimal"
        ? "you can evade forever"
        : "heuristic cops: no guarantee";
    if (this.view.robber === null) return `place your robber — ${fate}`;
    const eta =
      this.view.capture_in !== null ? ` (capture in ≤ ${this.view.capture_in})` : "";
    return `your move — ${fate}${eta}`;
  }
}
