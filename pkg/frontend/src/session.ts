/** View model for one proof session.
 *
 * Holds nothing but the latest service response plus pure display state
 * (selection, input buffer, submitted-tactic history).  Every mutation goes
 * to the service and the snapshot is replaced wholesale by its answer, so
 * disabling the UI loses no proof capability.  At most one mutation is in
 * flight at a time.
 */

import { ServiceError, SessionClient } from "./client.js";
import { atomSelection, type AtomSelection } from "./highlight.js";
import type { SessionState } from "./types.js";

export interface HistoryEntry {
  tactic: string;
  status: "open" | "closed";
}

export class SessionViewModel {
  state: SessionState | null = null;
  history: HistoryEntry[] = [];
  tacticBuffer = "";
  lastError: string | null = null;
  selectedAtom: string | null = null;
  private inflight = false;

  constructor(private readonly client: SessionClient) {}

  get status(): "open" | "closed" | "none" {
    return this.state?.status ?? "none";
  }

  private async mutate(op: () => Promise<SessionState>): Promise<boolean> {
    if (this.inflight) {
      this.lastError = "a request is already in flight";
      return false;
    }
    this.inflight = true;
    try {
      this.state = await op();
      this.lastError = null;
      return true;
    } catch (e) {
      // failure reasons are surfaced verbatim and current state is kept
      this.lastError = e instanceof ServiceError ? e.detail : String(e);
      return false;
    } finally {
      this.inflight = false;
    }
  }

  async create(formula: string): Promise<boolean> {
    const ok = await this.mutate(() => this.client.createSession(formula));
    if (ok) this.history = [];
    return ok;
  }

  async open(id: string): Promise<boolean> {
    return this.mutate(() => this.client.getState(id));
  }

  async submitTactic(tactic: string): Promise<boolean> {
    if (!this.state) {
      this.lastError = "no session";
      return false;
    }
    const id = this.state.id;
    const ok = await this.mutate(() => this.client.postTactic(id, tactic));
    if (ok) {
      this.history.push({ tactic, status: this.state!.status });
      this.tacticBuffer = "";
    }
    return ok;
  }

  async undo(): Promise<boolean> {
    if (!this.state) {
      this.lastError = "no session";
      return false;
    }
    const id = this.state.id;
    const ok = await this.mutate(() => this.client.undo(id));
    if (ok) this.history.pop();
    return ok;
  }

  /** The export button is a passthrough of the script endpoint. */
  async exportScript(): Promise<string | null> {
    if (!this.state) {
      this.lastError = "no session";
      return null;
    }
    try {
      const payload = await this.client.exportScript(this.state.id);
      this.lastError = null;
      return payload.script;
    } catch (e) {
      this.lastError = e instanceof ServiceError ? e.detail : String(e);
      return null;
    }
  }

  selectAtom(atomText: string | null): void {
    this.selectedAtom = atomText;
  }

  /** Emphasis for the selected atom, resolved against the current context. */
  selectionHighlight(): AtomSelection | null {
    if (!this.state || !this.selectedAtom) return null;
    return atomSelection(
      this.selectedAtom,
      this.state.context.map((c) => c.quiver)
    );
  }
}
