/** HTTP client for the proof-session service.
 *
 * All methods re-fetch from the service; nothing is cached client-side, so
 * the server stays the single source of truth for proof state.
 */

import type {
  AssumptionJson,
  BipathJson,
  CommergeReport,
  QuiverJson,
  ScriptPayload,
  SessionState,
} from "./types.js";

/** Transport seam: tests substitute a replayed or scripted implementation. */
export interface Transport {
  request(method: string, path: string, body?: unknown): Promise<unknown>;
}

export class ServiceError extends Error {
  constructor(readonly status: number, readonly detail: string) {
    super(`${status}: ${detail}`);
  }
}

export class FetchTransport implements Transport {
  constructor(private readonly baseUrl: string) {}

  async request(method: string, path: string, body?: unknown): Promise<unknown> {
    const response = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? undefined : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = await response.json();
    if (!response.ok) {
      const detail =
        typeof payload === "object" && payload !== null && "detail" in payload
          ? String((payload as { detail: unknown }).detail)
          : response.statusText;
      throw new ServiceError(response.status, detail);
    }
    return payload;
  }
}

export class SessionClient {
  constructor(private readonly transport: Transport) {}

  createSession(formula: string): Promise<SessionState> {
    return this.transport.request("POST", "/sessions", { formula }) as Promise<SessionState>;
  }

  getState(id: string): Promise<SessionState> {
    return this.transport.request("GET", `/sessions/${id}`) as Promise<SessionState>;
  }

  postTactic(id: string, tactic: string): Promise<SessionState> {
    return this.transport.request("POST", `/sessions/${id}/tactic`, { tactic }) as Promise<SessionState>;
  }

  undo(id: string): Promise<SessionState> {
    return this.transport.request("POST", `/sessions/${id}/undo`) as Promise<SessionState>;
  }

  exportScript(id: string): Promise<ScriptPayload> {
    return this.transport.request("GET", `/sessions/${id}/script`) as Promise<ScriptPayload>;
  }

  toolCommerge(quiver: QuiverJson, assumptions: AssumptionJson[]): Promise<CommergeReport> {
    return this.transport.request("POST", "/tools/commerge", {
      quiver,
      assumptions,
    }) as Promise<CommergeReport>;
  }

  toolComcut(quiver: QuiverJson): Promise<{ bipaths: BipathJson[] }> {
    return this.transport.request("POST", "/tools/comcut", { quiver }) as Promise<{
      bipaths: BipathJson[];
    }>;
  }

  lemmas(): Promise<{ lemmas: string[] }> {
    return this.transport.request("GET", "/lemmas") as Promise<{ lemmas: string[] }>;
  }
}
