// Thin fetch wrappers over the play service.

import type { CreateRequest, PresetInfo, RobberRequest, SessionView } from "./types.js";

async function asJson<T>(resp: Response): Promise<T> {
  if (!resp.ok) {
    let detail = `${resp.status}`;
    try {
      const body = await resp.json();
      detail = typeof body.detail === "string" ? body.detail : JSON.stringify(body.detail);
    } catch {
      // keep the status code
    }
    throw new Error(detail);
  }
  return resp.json() as Promise<T>;
}

export function listPresets(): Promise<PresetInfo[]> {
  return fetch("/api/presets").then((r) => asJson<PresetInfo[]>(r));
}

export function createSession(body: CreateRequest): Promise<SessionView> {
  return fetch("/api/sessions", {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  }).then((r) => asJson<SessionView>(r));
}

export function robberAction(id: string, body: RobberRequest): Promise<SessionView> {
  return fetch(`/api/sessions/${id}/robber`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  }).then((r) => asJson<SessionView>(r));
}

export function getSession(id: string): Promise<SessionView> {
  return fetch(`/api/sessions/${id}`).then((r) => asJson<SessionView>(r));
}

export function resign(id: string): Promise<SessionView> {
  return fetch(`/api/sessions/${id}`, { method: "DELETE" }).then((r) =>
    asJson<SessionView>(r),
  );
}
