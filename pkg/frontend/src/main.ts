// Single-page wiring: preset picker, new-game controls, click-to-move board.
// The session id lives in the URL fragment so a game can be reopened.

import { createSession, getSession, listPresets, resign, robberAction } from "./api.js";
import { GameClient } from "./game.js";
import { renderBoard } from "./render.js";
import type { SessionView } from "./types.js";

const client = new GameClient();

const $ = (id: string) => document.getElementById(id)!;
const board = $("board");
const status = $("status");
const presetSelect = $("preset") as HTMLSelectElement;
const copsInput = $("cops") as HTMLInputElement;
const speedSelect = $("speed") as HTMLSelectElement;
const hintButton = $("hints") as HTMLButtonElement;
const resignButton = $("resign") as HTMLButtonElement;
const uploadArea = $("upload") as HTMLTextAreaElement;

function redraw(): void {
  board.innerHTML = renderBoard(client);
  status.textContent = client.banner();
  hintButton.disabled = !client.hintsAvailable();
  hintButton.textContent = client.hintsOn ? "hints: on" : "hints: off";
  resignButton.disabled = client.phase() === "idle" || client.phase() === "over";
  const warning = client.view?.warning;
  $("warning").textContent = warning ?? "";
}

function applyView(view: SessionView): void {
  client.applyServer(view);
  window.location.hash = view.id;
  redraw();
}

async function newGame(): Promise<void> {
  const cops = Math.max(1, Number(copsInput.value) || 1);
  const speed = speedSelect.value === "inf" ? ("inf" as const) : Number(speedSelect.value);
  const upload = uploadArea.value.trim();
  try {
    const view = await createSession(
      upload
        ? { edge_list: upload, cops, robber_speed: speed }
        : { preset: presetSelect.value, cops, robber_speed: speed },
    );
    applyView(view);
  } catch (err) {
    status.textContent = `could not start: ${(err as Error).message}`;
  }
}

board.addEventListener("click", async (evt) => {
  const target = evt.target as Element;
  const attr = target.getAttribute("data-vertex");
  if (attr === null || !client.view) return;
  const request = client.clickVertex(Number(attr));
  if (request === null) {
    target.classList.add("shake");
    setTimeout(() => target.classList.remove("shake"), 300);
    return;
  }
  redraw();
  try {
    applyView(await robberAction(client.view.id, request));
  } catch (err) {
    client.submitFailed();
    // a 422 carries the fresh legal set; resync from the server
    try {
      applyView(await getSession(client.view.id));
    } catch {
      status.textContent = `move failed: ${(err as Error).message}`;
    }
  }
});

$("new-game").addEventListener("click", () => void newGame());
hintButton.addEventListener("click", () => {
  client.toggleHints();
  redraw();
});
resignButton.addEventListener("click", async () => {
  if (client.view) applyView(await resign(client.view.id));
});

async function boot(): Promise<void> {
  const presets = await listPresets();
  presetSelect.innerHTML = presets
    .map((p) => `<option value="${p.name}">${p.name} (${p.n}v) — ${p.description}</option>`)
    .join("");
  presetSelect.value = "petersen";
  const fragment = window.location.hash.slice(1);
  if (fragment) {
    try {
      applyView(await getSession(fragment));
      return;
    } catch {
      window.location.hash = "";
    }
  }
  redraw();
}

void boot();
