// SVG board rendering as a plain string: deterministic for a given view,
// no DOM required.  main.ts injects the result and delegates clicks via
// the data-vertex attributes.

import type { GameClient } from "./game.js";

const W = 640;
const H = 480;

function px(p: [number, number]): [number, number] {
  return [40 + p[0] * (W - 80), 30 + p[1] * (H - 60)];
}

export function renderBoard(client: GameClient): string {
  const view = client.view;
  if (!view) return `<svg width="${W}" height="${H}"></svg>`;
  const pts = view.layout.map(px);
  const parts: string[] = [];
  parts.push(`<svg width="${W}" height="${H}" viewBox="0 0 ${W} ${H}">`);
  for (const [u, v] of view.graph.edges) {
    const [x1, y1] = pts[u];
    const [x2, y2] = pts[v];
    parts.push(
      `<line x1="${x1}" y1="${y1}" x2="${x2}" y2="${y2}" stroke="#b8b8c4" stroke-width="2"/>`,
    );
  }
  const highlights = new Set(client.highlights());
  const cops = new Map<number, number>();
  for (const c of view.cops) cops.set(c, (cops.get(c) ?? 0) + 1);
  for (let v = 0; v < view.graph.n; v++) {
    const [x, y] = pts[v];
    const classes = ["vertex"];
    let fill = "#e8e8ee";
    let stroke = "#555";
    if (highlights.has(v)) {
      classes.push("legal");
      const safety = client.safety(v);
      fill = safety === "losing" ? "#f5c26b" : safety === "safe" ? "#9fdf9f" : "#cfe8ff";
      stroke = "#1d70b8";
    }
    if (cops.has(v)) {
      classes.push("cop");
      fill = "#3555c8";
      stroke = "#16246a";
    }
    if (view.robber === v) {
      classes.push("robber");
      fill = cops.has(v) ? "#8a1f1f" : "#d43a3a";
      stroke = "#6a1212";
    }
    parts.push(
      `<circle class="${classes.join(" ")}" data-vertex="${v}" cx="${x}" cy="${y}" ` +
        `r="14" fill="${fill}" stroke="${stroke}" stroke-width="2"/>`,
    );
    parts.push(
      `<text x="${x}" y="${y + 4}" text-anchor="middle" font-size="11" ` +
        `fill="#222" pointer-events="none">${v}</text>`,
    );
    const count = cops.get(v);
    if (count !== undefined && count > 1) {
      parts.push(
        `<text x="${x + 14}" y="${y - 10}" font-size="10" fill="#16246a" ` +
          `pointer-events="none">×${count}</text>`,
      );
    }
  }
  parts.push("</svg>");
  return parts.join("");
}
