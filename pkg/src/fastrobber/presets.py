"""Built-in playable graphs and the 2-D layouts the web client renders.

Layouts are deterministic: closed-form placements for the structured
families, a fixed-iteration spring embedding (seeded circle start) for
everything else.  Coordinates are normalized to [0, 1] x [0, 1] and rounded
so serialized sessions are stable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .generators import double_wheel, grid as make_grid, named, petersen, torus as make_torus
from .graph import Graph, from_edge_list


@dataclass(frozen=True)
class Preset:
    name: str
    description: str
    build: Callable[[], Graph]
    layout_kind: str  # circle | line | grid:<r>x<c> | petersen | double-wheel | spring


_BUILTINS: list[Preset] = [
    Preset("petersen", "Petersen graph: three cops needed", petersen, "petersen"),
    Preset("cycle-6", "6-cycle: one cop never wins", lambda: named("cycle", 6), "circle"),
    Preset("cycle-8", "8-cycle: two cops squeeze the robber", lambda: named("cycle", 8), "circle"),
    Preset("path-6", "6-path: one cop walks the robber down", lambda: named("path", 6), "line"),
    Preset("grid-3x3", "3x3 grid", lambda: make_grid([3, 3]), "grid:3x3"),
    Preset("grid-4x3", "4x3 grid", lambda: make_grid([4, 3]), "grid:4x3"),
    Preset("torus-4x4", "4x4 torus: a tough chase", lambda: make_torus([4, 4]), "grid:4x4"),
    Preset(
        "double-wheel",
        "two wheels joined rim-to-rim: the classic one-cop trap",
        double_wheel,
        "double-wheel",
    ),
    Preset("wheel-6", "5-cycle rim plus hub: one cop sits on the hub",
           lambda: named("wheel", 6), "circle"),
    Preset("complete-5", "K5: any placement captures at once",
           lambda: named("complete", 5), "circle"),
]


def _round_pts(pts: list[tuple[float, float]]) -> list[tuple[float, float]]:
    return [(round(x, 4), round(y, 4)) for x, y in pts]


def _circle(n: int, r: float = 0.42, cx: float = 0.5, cy: float = 0.5) -> list[tuple[float, float]]:
    return [
        (cx + r * math.cos(2 * math.pi * i / n - math.pi / 2),
         cy + r * math.sin(2 * math.pi * i / n - math.pi / 2))
        for i in range(n)
    ]


def _line(n: int) -> list[tuple[float, float]]:
    if n == 1:
        return [(0.5, 0.5)]
    return [(0.06 + 0.88 * i / (n - 1), 0.5) for i in range(n)]


def _grid_layout(rows: int, cols: int) -> list[tuple[float, float]]:
    pts = []
    for r in range(rows):
        for c in range(cols):
            x = 0.5 if cols == 1 else 0.08 + 0.84 * c / (cols - 1)
            y = 0.5 if rows == 1 else 0.08 + 0.84 * r / (rows - 1)
            pts.append((x, y))
    return pts


def _petersen_layout() -> list[tuple[float, float]]:
    outer = _circle(5, r=0.44)
    inner = _circle(5, r=0.22)
    return outer + inner


def _double_wheel_layout() -> list[tuple[float, float]]:
    left = _circle(4, r=0.16, cx=0.22, cy=0.5)
    right = _circle(4, r=0.16, cx=0.78, cy=0.5)
    # rims 0..3 and 5..8, hubs 4 and 9, middle 10
    return left + [(0.22, 0.5)] + right + [(0.78, 0.5)] + [(0.5, 0.5)]


def spring_layout(g: Graph, iterations: int = 150) -> list[tuple[float, float]]:
    """Fruchterman-Reingold with a deterministic circular start."""
    n = g.n
    if n == 0:
        return []
    if n == 1:
        return [(0.5, 0.5)]
    pos = [list(p) for p in _circle(n, r=0.4)]
    k = 0.6 / math.sqrt(n)
    temp = 0.12
    for _ in range(iterations):
        disp = [[0.0, 0.0] for _ in range(n)]
        for u in range(n):
            for v in range(u + 1, n):
                dx = pos[u][0] - pos[v][0]
                dy = pos[u][1] - pos[v][1]
                d2 = dx * dx + dy * dy + 1e-9
                d = math.sqrt(d2)
                rep = k * k / d2
                disp[u][0] += dx * rep
                disp[u][1] += dy * rep
                disp[v][0] -= dx * rep
                disp[v][1] -= dy * rep
        for u, v in g.edges():
            dx = pos[u][0] - pos[v][0]
            dy = pos[u][1] - pos[v][1]
            d = math.sqrt(dx * dx + dy * dy) + 1e-9
            att = d / k * 0.02
            disp[u][0] -= dx * att
            disp[u][1] -= dy * att
            disp[v][0] += dx * att
            disp[v][1] += dy * att
        for i in range(n):
            dx, dy = disp[i]
            d = math.sqrt(dx * dx + dy * dy) + 1e-9
            step = min(d, temp)
            pos[i][0] += dx / d * step
            pos[i][1] += dy / d * step
        temp *= 0.96
    xs = [p[0] for p in pos]
    ys = [p[1] for p in pos]
    span_x = max(xs) - min(xs) or 1.0
    span_y = max(ys) - min(ys) or 1.0
    return [
        (0.06 + 0.88 * (x - min(xs)) / span_x, 0.06 + 0.88 * (y - min(ys)) / span_y)
        for x, y in pos
    ]


def layout_for(kind: str, g: Graph) -> list[tuple[float, float]]:
    if kind == "circle":
        pts = _circle(g.n)
    elif kind == "line":
        pts = _line(g.n)
    elif kind.startswith("grid:"):
        rows, cols = kind.split(":")[1].split("x")
        pts = _grid_layout(int(rows), int(cols))
    elif kind == "petersen":
        pts = _petersen_layout()
    elif kind == "double-wheel":
        pts = _double_wheel_layout()
    else:
        pts = spring_layout(g)
    return _round_pts(pts)


class PresetRegistry:
    """Built-in presets, optionally shadowed by *.g files in a directory."""

    def __init__(self, preset_dir: str | Path | None = None):
        self._entries: dict[str, tuple[str, Graph, str]] = {}
        for preset in _BUILTINS:
            self._entries[preset.name] = (preset.description, preset.build(), preset.layout_kind)
        if preset_dir is not None:
            for path in sorted(Path(preset_dir).glob("*.g")):
                text = path.read_text()
                description = "user preset"
                for line in text.splitlines():
                    if line.startswith("#"):
                        description = line.lstrip("# ").strip()
                        break
                self._entries[path.stem] = (description, from_edge_list(text), "spring")

    def names(self) -> list[str]:
        return sorted(self._entries)

    def describe(self) -> list[dict]:
        return [
            {"name": name, "n": g.n, "m": g.m, "description": desc}
            for name, (desc, g, _) in sorted(self._entries.items())
        ]

    def get(self, name: str) -> Graph | None:
        entry = self._entries.get(name)
        return entry[1] if entry else None

    def layout(self, name: str) -> list[tuple[float, float]] | None:
        entry = self._entries.get(name)
        if entry is None:
            return None
        return layout_for(entry[2], entry[1])
