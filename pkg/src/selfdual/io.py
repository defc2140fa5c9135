"""JSON graph files and DOT export.

A graph file is ``{"p": int, "rotations": [[int, ...], ...], "labels": {...}}``
with counterclockwise rotations; quadrangulations carry an extra
``"parts": [[primal ids], [dual ids]]``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from selfdual.embedding import PlaneGraph, build
from selfdual.radial import QuadGraph


def to_dict(g: PlaneGraph | QuadGraph) -> dict[str, Any]:
    quad = g if isinstance(g, QuadGraph) else None
    graph = quad.graph if quad else g
    out: dict[str, Any] = {"p": graph.p, "rotations": [list(r) for r in graph.rotations]}
    if graph.labels:
        out["labels"] = {str(k): v for k, v in sorted(graph.labels.items())}
    if quad is not None:
        out["parts"] = [sorted(quad.primal_part), sorted(quad.dual_part)]
    return out


def dumps(g: PlaneGraph | QuadGraph) -> str:
    return json.dumps(to_dict(g), separators=(",", ":"))


def from_dict(data: dict[str, Any]) -> PlaneGraph | QuadGraph:
    labels = data.get("labels")
    if labels is not None:
        labels = {int(k): str(v) for k, v in labels.items()}
    g = build(int(data["p"]), data["rotations"], labels)
    parts = data.get("parts")
    if parts is None:
        return g
    return QuadGraph(g, frozenset(parts[0]), frozenset(parts[1]))


def loads(text: str) -> PlaneGraph | QuadGraph:
    return from_dict(json.loads(text))


def read_graph(path: str | Path) -> PlaneGraph | QuadGraph:
    return loads(Path(path).read_text())


def write_graph(path: str | Path, g: PlaneGraph | QuadGraph) -> None:
    Path(path).write_text(dumps(g) + "\n")


def to_dot(g: PlaneGraph | QuadGraph, with_faces: bool = False) -> str:
    """Adjacency-only DOT; ``with_faces`` appends face walks as comments."""
    graph = g.graph if isinstance(g, QuadGraph) else g
    lines = ["graph {"]
    if graph.labels:
        for v in range(graph.p):
            if v in graph.labels:
                lines.append(f'  {v} [label="{graph.labels[v]}"];')
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    if with_faces:
        for i, walk in enumerate(graph.face_set.faces):
            lines.append(f"  // face {i}: {' '.join(map(str, walk))}")
    lines.append("}")
    return "\n".join(lines) + "\n"
