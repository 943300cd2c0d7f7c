"""Graph JSON and DOT serialisation."""

from __future__ import annotations

import json
from pathlib import Path

from .graph import Graph
from .l21.labelling import Labelling


class FormatError(ValueError):
    pass


def graph_to_json(g: Graph) -> dict:
    vertices = []
    for v in range(g.n):
        vertices.append({
            "id": v,
            "label": g.labels[v] if g.labels is not None else str(v),
            "part": g.parts[v] if g.parts is not None else None,
        })
    return {"ring": g.ring, "vertices": vertices, "edges": [list(e) for e in g.edges()]}


def graph_from_json(data: dict) -> Graph:
    try:
        vertices = data["vertices"]
        edges = data["edges"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"graph JSON needs 'vertices' and 'edges': {exc}") from None
    n = len(vertices)
    for i, vert in enumerate(vertices):
        if vert.get("id", i) != i:
            raise FormatError(f"vertex ids must be 0..n-1 in order; entry {i} has id {vert['id']}")
    labels = [str(vert.get("label", i)) for i, vert in enumerate(vertices)]
    parts = [vert.get("part") for vert in vertices]
    try:
        pairs = [(int(u), int(v)) for u, v in edges]
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad edge list: {exc}") from None
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge ({u},{v}) names a vertex outside 0..{n - 1}")
    try:
        return Graph.from_edges(
            n, pairs, labels=labels,
            parts=parts if any(p is not None for p in parts) else None,
            ring=data.get("ring"),
        )
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        label = g.labels[v] if g.labels is not None else str(v)
        attrs = [f'label="{label}"']
        if g.parts is not None and g.parts[v] is not None:
            attrs.append(f'part="{g.parts[v]}"')
        lines.append(f"  {v} [{', '.join(attrs)}];")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_json(path: str | Path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc})") from None


def write_json(data, path: str | Path) -> None:
    Path(path).write_text(json.dumps(data, indent=2) + "\n")


def load_graph(path: str | Path) -> Graph:
    return graph_from_json(read_json(path))


def load_labelling(path: str | Path) -> Labelling:
    data = read_json(path)
    if isinstance(data, dict) and "witness" in data and "labels" not in data:
        data = data["witness"]
    if not isinstance(data, dict) or "labels" not in data:
        raise FormatError(f"{path}: labelling JSON needs a 'labels' array")
    try:
        return Labelling.from_json(data)
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from None
