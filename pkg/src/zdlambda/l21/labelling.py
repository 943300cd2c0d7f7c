"""L(2,1)-labellings: representation, validation, hole analysis, first-fit."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..graph import Graph, bits


class LabellingError(ValueError):
    pass


@dataclass(frozen=True)
class Labelling:
    """Total map vertex -> non-negative int, normalised so the minimum is 0."""

    labels: tuple[int, ...]

    def __post_init__(self):
        if self.labels and min(self.labels) != 0:
            raise LabellingError(
                f"labelling must have minimum 0, got {min(self.labels)}; use Labelling.of"
            )

    @classmethod
    def of(cls, labels: Iterable[int]) -> "Labelling":
        labels = tuple(int(x) for x in labels)
        low = min(labels, default=0)
        return cls(tuple(x - low for x in labels))

    @property
    def span(self) -> int:
        return max(self.labels, default=0)

    def __len__(self):
        return len(self.labels)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def to_json(self) -> dict:
        return {"graph_vertices": len(self.labels), "labels": list(self.labels), "span": self.span}

    @classmethod
    def from_json(cls, data: dict) -> "Labelling":
        labels = data["labels"]
        if "graph_vertices" in data and data["graph_vertices"] != len(labels):
            raise LabellingError(
                f"graph_vertices={data['graph_vertices']} but {len(labels)} labels given"
            )
        f = cls.of(labels)
        if "span" in data and data["span"] != f.span:
            raise LabellingError(f"declared span {data['span']} != actual span {f.span}")
        return f


@dataclass(frozen=True)
class Violation:
    u: int
    v: int
    rule: str  # "adjacent" (|f(u)-f(v)| < 2) or "distance2" (f(u) == f(v))

    def __str__(self):
        what = "adjacent labels differ by < 2" if self.rule == "adjacent" else (
            "vertices at distance 2 share a label")
        return f"({self.u},{self.v}): {what}"


def _label_masks(labels: Sequence[int]) -> dict[int, int]:
    masks: dict[int, int] = {}
    for v, x in enumerate(labels):
        masks[x] = masks.get(x, 0) | (1 << v)
    return masks


def validate(g: Graph, f: Labelling | Sequence[int]) -> list[Violation]:
    """All L(2,1) violations of ``f`` on ``g``; empty list means valid."""
    labels = f.labels if isinstance(f, Labelling) else tuple(f)
    if len(labels) != g.n:
        raise LabellingError(f"labelling covers {len(labels)} vertices, graph has {g.n}")
    masks = _label_masks(labels)
    out: list[Violation] = []
    for u in range(g.n):
        x = labels[u]
        close = masks.get(x - 1, 0) | masks.get(x, 0) | masks.get(x + 1, 0)
        for v in bits(g.adj[u] & close):
            if u < v:
                out.append(Violation(u, v, "adjacent"))
    # two vertices sharing a label must not have a common neighbour
    pairs = set()
    for w in range(g.n):
        seen: dict[int, list[int]] = {}
        for u in bits(g.adj[w]):
            group = seen.setdefault(labels[u], [])
            for a in group:
                if not g.adj[a] >> u & 1:
                    pairs.add((a, u))
            group.append(u)
    out.extend(Violation(a, b, "distance2") for a, b in sorted(pairs))
    return out


def is_valid(g: Graph, f: Labelling | Sequence[int]) -> bool:
    return not validate(g, f)


@dataclass(frozen=True)
class HoleReport:
    span: int
    holes: tuple[int, ...]
    multiplicities: tuple[int, ...]
    gaps: tuple[int, ...]
    counts: dict = field(default_factory=dict, compare=False)

    @property
    def h(self) -> int:
        return len(self.holes)

    @property
    def g(self) -> int:
        return len(self.gaps)

    def to_json(self) -> dict:
        return {
            "span": self.span,
            "holes": list(self.holes),
            "multiplicities": list(self.multiplicities),
            "gaps": list(self.gaps),
            "h": self.h,
            "g": self.g,
        }


def analyze(g: Graph, f: Labelling, *, check: bool = True) -> HoleReport:
    """Holes, multiplicities and gaps of a valid labelling.

    Only interior values ``0 < h < span`` are classified, matching the usual
    definition of ``f_h``.
    """
    if check:
        bad = validate(g, f)
        if bad:
            raise LabellingError(f"cannot analyze an invalid labelling: {bad[0]}")
    counts = Counter(f.labels)
    span = f.span
    holes, mults, gaps = [], [], []
    for h in range(1, span):
        c = counts.get(h, 0)
        if c == 0:
            holes.append(h)
            if counts.get(h - 1, 0) == 1 and counts.get(h + 1, 0) == 1:
                a = f.labels.index(h - 1)
                b = f.labels.index(h + 1)
                if g.has_edge(a, b):
                    gaps.append(h)
        elif c >= 2:
            mults.append(h)
    return HoleReport(span, tuple(holes), tuple(mults), tuple(gaps), dict(counts))


def first_fit(g: Graph, order: Sequence[int] | None = None, *, start: dict[int, int] | None = None) -> Labelling:
    """Greedy L(2,1) labelling: each vertex in ``order`` gets the smallest legal label.

    ``start`` pre-assigns labels to some vertices; they are kept as given.
    """
    if order is None:
        order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    label = [-1] * g.n
    if start:
        for v, x in start.items():
            label[v] = x
    d2 = g.distance2_masks()
    for v in order:
        if label[v] >= 0:
            continue
        banned = set()
        for u in bits(g.adj[v]):
            if label[u] >= 0:
                banned.update((label[u] - 1, label[u], label[u] + 1))
        for u in bits(d2[v]):
            if label[u] >= 0:
                banned.add(label[u])
        x = 0
        while x in banned:
            x += 1
        label[v] = x
    missing = [v for v in range(g.n) if label[v] < 0]
    if missing:
        raise LabellingError(f"order does not cover vertices {missing}")
    return Labelling.of(label)


def greedy_upper(g: Graph, order: Sequence[int] | None = None) -> Labelling:
    return first_fit(g, order)
