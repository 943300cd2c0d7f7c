"""Partite truncation and lifting truncated labellings back to the full graph.

Contracting every class of a partite structure to one vertex gives the
truncated graph.  When each pair of classes is joined completely or not at
all, a labelling of the truncated graph lifts to the full graph by giving each
class a run of consecutive labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import INFINITE, Graph, diameter
from .l21.labelling import Labelling, validate
from .ring import Kind
from .zdg import PartiteStructure


class LiftError(ValueError):
    pass


@dataclass(frozen=True)
class TruncationResult:
    truncated: Graph
    class_of: tuple[int, ...]
    sizes: tuple[int, ...]

    def to_json(self) -> dict:
        from .io import graph_to_json

        data = graph_to_json(self.truncated)
        data["class_of"] = list(self.class_of)
        data["sizes"] = list(self.sizes)
        return data


def _class_masks(parts: PartiteStructure) -> list[int]:
    masks = []
    for cls in parts.classes:
        m = 0
        for v in cls:
            m |= 1 << v
        masks.append(m)
    return masks


def _key_label(key) -> str:
    # zero patterns read as e.g. "0u*": zero, unit, zero divisor per component
    if isinstance(key, tuple) and key and all(isinstance(c, Kind) for c in key):
        return "".join({Kind.ZERO: "0", Kind.UNIT: "u", Kind.ZERODIV: "*"}[c] for c in key)
    return str(key)


def partite_truncation(g: Graph, parts: PartiteStructure) -> TruncationResult:
    parts.check(g)
    masks = _class_masks(parts)
    reach = []
    for cls in parts.classes:
        r = 0
        for v in cls:
            r |= g.adj[v]
        reach.append(r)
    k = len(masks)
    adj = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if reach[i] & masks[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    keys = [_key_label(key) for key in parts.keys]
    truncated = Graph(k, adj, labels=keys, ring=g.ring, check=False)
    return TruncationResult(truncated, tuple(parts.class_of(g.n)), parts.sizes)


def check_uniform_bipartite(g: Graph, parts: PartiteStructure) -> bool:
    """True iff every pair of classes is joined completely or not at all."""
    parts.check(g)
    masks = _class_masks(parts)
    for cls in parts.classes:
        union, inter = 0, -1
        for v in cls:
            union |= g.adj[v]
            inter &= g.adj[v]
        for m in masks:
            if union & m and inter & m != m:
                return False
    return True


@dataclass(frozen=True)
class DiameterReport:
    diam: int
    truncated_diam: int
    relation: str
    holds: bool

    def to_json(self) -> dict:
        return {"diam": self.diam, "truncated_diam": self.truncated_diam,
                "relation": self.relation, "holds": self.holds}


def diameter_relation_check(g: Graph, parts: PartiteStructure) -> DiameterReport:
    """diam(g) = 2 should give diam(trunc) <= 2; diam(g) >= 3 should give equality."""
    if not g.is_connected():
        raise ValueError("diameter_relation_check needs a connected graph")
    if not check_uniform_bipartite(g, parts):
        raise LiftError("classes are not pairwise complete-or-empty")
    d = diameter(g)
    t = diameter(partite_truncation(g, parts).truncated)
    if d >= 3:
        return DiameterReport(d, t, "=", t == d)
    return DiameterReport(d, t, "<=", t <= d)


@dataclass(frozen=True)
class RepresentativeSet:
    """One class per distinct truncated label, the largest of its group."""

    groups: dict = field(compare=False)
    chosen: tuple[int, ...]

    def __len__(self):
        return len(self.chosen)

    def to_json(self) -> list:
        return list(self.chosen)


def representative_classes(f: Labelling, parts: PartiteStructure) -> RepresentativeSet:
    if len(f) != len(parts):
        raise LiftError(f"labelling has {len(f)} entries for {len(parts)} classes")
    groups: dict[int, list[int]] = {}
    for i, x in enumerate(f.labels):
        groups.setdefault(x, []).append(i)
    sizes = parts.sizes
    chosen = []
    for x in sorted(groups):
        # max() keeps the first maximum, i.e. the smallest class index
        chosen.append(max(groups[x], key=lambda i: sizes[i]))
    return RepresentativeSet({x: tuple(v) for x, v in sorted(groups.items())}, tuple(chosen))


def lift_lambda(k: int, parts: PartiteStructure, reps: RepresentativeSet, diam: float) -> int:
    if diam == 1:
        raise LiftError("graph is complete; lambda(K_n) = 2n - 2 applies directly")
    if diam == 2:
        return sum(parts.sizes) + k - len(parts)
    return sum(parts.sizes[i] for i in reps.chosen) + k - len(reps)


def _same_class_distance_two(g: Graph, parts: PartiteStructure) -> bool:
    dist = g.distances()
    return all(dist[u][v] == 2 for cls in parts.classes for u in cls for v in cls if u < v)


def lift_labelling(g: Graph, parts: PartiteStructure, f: Labelling) -> Labelling:
    """Lift a labelling of the truncated graph to ``g``.

    Distinct truncated labels ``i_0 < i_1 < ...`` become consecutive blocks of
    width ``s_j`` (largest class carrying ``i_j``), separated by ``i_j - i_{j-1}``.
    Every class in a group reuses the start of its group's block.
    """
    if not check_uniform_bipartite(g, parts):
        raise LiftError("classes are not pairwise complete-or-empty")
    t = partite_truncation(g, parts).truncated
    bad = validate(t, f)
    if bad:
        raise LiftError(f"labelling is not valid on the truncated graph: {bad[0]}")
    d = diameter(g)
    if d == 1:
        raise LiftError("graph is complete; lambda(K_n) = 2n - 2 applies directly")
    if d == 2:
        if len(set(f.labels)) != len(f):
            raise LiftError("diameter-2 lift needs an injective truncated labelling")
        if not _same_class_distance_two(g, parts):
            raise LiftError("some class has two vertices not at distance 2")
    reps = representative_classes(f, parts)
    start, prev_label, prev_end = {}, None, None
    for x, rep in zip(reps.groups, reps.chosen):
        width = parts.sizes[rep]
        first = 0 if prev_label is None else prev_end + (x - prev_label)
        start[x] = first
        prev_label, prev_end = x, first + width - 1
    labels = [0] * g.n
    for i, cls in enumerate(parts.classes):
        base = start[f.labels[i]]
        for offset, v in enumerate(cls):
            labels[v] = base + offset
    return Labelling.of(labels)


@dataclass
class LiftOutcome:
    lam: int
    witness: Labelling
    truncated_lambda: int
    truncated_labelling: Labelling
    representatives: RepresentativeSet
    diam: float
    notes: list = field(default_factory=list)


def lift_from_truncation(g: Graph, parts: PartiteStructure, f: Labelling, k: int | None = None) -> LiftOutcome:
    """Lift value and witness for one chosen labelling ``f`` of the truncation."""
    d = diameter(g)
    if d == INFINITE:
        raise LiftError("graph is disconnected")
    k = f.span if k is None else k
    reps = representative_classes(f, parts)
    lam = lift_lambda(k, parts, reps, d)
    witness = lift_labelling(g, parts, f)
    return LiftOutcome(lam, witness, k, f, reps, d)


__all__ = [
    "DiameterReport",
    "LiftError",
    "LiftOutcome",
    "RepresentativeSet",
    "TruncationResult",
    "check_uniform_bipartite",
    "diameter_relation_check",
    "lift_from_truncation",
    "lift_labelling",
    "lift_lambda",
    "partite_truncation",
    "representative_classes",
]
