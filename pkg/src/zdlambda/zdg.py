"""Zero-divisor graphs: Anderson-Livingston Gamma(R), Beck's Gamma'(R), partite structure."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

import numpy as np

from .graph import Graph
from .ring import (
    Field,
    Kind,
    RingSpec,
    element_array,
    format_element,
    zero_product_matrix,
)


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class PartiteStructure:
    """Disjoint independent vertex classes covering the graph.

    ``keys[i]`` is the zero pattern of class ``i`` for ring-derived
    structures, otherwise an opaque id.  ``split`` is set when some
    zero-pattern class was not independent and had to be broken into
    singletons (non-reduced rings only).
    """

    classes: tuple[tuple[int, ...], ...]
    keys: tuple[Hashable, ...]
    split: bool = False

    def __len__(self):
        return len(self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def class_of(self, n: int) -> list[int]:
        out = [-1] * n
        for i, cls in enumerate(self.classes):
            for v in cls:
                out[v] = i
        return out

    def check(self, g: Graph) -> None:
        """Raise PartitionError unless this is a valid partite structure of g."""
        seen = 0
        for i, cls in enumerate(self.classes):
            if not cls:
                raise PartitionError(f"class {i} is empty")
            mask = 0
            for v in cls:
                if not 0 <= v < g.n:
                    raise PartitionError(f"class {i} names vertex {v} outside the graph")
                if seen >> v & 1 or mask >> v & 1:
                    raise PartitionError(f"vertex {v} appears in more than one class")
                mask |= 1 << v
            for v in cls:
                if g.adj[v] & mask:
                    raise PartitionError(f"class {i} is not an independent set")
            seen |= mask
        if seen != (1 << g.n) - 1:
            missing = [v for v in range(g.n) if not seen >> v & 1]
            raise PartitionError(f"classes do not cover vertices {missing}")

    @classmethod
    def from_parts(cls, parts: Sequence[int | None]) -> "PartiteStructure":
        """Group vertices by part id, classes ordered by first appearance."""
        order: dict = {}
        for v, p in enumerate(parts):
            if p is None:
                raise PartitionError(f"vertex {v} has no part id")
            order.setdefault(p, []).append(v)
        return cls(tuple(tuple(vs) for vs in order.values()), tuple(order))

    @classmethod
    def singletons(cls, n: int) -> "PartiteStructure":
        return cls(tuple((v,) for v in range(n)), tuple(range(n)))

    def part_ids(self, n: int) -> list[int]:
        return self.class_of(n)


def _pattern_array(elements: np.ndarray, spec: RingSpec) -> np.ndarray:
    kinds = np.empty_like(elements)
    for col, f in enumerate(spec.factors):
        x = elements[:, col]
        if isinstance(f, Field):
            kinds[:, col] = np.where(x == 0, Kind.ZERO, Kind.UNIT)
        else:
            kinds[:, col] = np.where(
                x == 0, Kind.ZERO, np.where(x % f.p == 0, Kind.ZERODIV, Kind.UNIT)
            )
    return kinds


def zero_divisor_elements(spec: RingSpec) -> tuple[np.ndarray, np.ndarray]:
    """Nonzero zero divisors in enumeration order, with their zero patterns."""
    elements = element_array(spec)
    kinds = _pattern_array(elements, spec)
    is_zero = (kinds == Kind.ZERO).all(axis=1)
    is_unit = (kinds == Kind.UNIT).all(axis=1)
    keep = ~is_zero & ~is_unit
    return elements[keep], kinds[keep]


def _pattern_structure(g: Graph, patterns: np.ndarray) -> PartiteStructure:
    groups: dict[tuple, list[int]] = {}
    for v, row in enumerate(patterns.tolist()):
        groups.setdefault(tuple(Kind(k) for k in row), []).append(v)
    classes, keys, split = [], [], False
    for key, members in groups.items():
        mask = 0
        for v in members:
            mask |= 1 << v
        if any(g.adj[v] & mask for v in members):
            split = True
            for v in members:
                classes.append((v,))
                keys.append((key, v))
        else:
            classes.append(tuple(members))
            keys.append(key)
    return PartiteStructure(tuple(classes), tuple(keys), split)


def gamma(spec: RingSpec) -> tuple[Graph, PartiteStructure]:
    """Gamma(R) on the nonzero zero divisors, with its zero-pattern partite structure."""
    elements, patterns = zero_divisor_elements(spec)
    z = zero_product_matrix(elements, spec)
    np.fill_diagonal(z, False)
    labels = [format_element(e) for e in elements.tolist()]
    g = Graph.from_matrix(z, labels=labels, ring=str(spec))
    parts = _pattern_structure(g, patterns)
    return g.with_annotations(parts=parts.part_ids(g.n)), parts


def gamma_beck(spec: RingSpec) -> Graph:
    """Beck's graph on all ring elements; 0 is adjacent to everything."""
    elements = element_array(spec)
    z = zero_product_matrix(elements, spec)
    np.fill_diagonal(z, False)
    labels = [format_element(e) for e in elements.tolist()]
    return Graph.from_matrix(z, labels=labels, ring=str(spec))


def beck_zero_divisor_vertices(spec: RingSpec) -> list[int]:
    """Indices, in Gamma'(R) vertex order, of the nonzero zero divisors."""
    kinds = _pattern_array(element_array(spec), spec)
    is_zero = (kinds == Kind.ZERO).all(axis=1)
    is_unit = (kinds == Kind.UNIT).all(axis=1)
    return np.flatnonzero(~is_zero & ~is_unit).tolist()


def add_isolated_and_dominating(g: Graph, m: int) -> Graph:
    """``g`` plus ``m`` new isolated vertices plus one vertex adjacent to all others.

    New vertices are numbered after g's: isolated ones ``n..n+m-1``, the
    dominating vertex ``n+m``.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    n = g.n
    dom = n + m
    adj = [row | (1 << dom) for row in g.adj]
    adj += [1 << dom] * m
    adj.append(((1 << dom) - 1))
    return Graph(n + m + 1, adj, check=False)


def boolean_pattern_map(parts: PartiteStructure, boolean_graph: Graph) -> list[int]:
    """Map class ``i`` (keyed by a zero pattern of a reduced ring) to the vertex of
    Gamma(Z_2^n) whose support equals the pattern's unit positions."""
    index = {label: v for v, label in enumerate(boolean_graph.labels)}
    out = []
    for key in parts.keys:
        support = tuple(1 if k == Kind.UNIT else 0 for k in key)
        out.append(index[format_element(support)])
    return out


__all__ = [
    "PartiteStructure",
    "PartitionError",
    "gamma",
    "gamma_beck",
    "add_isolated_and_dominating",
    "beck_zero_divisor_vertices",
    "boolean_pattern_map",
    "zero_divisor_elements",
]
