"""A fixed collection of small graphs shared by several test modules."""

from __future__ import annotations

import numpy as np

from zdlambda.graph import (
    Graph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    empty_graph,
    path_graph,
    random_graph,
    star_graph,
)
from zdlambda.ring import parse_ring_spec
from zdlambda.zdg import gamma

RINGS = ["Z8", "Z9", "Z16", "Z25", "Z27", "Z49", "Z2xZ2", "Z2xZ2xZ2", "F2xF3", "F3xF3", "F2xF4",
         "F3xF4", "F2xF2xF3", "F2xZ4", "F3xZ4", "F2xZ8", "F2xZ9", "Z4xZ4", "F4xZ4", "F5xZ4"]


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def wheel(k: int) -> Graph:
    return Graph.from_edges(k + 1, [(i, (i + 1) % k) for i in range(k)] + [(i, k) for i in range(k)])


def named_graphs() -> dict[str, Graph]:
    out = {}
    for n in range(1, 7):
        out[f"K{n}"] = complete_graph(n)
    for n in range(2, 9):
        out[f"P{n}"] = path_graph(n)
    for n in range(3, 9):
        out[f"C{n}"] = cycle_graph(n)
    for k in range(2, 6):
        out[f"star{k}"] = star_graph(k)
    for sizes in ((2, 2), (2, 3), (3, 3), (1, 2, 3), (2, 2, 2)):
        out["K" + ",".join(map(str, sizes))] = complete_multipartite(sizes)
    out["empty3"] = empty_graph(3)
    out["W5"] = wheel(5)
    out["petersen"] = petersen()
    return out


def ring_graphs() -> dict[str, Graph]:
    return {f"Gamma({r})": gamma(parse_ring_spec(r))[0] for r in RINGS}


def random_graphs(count: int = 20, seed: int = 2024) -> dict[str, Graph]:
    rng = np.random.default_rng(seed)
    out = {}
    for i in range(count):
        n = int(rng.integers(4, 11))
        p = float(rng.uniform(0.25, 0.75))
        out[f"random{i}(n={n})"] = random_graph(n, p, rng)
    return out


def suite(max_n: int | None = None) -> dict[str, Graph]:
    graphs = named_graphs() | ring_graphs() | random_graphs()
    if max_n is not None:
        graphs = {k: g for k, g in graphs.items() if g.n <= max_n}
    return graphs
