"""Immutable simple graphs over bitset adjacency, plus exact small-instance routines.

Vertices are ``0..n-1``; ``adj[v]`` is an int whose bit ``u`` is set iff
``u ~ v``.  The exact routines (clique, independence, chromatic number,
path cover) refuse inputs above their caps instead of approximating.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Sequence

import numpy as np

INFINITE = math.inf

CLIQUE_CAP = 40
CHROMATIC_CAP = 24
PATH_COVER_CAP = 16


class CapExceeded(RuntimeError):
    """An exact routine refused an input above its size cap."""


def bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """Undirected simple graph with optional per-vertex annotations."""

    __slots__ = ("n", "adj", "labels", "parts", "ring", "_dist")

    def __init__(
        self,
        n: int,
        adj: Sequence[int],
        labels: Sequence[str] | None = None,
        parts: Sequence[int | None] | None = None,
        ring: str | None = None,
        check: bool = True,
    ):
        if len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} rows for {n} vertices")
        full = (1 << n) - 1
        for v, row in enumerate(adj if check else ()):
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = tuple(adj)
        self.labels = tuple(labels) if labels is not None else None
        self.parts = tuple(parts) if parts is not None else None
        self.ring = ring
        self._dist = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], **kw) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, **kw)

    @classmethod
    def from_matrix(cls, matrix: np.ndarray, **kw) -> "Graph":
        m = np.asarray(matrix, dtype=bool)
        n = m.shape[0]
        if n == 0:
            return cls(0, [], **kw)
        if m.shape != (n, n) or m.diagonal().any() or (m != m.T).any():
            raise ValueError("adjacency matrix must be square, symmetric, zero-diagonal")
        # bit u of row v lives at byte u // 8, bit u % 8 in little-endian order
        packed = np.packbits(m, axis=1, bitorder="little")
        adj = [int.from_bytes(row.tobytes(), "little") for row in packed]
        return cls(n, adj, check=False, **kw)

    def to_matrix(self) -> np.ndarray:
        if self.n == 0:
            return np.zeros((0, 0), dtype=bool)
        nbytes = (self.n + 7) // 8
        raw = np.frombuffer(
            b"".join(row.to_bytes(nbytes, "little") for row in self.adj), dtype=np.uint8
        ).reshape(self.n, nbytes)
        return np.unpackbits(raw, axis=1, bitorder="little", count=self.n).astype(bool)

    # -- basic queries -------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def same_structure(self, other: "Graph") -> bool:
        return self.n == other.n and self.adj == other.adj

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.same_structure(other)
            and self.labels == other.labels
            and self.parts == other.parts
        )

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges()})"

    def with_annotations(self, labels=None, parts=None, ring=None) -> "Graph":
        return Graph(
            self.n,
            self.adj,
            labels if labels is not None else self.labels,
            parts if parts is not None else self.parts,
            ring if ring is not None else self.ring,
            check=False,
        )

    def induced(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        adj = [0] * len(vertices)
        for i, v in enumerate(vertices):
            for u in bits(self.adj[v]):
                j = index.get(u)
                if j is not None:
                    adj[i] |= 1 << j
        labels = [self.labels[v] for v in vertices] if self.labels else None
        return Graph(len(vertices), adj, labels=labels)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            for u in bits(self.adj[v]):
                adj[perm[v]] |= 1 << perm[u]
        return Graph(self.n, adj)

    # -- distances -----------------------------------------------------

    def distances(self) -> list[list[float]]:
        """All-pairs BFS distances; unreachable pairs are ``INFINITE``."""
        if self._dist is None:
            self._dist = [self._bfs(s) for s in range(self.n)]
        return self._dist

    def _bfs(self, s: int) -> list[float]:
        dist = [INFINITE] * self.n
        dist[s] = 0
        frontier = 1 << s
        seen = frontier
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            nxt &= ~seen
            for v in bits(nxt):
                dist[v] = d
            seen |= nxt
            frontier = nxt
        return dist

    def distance2_masks(self) -> list[int]:
        """``d2[v]``: vertices at distance exactly two from ``v``."""
        out = []
        for v in range(self.n):
            reach = 0
            for u in bits(self.adj[v]):
                reach |= self.adj[u]
            out.append(reach & ~self.adj[v] & ~(1 << v))
        return out

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return all(d != INFINITE for d in self._bfs(0))


def diameter(g: Graph) -> float:
    """Largest distance over pairs; ``INFINITE`` if disconnected, 0 for n <= 1."""
    if g.n <= 1:
        return 0
    return max(max(row) for row in g.distances())


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    adj = [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)]
    return Graph(g.n, adj, labels=g.labels)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """``K_{m1,...,mr}`` with vertices grouped by part; ``parts`` annotated."""
    parts = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(parts)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if parts[u] != parts[v]]
    return Graph.from_edges(n, edges, parts=parts)


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    upper = np.triu(rng.random((n, n)) < p, 1)
    return Graph.from_matrix(upper | upper.T)


# -- exact small-instance routines -------------------------------------


def clique_number(g: Graph, cap: int = CLIQUE_CAP) -> int:
    """Exact clique number by branch and bound with a greedy colouring bound."""
    if g.n > cap:
        raise CapExceeded(f"clique_number: {g.n} vertices exceeds cap {cap}")
    adj = g.adj
    best = 0

    def colour_bound(cand: int) -> int:
        # number of colour classes of a greedy colouring bounds the clique in cand
        colours = 0
        rest = cand
        while rest:
            colours += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                rest &= ~(1 << v)
                avail &= ~(1 << v) & ~adj[v]
        return colours

    def expand(size: int, cand: int):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + colour_bound(cand) <= best:
            return
        while cand:
            if size + popcount(cand) <= best:
                return
            v = (cand & -cand).bit_length() - 1
            expand(size + 1, cand & adj[v])
            cand &= ~(1 << v)

    expand(0, (1 << g.n) - 1)
    return best


def independence_number(g: Graph, cap: int = CLIQUE_CAP) -> int:
    if g.n > cap:
        raise CapExceeded(f"independence_number: {g.n} vertices exceeds cap {cap}")
    return clique_number(complement(g), cap)


def chromatic_number(g: Graph, cap: int = CHROMATIC_CAP) -> int:
    """Exact chromatic number: DSATUR-ordered backtracking over k = omega, omega+1, ..."""
    if g.n > cap:
        raise CapExceeded(f"chromatic_number: {g.n} vertices exceeds cap {cap}")
    if g.n == 0:
        return 0
    lower = max(1, clique_number(g))
    for k in range(lower, g.n + 1):
        if _colourable(g, k):
            return k
    return g.n


def _colourable(g: Graph, k: int) -> bool:
    colour = [-1] * g.n

    def pick() -> int:
        best, best_key = -1, None
        for v in range(g.n):
            if colour[v] >= 0:
                continue
            sat = len({colour[u] for u in bits(g.adj[v]) if colour[u] >= 0})
            key = (sat, g.degree(v))
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def solve(used: int) -> bool:
        v = pick()
        if v < 0:
            return True
        taken = {colour[u] for u in bits(g.adj[v]) if colour[u] >= 0}
        # a fresh colour is interchangeable with any other fresh colour
        for c in range(min(k, used + 1)):
            if c in taken:
                continue
            colour[v] = c
            if solve(max(used, c + 1)):
                return True
        colour[v] = -1
        return False

    return solve(0)


def path_cover_number(g: Graph, cap: int = PATH_COVER_CAP) -> int:
    """Minimum number of vertex-disjoint paths covering all vertices.

    Subset DP: ``ends[r][S]`` is the bitset of vertices ``v`` such that ``S``
    is covered by at most ``r`` paths with the most recently built path ending
    at ``v``.  Layers are filled by popcount with numpy over all subsets.
    """
    n = g.n
    if n > cap:
        raise CapExceeded(f"path_cover_number: {n} vertices exceeds cap {cap}")
    if n == 0:
        return 0
    size = 1 << n
    masks = np.arange(size, dtype=np.int64)
    pc = np.zeros(size, dtype=np.int64)
    for v in range(n):
        pc += (masks >> v) & 1
    by_level = [masks[pc == t] for t in range(n + 1)]
    adj = np.array(g.adj, dtype=np.int64)
    full = size - 1

    prev_any = np.zeros(size, dtype=bool)
    prev_any[0] = True  # the empty set is covered by zero paths
    for r in range(1, n + 1):
        ends = np.zeros(size, dtype=np.int64)
        for t in range(n):
            level = by_level[t]
            for u in range(n):
                bit = 1 << u
                src = level[(level & bit) == 0]
                if src.size == 0:
                    continue
                grow = ((ends[src] & adj[u]) != 0) | prev_any[src]
                tgt = src[grow] | bit
                ends[tgt] |= bit
        if ends[full]:
            return r
        prev_any = (ends != 0) | prev_any
    return n


def adjacency_preserved_under(mapping: Mapping[int, int] | Sequence[int], g1: Graph, g2: Graph) -> bool:
    """True iff ``u ~ v`` in g1 exactly when ``map(u) ~ map(v)`` in g2."""
    m = [mapping[v] for v in range(g1.n)]
    if g1.n != g2.n or sorted(m) != list(range(g2.n)):
        raise ValueError("mapping is not a bijection between the vertex sets")
    for u in range(g1.n):
        image = 0
        for v in bits(g1.adj[u]):
            image |= 1 << m[v]
        if image != g2.adj[m[u]]:
            return False
    return True
