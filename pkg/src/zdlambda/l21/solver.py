"""Exact lambda-number by iterative deepening on the span.

For each candidate span ``k`` (from a clique/star lower bound upward) a
depth-first search decides whether an L(2,1)-labelling into ``{0..k}``
exists.  Domains are int bitsets; assigning ``v = x`` removes ``x-1..x+1``
from every unassigned neighbour and ``x`` from every vertex at distance two.
Branching picks the smallest domain (ties: higher degree, lower id) and
tries labels in ascending order.

Two symmetries are broken:

* twins (equal open or closed neighbourhoods) are interchangeable, so their
  labels are forced to increase with vertex id;
* label reversal ``x -> k - x``: a twin-free root vertex is restricted to
  the lower half of the range.

The reported witness is re-derived at the proven optimum by a static
vertex-id-order search, which yields the lexicographically smallest optimal
labelling; twin ordering is compatible with lexicographic minimality.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field

from ..graph import CLIQUE_CAP, CapExceeded, Graph, bits, clique_number
from .labelling import Labelling, first_fit, validate

SOLVER_CAP = 24
LEX_NODE_LIMIT = 400_000


class Method(str, enum.Enum):
    EXACT = "exact"
    PATH_COVER = "path-cover"
    FORMULA = "formula"
    CONSTRUCTION = "construction"
    LIFT = "lift"


@dataclass
class LambdaReport:
    lam: int | None
    witness: Labelling | None
    method: Method
    optimal: bool
    lower: int = 0
    uppers: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "lambda": self.lam,
            "method": self.method.value,
            "optimal": self.optimal,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "bounds": {"lower": self.lower, "upper": dict(self.uppers)},
            "notes": list(self.notes),
        }


class _OutOfBudget(Exception):
    pass


def _twin_links(g: Graph) -> tuple[list[int], list[int], list[bool]]:
    """For each vertex: next/previous twin in id order (-1 if none), strictness."""
    groups: dict[tuple, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(("open", g.adj[v]), []).append(v)
    closed: dict[tuple, list[int]] = {}
    for v in range(g.n):
        closed.setdefault(("closed", g.adj[v] | 1 << v), []).append(v)
    nxt, prv, strict = [-1] * g.n, [-1] * g.n, [True] * g.n
    for group in list(groups.values()) + list(closed.values()):
        if len(group) < 2:
            continue
        for a, b in zip(group, group[1:]):
            nxt[a], prv[b] = b, a
        # isolated twins may share a label
        if g.adj[group[0]] == 0:
            for v in group:
                strict[v] = False
    return nxt, prv, strict


class _Search:
    def __init__(self, g: Graph, deadline: float | None, node_limit: int | None = None):
        self.g = g
        self.n = g.n
        self.adj = g.adj
        self.d2 = g.distance2_masks()
        self.deg = [g.degree(v) for v in range(g.n)]
        self.nxt, self.prv, self.strict = _twin_links(g)
        self.deadline = deadline
        self.node_limit = node_limit
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.nodes & 1023 == 0:
            if self.deadline is not None and time.monotonic() > self.deadline:
                raise _OutOfBudget
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _OutOfBudget

    def _assign(self, dom: list[int], v: int, x: int, unassigned: int) -> bool:
        """Propagate ``v = x`` into ``dom`` (in place). False on a wipe-out."""
        kill = ~(0b111 << (x - 1)) if x else ~0b11
        for u in bits(self.adj[v] & unassigned):
            d = dom[u] & kill
            if not d:
                return False
            dom[u] = d
        one = ~(1 << x)
        for u in bits(self.d2[v] & unassigned):
            d = dom[u] & one
            if not d:
                return False
            dom[u] = d
        s = self.nxt[v]
        if s >= 0 and unassigned >> s & 1:
            above = ~((2 << x) - 1) if self.strict[v] else ~((1 << x) - 1)
            d = dom[s] & above
            if not d:
                return False
            dom[s] = d
        p = self.prv[v]
        if p >= 0 and unassigned >> p & 1:
            below = (1 << x) - 1 if self.strict[v] else (2 << x) - 1
            d = dom[p] & below
            if not d:
                return False
            dom[p] = d
        return True

    def solve(self, k: int, *, dynamic: bool = True, root_half: bool = True) -> list[int] | None:
        n = self.n
        full = (1 << (k + 1)) - 1
        dom = [full] * n
        label = [-1] * n
        unassigned = (1 << n) - 1
        if dynamic and root_half and n:
            root = min(range(n), key=lambda v: (-self.deg[v], v))
            if self.nxt[root] < 0 and self.prv[root] < 0:
                dom[root] = (1 << (k // 2 + 1)) - 1
        # a twin's label bounds the domains of the twins after it
        for v in range(n):
            if self.prv[v] >= 0:
                lo = 1 if self.strict[v] else 0
                depth, p = 0, self.prv[v]
                while p >= 0:
                    depth += 1
                    p = self.prv[p]
                dom[v] &= ~((1 << (depth * lo)) - 1)
                if not dom[v]:
                    return None
        if self._dfs(dom, label, unassigned, dynamic):
            return label
        return None

    def _dfs(self, dom, label, unassigned, dynamic) -> bool:
        if not unassigned:
            return True
        self._tick()
        if dynamic:
            best, best_key = -1, None
            for v in bits(unassigned):
                key = (dom[v].bit_count(), -self.deg[v])
                if best_key is None or key < best_key:
                    best, best_key = v, key
            v = best
        else:
            v = (unassigned & -unassigned).bit_length() - 1
        rest = unassigned & ~(1 << v)
        for x in bits(dom[v]):
            child = dom[:]
            child[v] = 1 << x
            if self._assign(child, v, x, rest):
                label[v] = x
                if self._dfs(child, label, rest, dynamic):
                    return True
        label[v] = -1
        return False


def lower_bound(g: Graph) -> tuple[int, dict]:
    """Cheap valid lower bounds on lambda: 2*omega - 2, Delta + 1, |largest distance-<=2 set| - 1."""
    found = {}
    if g.n == 0:
        return 0, found
    delta = g.max_degree()
    if delta:
        found["delta+1"] = delta + 1
    if g.n <= CLIQUE_CAP:
        omega = clique_number(g)
        found["2omega-2"] = 2 * omega - 2
        d2 = g.distance2_masks()
        square = Graph(g.n, [a | b for a, b in zip(g.adj, d2)], check=False)
        found["omega(G^2)-1"] = clique_number(square) - 1
    return max(found.values(), default=0), found


def lambda_exact(
    g: Graph,
    *,
    max_vertices: int = SOLVER_CAP,
    time_budget_ms: int | None = None,
) -> LambdaReport:
    """Exact lambda with a lexicographically smallest optimal witness.

    Budget exhaustion returns the best known bracket with ``optimal=False``.
    """
    if g.n > max_vertices:
        raise CapExceeded(f"lambda_exact: {g.n} vertices exceeds cap {max_vertices}")
    if g.n == 0:
        return LambdaReport(0, Labelling(()), Method.EXACT, True)
    deadline = None if time_budget_ms is None else time.monotonic() + time_budget_ms / 1000
    lower, lower_sources = lower_bound(g)
    greedy = min(
        (first_fit(g), first_fit(g, range(g.n))),
        key=lambda f: f.span,
    )
    delta = g.max_degree()
    uppers = {"greedy": greedy.span, "delta^2+2delta": delta * delta + 2 * delta}
    best = greedy
    search = _Search(g, deadline)
    k = lower
    try:
        while k < best.span:
            found = search.solve(k)
            if found is not None:
                best = Labelling.of(found)
                break
            k += 1
    except _OutOfBudget:
        report = LambdaReport(best.span, best, Method.EXACT, False, lower=k, uppers=uppers)
        report.notes.append(f"time budget exhausted while testing span {k}")
        report.notes.append(f"lower bound sources: {lower_sources}")
        return report
    lam = best.span
    witness = best
    lex = _Search(g, deadline, node_limit=LEX_NODE_LIMIT)
    notes = [f"lower bound sources: {lower_sources}", f"search nodes: {search.nodes}"]
    try:
        labels = lex.solve(lam, dynamic=False)
        if labels is not None:
            witness = Labelling.of(labels)
            notes.append("witness: lexicographically smallest optimum")
    except _OutOfBudget:
        notes.append("witness: first optimum of the branching search (lex pass over limit)")
    assert not validate(g, witness) and witness.span == lam
    return LambdaReport(lam, witness, Method.EXACT, True, lower=lam, uppers=uppers, notes=notes)


def feasible(g: Graph, span: int, *, time_budget_ms: int | None = None) -> Labelling | None:
    """A labelling of span at most ``span``, or None if none exists."""
    deadline = None if time_budget_ms is None else time.monotonic() + time_budget_ms / 1000
    found = _Search(g, deadline).solve(span)
    return Labelling.of(found) if found is not None else None
