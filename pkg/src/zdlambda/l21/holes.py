"""Exhaustive labelling enumeration and the hole-structure lemma checker.

Two selections of "hole-minimal" labellings are examined:

``span-optimal``
    labellings of span lambda that have the fewest holes among span-lambda
    labellings;
``global``
    labellings of any span that have the fewest holes among all labellings.

A labelling with span ``s`` on ``n`` vertices has at least ``s + 1 - n``
holes, so the global search only needs spans up to ``n - 1 + best``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from ..graph import CapExceeded, Graph, bits
from .labelling import Labelling, analyze
from .solver import lambda_exact

HOLE_CHECK_CAP = 8


def enumerate_labellings(g: Graph, span: int, max_holes: int | None = None) -> Iterator[Labelling]:
    """Every L(2,1)-labelling of ``g`` whose labels are exactly ``{0..span}``-bounded
    with both 0 and ``span`` used.  ``max_holes`` prunes labellings with more
    interior holes than that."""
    n = g.n
    if n == 0:
        if span == 0:
            yield Labelling(())
        return
    adj = g.adj
    d2 = g.distance2_masks()
    label = [-1] * n
    interior = range(1, span)

    counts: dict[int, int] = {}

    def holes_forced(remaining: int) -> int:
        free = sum(1 for h in interior if not counts.get(h))
        return free - remaining

    def rec(v: int):
        if v == n:
            if counts.get(0) and counts.get(span):
                yield Labelling(tuple(label))
            return
        if max_holes is not None and holes_forced(n - v) > max_holes:
            return
        banned = set()
        for u in bits(adj[v] & ((1 << v) - 1)):
            x = label[u]
            banned.update((x - 1, x, x + 1))
        for u in bits(d2[v] & ((1 << v) - 1)):
            banned.add(label[u])
        for x in range(span + 1):
            if x in banned:
                continue
            label[v] = x
            counts[x] = counts.get(x, 0) + 1
            yield from rec(v + 1)
            counts[x] -= 1
        label[v] = -1

    yield from rec(0)


@dataclass
class LemmaTally:
    """Counterexample counts for the two lemmas over one selection of labellings."""

    reading: str
    labellings: int = 0
    hole_rule_failures: int = 0
    gap_or_mult_failures: int = 0
    examples: list = field(default_factory=list)

    @property
    def hole_rule_holds(self) -> bool:
        return self.hole_rule_failures == 0

    @property
    def gap_or_mult_holds(self) -> bool:
        return self.gap_or_mult_failures == 0

    @property
    def clean(self) -> bool:
        return self.hole_rule_holds and self.gap_or_mult_holds

    def to_json(self) -> dict:
        return {
            "reading": self.reading,
            "labellings": self.labellings,
            "hole_rule_counterexamples": self.hole_rule_failures,
            "gap_or_multiplicity_counterexamples": self.gap_or_mult_failures,
            "examples": [list(f.labels) for f in self.examples],
        }


def _hole_rule_ok(f: Labelling, rep) -> bool:
    counts = rep.counts
    for h in rep.holes:
        below, above = counts.get(h - 1, 0), counts.get(h + 1, 0)
        if below != above or below == 0:
            return False
        if below == 1 and h not in rep.gaps:
            return False
    return True


def _tally(g: Graph, labellings: list[Labelling], reading: str) -> LemmaTally:
    t = LemmaTally(reading, len(labellings))
    for f in labellings:
        rep = analyze(g, f, check=False)
        bad = False
        if not _hole_rule_ok(f, rep):
            t.hole_rule_failures += 1
            bad = True
        if rep.gaps and rep.multiplicities:
            t.gap_or_mult_failures += 1
            bad = True
        if bad and len(t.examples) < 3:
            t.examples.append(f)
    return t


def _fewest_holes(g: Graph, span: int, limit: int | None) -> tuple[int | None, list[Labelling]]:
    best, keep = None, []
    for f in enumerate_labellings(g, span, limit):
        h = sum(1 for x in range(1, span) if x not in set(f.labels))
        if best is None or h < best:
            best, keep = h, [f]
            limit = h
        elif h == best:
            keep.append(f)
    return best, keep


@dataclass
class HoleLemmaReport:
    lam: int
    span_optimal: LemmaTally
    global_min: LemmaTally
    global_holes: int
    span_optimal_holes: int

    @property
    def some_reading_clean(self) -> bool:
        return self.span_optimal.clean or self.global_min.clean

    def to_json(self) -> dict:
        return {
            "lambda": self.lam,
            "span_optimal": dict(self.span_optimal.to_json(), min_holes=self.span_optimal_holes),
            "global": dict(self.global_min.to_json(), min_holes=self.global_holes),
            "some_reading_clean": self.some_reading_clean,
        }


def hole_lemma_check(g: Graph, cap: int = HOLE_CHECK_CAP) -> HoleLemmaReport:
    if g.n > cap:
        raise CapExceeded(f"hole_lemma_check: {g.n} vertices exceeds cap {cap}")
    lam = lambda_exact(g).lam
    h_opt, at_opt = _fewest_holes(g, lam, None)
    span_tally = _tally(g, at_opt, "span-optimal")

    best_h, pool = h_opt, list(at_opt)
    s = lam + 1
    while s + 1 - g.n <= best_h:
        h, found = _fewest_holes(g, s, best_h)
        if h is not None:
            if h < best_h:
                best_h, pool = h, found
            elif h == best_h:
                pool.extend(found)
        s += 1
    global_tally = _tally(g, pool, "global")
    return HoleLemmaReport(lam, span_tally, global_tally, best_h, h_opt)
