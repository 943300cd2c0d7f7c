"""Classical lambda bounds and the path-cover characterisation of lambda."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graph import (
    CHROMATIC_CAP,
    CLIQUE_CAP,
    PATH_COVER_CAP,
    CapExceeded,
    Graph,
    chromatic_number,
    clique_number,
    complement,
    independence_number,
    path_cover_number,
)
from .solver import LambdaReport, Method


@dataclass
class BoundLedger:
    """Lower bound ``2*omega - 2`` and the three classical upper bounds.

    A bound whose exact subroutine refused (cap exceeded) is left as None and
    the reason is kept in ``refused``.
    """

    n: int
    max_degree: int
    omega: int | None = None
    alpha: int | None = None
    chi: int | None = None
    refused: dict = field(default_factory=dict)

    @property
    def lower(self) -> int | None:
        return None if self.omega is None else 2 * self.omega - 2

    @property
    def n_plus_chi(self) -> int | None:
        return None if self.chi is None else self.n + self.chi - 2

    @property
    def degree_bound(self) -> int:
        return self.max_degree**2 + 2 * self.max_degree

    @property
    def n_minus_alpha(self) -> int | None:
        return None if self.alpha is None else 2 * self.n - self.alpha - 1

    @property
    def uppers(self) -> dict:
        out = {"n+chi-2": self.n_plus_chi, "delta^2+2delta": self.degree_bound,
               "2n-alpha-1": self.n_minus_alpha}
        return {k: v for k, v in out.items() if v is not None}

    @property
    def best_upper(self) -> int:
        return min(self.uppers.values())

    def brackets(self, lam: int) -> bool:
        if self.n == 0:
            return lam == 0
        low = self.lower if self.lower is not None else 0
        return low <= lam <= self.best_upper

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "max_degree": self.max_degree,
            "omega": self.omega,
            "alpha": self.alpha,
            "chi": self.chi,
            "lower": {"2omega-2": self.lower},
            "upper": self.uppers,
            "refused": dict(self.refused),
        }


def classical_bounds(
    g: Graph, *, clique_cap: int = CLIQUE_CAP, chromatic_cap: int = CHROMATIC_CAP
) -> BoundLedger:
    ledger = BoundLedger(g.n, g.max_degree())
    for name, fn, cap in (
        ("omega", clique_number, clique_cap),
        ("alpha", independence_number, clique_cap),
        ("chi", chromatic_number, chromatic_cap),
    ):
        try:
            setattr(ledger, name, fn(g, cap))
        except CapExceeded as exc:
            ledger.refused[name] = str(exc)
    return ledger


def lambda_via_path_cover(g: Graph, cap: int = PATH_COVER_CAP) -> LambdaReport:
    """lambda from the path covering number r of the complement.

    r >= 2 pins lambda = n + r - 2; r = 1 only gives lambda <= n - 1.
    No witness labelling is produced.
    """
    if g.n > cap:
        raise CapExceeded(f"lambda_via_path_cover: {g.n} vertices exceeds cap {cap}")
    r = path_cover_number(complement(g), cap)
    if r >= 2:
        lam = g.n + r - 2
        rep = LambdaReport(lam, None, Method.PATH_COVER, True, lower=lam, uppers={"path-cover": lam})
    else:
        rep = LambdaReport(g.n - 1, None, Method.PATH_COVER, False, lower=0,
                           uppers={"path-cover": g.n - 1})
    rep.notes.append(f"c(complement) = {r}")
    return rep


def pinned_by_ledger(ledger: BoundLedger) -> int | None:
    """The lambda value when the lower bound meets the best upper bound."""
    if ledger.lower is not None and ledger.lower == ledger.best_upper:
        return ledger.lower
    return None


__all__ = ["BoundLedger", "classical_bounds", "lambda_via_path_cover", "pinned_by_ledger"]
