import pytest

from zdlambda.graph import CapExceeded, complete_graph, complete_multipartite, cycle_graph, path_graph, empty_graph
from zdlambda.l21.bounds import classical_bounds, lambda_via_path_cover, pinned_by_ledger
from zdlambda.l21.solver import lambda_exact
from zdlambda.ring import parse_ring_spec
from zdlambda.zdg import gamma


def test_k5_pinned():
    ledger = classical_bounds(complete_graph(5))
    assert ledger.lower == 8
    assert ledger.uppers == {"n+chi-2": 8, "delta^2+2delta": 24, "2n-alpha-1": 8}
    assert pinned_by_ledger(ledger) == 8


def test_k4_pinned():
    assert pinned_by_ledger(classical_bounds(complete_graph(4))) == 6


def test_k23_values():
    ledger = classical_bounds(complete_multipartite((2, 3)))
    assert ledger.lower == 2
    assert ledger.uppers == {"n+chi-2": 5, "delta^2+2delta": 15, "2n-alpha-1": 6}
    assert pinned_by_ledger(ledger) is None


def test_gamma_z27_bracketed():
    g = gamma(parse_ring_spec("Z27"))[0]
    ledger = classical_bounds(g)
    assert ledger.brackets(lambda_exact(g).lam)


def test_refusals_are_recorded():
    ledger = classical_bounds(empty_graph(30), chromatic_cap=24)
    assert "chi" in ledger.refused and ledger.chi is None
    assert "n+chi-2" not in ledger.uppers


def test_path_cover_lambda():
    k4 = lambda_via_path_cover(complete_graph(4))
    assert k4.optimal and k4.lam == 6
    c4 = lambda_via_path_cover(cycle_graph(4))
    assert c4.optimal and c4.lam == 4 == lambda_exact(cycle_graph(4)).lam
    p4 = lambda_via_path_cover(path_graph(4))
    assert not p4.optimal and p4.lam == 3 and "c(complement) = 1" in p4.notes


def test_path_cover_cap():
    with pytest.raises(CapExceeded):
        lambda_via_path_cover(empty_graph(17))
