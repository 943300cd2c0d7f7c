import networkx as nx
import pytest

from oracles import is_l21, to_nx
from zdlambda.graph import Graph, complete_graph, complete_multipartite, cycle_graph, diameter
from zdlambda.l21.labelling import Labelling
from zdlambda.l21.solver import lambda_exact
from zdlambda.ring import parse_ring_spec
from zdlambda.truncate import (
    LiftError,
    check_uniform_bipartite,
    diameter_relation_check,
    lift_from_truncation,
    lift_labelling,
    lift_lambda,
    partite_truncation,
    representative_classes,
)
from zdlambda.zdg import PartiteStructure, boolean_pattern_map, gamma
from zdlambda.graph import adjacency_preserved_under


def natural(sizes):
    g = complete_multipartite(sizes)
    return g, PartiteStructure.from_parts(g.parts)


def test_multipartite_truncates_to_complete():
    g, parts = natural((2, 3, 1))
    assert partite_truncation(g, parts).truncated.same_structure(complete_graph(3))


def test_singletons_give_copy():
    g = cycle_graph(5)
    t = partite_truncation(g, PartiteStructure.singletons(5)).truncated
    assert t.same_structure(g)


@pytest.mark.parametrize("ring", ["F3xF3xF3", "F2xF3xF4xF5", "F3xF3xF2"])
def test_reduced_ring_truncates_to_boolean(ring):
    spec = parse_ring_spec(ring)
    g, parts = gamma(spec)
    boolean, _ = gamma(parse_ring_spec("x".join(["Z2"] * len(spec))))
    t = partite_truncation(g, parts).truncated
    assert adjacency_preserved_under(boolean_pattern_map(parts, boolean), t, boolean)


def test_uniformity():
    g, parts = gamma(parse_ring_spec("F2xF3xF4"))
    assert check_uniform_bipartite(g, parts)
    k22 = complete_multipartite((2, 2))
    broken = Graph.from_edges(4, [e for e in k22.edges() if e != (0, 2)])
    assert not check_uniform_bipartite(broken, PartiteStructure.from_parts(k22.parts))
    assert check_uniform_bipartite(cycle_graph(5), PartiteStructure.singletons(5))


def test_diameter_relation():
    g, parts = gamma(parse_ring_spec("F3xF3"))
    rep = diameter_relation_check(g, parts)
    assert (rep.diam, rep.truncated_diam, rep.relation, rep.holds) == (2, 1, "<=", True)
    g, parts = gamma(parse_ring_spec("Z2xZ2xZ2"))
    rep = diameter_relation_check(g, parts)
    assert (rep.diam, rep.truncated_diam, rep.holds) == (3, 3, True)
    g, parts = gamma(parse_ring_spec("F2xF3xF2"))
    rep = diameter_relation_check(g, parts)
    assert (rep.diam, rep.truncated_diam) == (3, 3)


def test_representatives():
    parts = PartiteStructure(((0, 1, 2), (3, 4, 5, 6, 7), (8,)), ("a", "b", "c"), False)
    reps = representative_classes(Labelling.of([0, 0, 2]), parts)
    assert reps.chosen == (1, 2)
    reps = representative_classes(Labelling.of([0, 2, 4]), parts)
    assert reps.chosen == (0, 1, 2)


def test_representatives_boolean_four():
    # a span-10 labelling of Gamma(Z2^4) using 11 distinct labels
    g, parts = gamma(parse_ring_spec("Z2xZ2xZ2xZ2"))
    from zdlambda.l21.holes import enumerate_labellings

    f = next(f for f in enumerate_labellings(g, 10) if len(set(f.labels)) == 11)
    assert len(representative_classes(f, parts)) == 11


def test_lift_k22():
    g, parts = natural((2, 2))
    f = Labelling.of([0, 2])
    assert lift_lambda(2, parts, representative_classes(f, parts), diameter(g)) == 4
    lifted = lift_labelling(g, parts, f)
    assert sorted(lifted.labels) == [0, 1, 3, 4]
    assert lambda_exact(g).lam == 4


def test_lift_f2xf3xf2():
    g, parts = gamma(parse_ring_spec("F2xF3xF2"))
    t = partite_truncation(g, parts).truncated
    inner = lambda_exact(t)
    assert (g.n, inner.lam, len(set(inner.witness.labels))) == (9, 5, 6)
    out = lift_from_truncation(g, parts, inner.witness)
    assert out.lam == 9 + 5 - 6 == 8
    assert is_l21(to_nx(g), out.witness.labels) and out.witness.span == 8


def test_lift_singletons_identity():
    g = cycle_graph(6)
    parts = PartiteStructure.singletons(6)
    f = lambda_exact(g).witness
    assert lift_labelling(g, parts, f) == f


def test_lift_refuses_complete_and_non_uniform():
    g, parts = gamma(parse_ring_spec("F2xF2"))
    with pytest.raises(LiftError):
        lift_labelling(g, parts, Labelling.of([0, 2]))
    k22 = complete_multipartite((2, 2))
    broken = Graph.from_edges(4, [e for e in k22.edges() if e != (0, 2)])
    with pytest.raises(LiftError):
        lift_labelling(broken, PartiteStructure.from_parts(k22.parts), Labelling.of([0, 2]))


def test_truncation_json():
    g, parts = natural((1, 2))
    data = partite_truncation(g, parts).to_json()
    assert data["sizes"] == [1, 2] and data["class_of"] == [0, 1, 1]
