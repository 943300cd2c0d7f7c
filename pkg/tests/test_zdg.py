import networkx as nx
import pytest

from oracles import to_nx, zero_divisor_graph
from zdlambda.graph import complete_graph, complete_multipartite, empty_graph, star_graph
from zdlambda.ring import Field, LocalZ, parse_ring_spec
from zdlambda.zdg import (
    PartiteStructure,
    PartitionError,
    add_isolated_and_dominating,
    beck_zero_divisor_vertices,
    gamma,
    gamma_beck,
)


def test_gamma_z8_is_path():
    g, _ = gamma(parse_ring_spec("Z8"))
    assert list(g.labels) == ["(2)", "(4)", "(6)"]
    assert g.edges() == [(0, 1), (1, 2)]


def test_gamma_f3xf3_is_k22():
    g, parts = gamma(parse_ring_spec("F3xF3"))
    assert nx.is_isomorphic(to_nx(g), to_nx(complete_multipartite((2, 2))))
    assert parts.sizes == (2, 2)


def test_gamma_boolean_cube():
    g, parts = gamma(parse_ring_spec("Z2xZ2xZ2"))
    assert (g.n, g.num_edges()) == (6, 6)
    assert len(parts) == 6 and not parts.split


def test_beck_examples():
    assert nx.is_isomorphic(to_nx(gamma_beck(parse_ring_spec("F5"))), to_nx(star_graph(4)))
    z4 = gamma_beck(parse_ring_spec("Z4"))
    assert z4.n == 4 and z4.num_edges() == 3
    assert gamma_beck(parse_ring_spec("Z8")).n == 8


@pytest.mark.parametrize("ring, sizes, fields", [
    ("Z8", (8,), (False,)), ("Z27", (27,), (False,)), ("F4xZ9", (4, 9), (True, False)),
    ("Z4xZ8", (4, 8), (False, False)), ("F2xF3xF4", (2, 3, 4), (True, True, True)),
    ("Z12", (4, 3), (False, True)),
])
def test_gamma_matches_arithmetic_oracle(ring, sizes, fields):
    g, parts = gamma(parse_ring_spec(ring))
    assert nx.is_isomorphic(to_nx(g), zero_divisor_graph(sizes, fields))
    parts.check(g)


def test_vertex_count_two_locals():
    # |V| = p^n q^{m-1} + p^{n-1} q^m - p^{n-1} q^{m-1} - 1
    for p, n, q, m in ((2, 2, 3, 2), (2, 3, 3, 3), (2, 3, 2, 4)):
        g, _ = gamma(parse_ring_spec(f"Z{p**n}xZ{q**m}"))
        assert g.n == p**n * q ** (m - 1) + p ** (n - 1) * q**m - p ** (n - 1) * q ** (m - 1) - 1


def test_vertex_count_field_local():
    # ring order minus units minus zero
    for q, p, n in ((2, 2, 2), (5, 2, 2), (3, 2, 3), (4, 3, 2)):
        g, _ = gamma(parse_ring_spec(f"F{q}xZ{p**n}"))
        assert g.n == q * p**n - (q - 1) * (p**n - p ** (n - 1)) - 1


def test_local_ring_classes_split():
    g, parts = gamma(parse_ring_spec("Z16"))
    assert parts.split
    parts.check(g)


def test_add_isolated_and_dominating():
    tri = add_isolated_and_dominating(complete_graph(2), 0)
    assert tri.same_structure(complete_graph(3))
    star = add_isolated_and_dominating(empty_graph(1), 2)
    assert nx.is_isomorphic(to_nx(star), to_nx(star_graph(3)))


@pytest.mark.parametrize("p, n", [(2, 3), (3, 2), (2, 4), (5, 2)])
def test_beck_is_gamma_plus_units_plus_zero(p, n):
    spec = parse_ring_spec(f"Z{p**n}")
    units = p**n - p ** (n - 1)
    built = add_isolated_and_dominating(gamma(spec)[0], units)
    assert nx.is_isomorphic(to_nx(gamma_beck(spec)), to_nx(built))


def test_beck_restricted_to_zero_divisors_is_gamma():
    spec = parse_ring_spec("F3xZ4")
    beck = gamma_beck(spec)
    assert beck.induced(beck_zero_divisor_vertices(spec)).same_structure(gamma(spec)[0])


def test_partition_errors():
    with pytest.raises(PartitionError):
        PartiteStructure.from_parts([0, None])
    bad = PartiteStructure(((0, 1),), (0,), False)
    with pytest.raises(PartitionError):
        bad.check(complete_graph(2))
