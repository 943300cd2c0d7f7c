import itertools

import pytest

from oracles import is_l21, to_nx
from zdlambda.formulas import (
    add_dominating_labelling,
    construct,
    construct_complete_multipartite,
    construct_fq_zpn,
    construct_zpn,
    construct_zpn_zqm,
    family_of,
    zpn_labels,
)
from zdlambda.graph import complete_graph, path_graph
from zdlambda.l21.labelling import Labelling, is_valid
from zdlambda.l21.solver import lambda_exact
from zdlambda.ring import parse_ring_spec
from zdlambda.zdg import add_isolated_and_dominating


@pytest.mark.parametrize("p, n", [(p, n) for p in (2, 3, 5, 7) for n in (2, 3, 4) if p**n <= 400])
def test_zpn_hits_formula(p, n):
    c = construct_zpn(p, n)
    assert c.span == c.formula and not c.discrepancies
    assert is_l21(to_nx(c.graph), c.labelling.labels)


@pytest.mark.parametrize("p, n", [(2, 3), (2, 4), (3, 3), (2, 5)])
def test_zpn_optimal_by_exact(p, n):
    c = construct_zpn(p, n)
    assert lambda_exact(c.graph).lam == c.span


def test_zpn_labels_keys():
    assert set(zpn_labels(2, 3)) == {2, 4, 6}


@pytest.mark.parametrize("params", [(2, 4, 2, 4), (2, 3, 2, 4), (2, 5, 2, 5), (2, 4, 3, 3), (2, 2, 3, 2),
                                    (2, 3, 3, 2), (3, 2, 3, 2)])
def test_zpn_zqm_matching_instances(params):
    c = construct_zpn_zqm(*params)
    assert c.span == c.formula
    assert is_l21(to_nx(c.graph), c.labelling.labels)


def test_zpn_zqm_headline_instance():
    c = construct_zpn_zqm(2, 3, 3, 3)
    assert c.graph.n == 143 and c.formula == 111
    assert is_l21(to_nx(c.graph), c.labelling.labels)
    # the block scheme ends one above the closed form here and says so
    assert c.span == 112
    assert {d.item for d in c.discrepancies} >= {"span"}


def test_first_fit_labelling_beats_closed_form():
    c = construct_zpn_zqm(2, 3, 3, 3, strategy="first-fit")
    assert is_l21(to_nx(c.graph), c.labelling.labels)
    assert c.span == 108 < c.formula and c.formula_refuted


def test_closed_form_below_degree_bound():
    # Z9 x Z16: the stated value is below Delta + 1, and the construction meets Delta + 1
    c = construct_zpn_zqm(3, 2, 2, 4)
    assert c.formula == 50 and c.lower == 71 == c.span
    assert c.formula_refuted


@pytest.mark.parametrize("q, p, n", [(3, 2, 3), (2, 2, 3), (2, 2, 2), (5, 2, 2), (4, 2, 3), (3, 2, 2)])
def test_fq_zpn_hits_formula(q, p, n):
    c = construct_fq_zpn(q, p, n)
    assert c.span == c.formula and is_l21(to_nx(c.graph), c.labelling.labels)


def test_fq_zpn_case4_odd_prime():
    c = construct_fq_zpn(4, 3, 2)
    assert (c.formula, c.span) == (15, 12)
    assert lambda_exact(c.graph).lam == 12
    assert any(d.item == "closed form vs layer arithmetic" for d in c.discrepancies)


@pytest.mark.parametrize("sizes", [s for k in (2, 3) for s in itertools.combinations_with_replacement(range(1, 4), k)])
def test_multipartite(sizes):
    c = construct_complete_multipartite(sizes)
    assert c.span == c.formula and is_valid(c.graph, c.labelling)


def test_dispatch():
    c = construct(family_of(parse_ring_spec("F3xZ8")))
    assert c.family == "fq-zpn" and c.span == 11


def test_add_dominating_labelling():
    g = path_graph(3)
    f = Labelling.of([0, 3, 1])
    big = add_isolated_and_dominating(g, 2)
    h = add_dominating_labelling(f, 2)
    assert is_valid(big, h) and h.span == f.span + 2 + 2
    assert is_valid(add_isolated_and_dominating(complete_graph(3), 0),
                    add_dominating_labelling(Labelling.of([0, 2, 4]), 0))


def test_to_json_fields():
    data = construct_zpn(2, 3).to_json()
    assert {"formula", "span", "lower_bound", "optimal", "discrepancies", "labelling"} <= set(data)
