import pytest

from zdlambda.formulas import (
    FormulaError,
    boolean_lift_value,
    family_of,
    formula_value,
    fq_zpn_case,
    lambda_add_dominating,
    lambda_beck_from_gamma,
    lambda_complete_multipartite,
    lambda_fq_zpn,
    lambda_zpn,
    lambda_zpn_zqm,
    orient_pair,
    zpn_zqm_case,
)
from zdlambda.graph import diameter
from zdlambda.l21.solver import lambda_exact
from zdlambda.ring import parse_ring_spec
from zdlambda.zdg import gamma, gamma_beck


@pytest.mark.parametrize("p, n, lam", [(2, 3, 3), (3, 2, 2), (2, 4, 7), (5, 3, 27), (7, 2, 10)])
def test_zpn(p, n, lam):
    assert lambda_zpn(p, n) == lam


def test_zpn_rejects():
    with pytest.raises(FormulaError):
        lambda_zpn(4, 3)
    with pytest.raises(FormulaError):
        lambda_zpn(2, 1)


@pytest.mark.parametrize("params, lam, case", [
    ((2, 3, 3, 3), 111, "n,m>=3"),
    ((2, 2, 3, 2), 19, "n=m=2"),
    ((2, 2, 3, 3), 56, "n=2,m>=3"),
    ((2, 3, 2, 4), 65, "n,m>=3"),
    ((3, 3, 3, 3), 249, "n,m>=3"),
])
def test_zpn_zqm(params, lam, case):
    assert lambda_zpn_zqm(*params) == lam
    assert zpn_zqm_case(*params) == case


def test_orientation():
    assert orient_pair(3, 3, 2, 3) == (2, 3, 3, 3)
    assert lambda_zpn_zqm(3, 3, 2, 3) == lambda_zpn_zqm(2, 3, 3, 3)


@pytest.mark.parametrize("q, p, n, lam, case", [
    (3, 2, 3, 11, 1), (2, 2, 3, 9, 2), (2, 2, 2, 4, 3), (5, 2, 2, 9, 4),
])
def test_fq_zpn(q, p, n, lam, case):
    assert fq_zpn_case(q, p, n) == case
    assert lambda_fq_zpn(q, p, n) == lam


def test_fq_zpn_boundaries():
    # for n >= 3 the threshold p + (p-1)/(p^{n-1}-1) lies strictly between p and p + 1
    assert fq_zpn_case(4, 3, 3) == 1 and fq_zpn_case(3, 3, 3) == 2
    # q = p + 1 falls in case 4
    assert fq_zpn_case(3, 2, 2) == 4 and fq_zpn_case(2, 2, 2) == 3
    with pytest.raises(FormulaError):
        fq_zpn_case(6, 2, 2)


@pytest.mark.parametrize("sizes, lam", [((1, 1, 1), 4), ((2, 2), 4), ((3, 2, 1), 7)])
def test_multipartite(sizes, lam):
    assert lambda_complete_multipartite(sizes) == lam


def test_multipartite_needs_two_parts():
    with pytest.raises(FormulaError):
        lambda_complete_multipartite((3,))


def test_multipartite_exact_cross_check():
    from zdlambda.graph import complete_multipartite

    assert lambda_exact(complete_multipartite((3, 2, 1))).lam == 7


def test_beck_field():
    # Beck's graph of F_q is the star K_{1,q-1}
    for q in (2, 3, 4, 5, 7):
        assert lambda_exact(gamma_beck(parse_ring_spec(f"F{q}"))).lam == q


def test_beck_shift_arithmetic():
    assert lambda_beck_from_gamma(3, 8, 3, 2) == 9
    assert lambda_beck_from_gamma(2, 9, 2, 1) == 10
    assert lambda_add_dominating(5, 2) == 9
    with pytest.raises(FormulaError):
        lambda_beck_from_gamma(3, 8, 3, 3)
    with pytest.raises(FormulaError):
        lambda_add_dominating(5, 1, diam=3)


def test_boolean_lift_value():
    assert boolean_lift_value((2, 2, 2, 2)) == 10
    with pytest.raises(FormulaError):
        boolean_lift_value((2, 2, 2))


@pytest.mark.parametrize("ring, name", [
    ("Z27", "zpn"), ("Z8xZ27", "zpn-zqm"), ("F4xZ9", "fq-zpn"), ("Z3xZ8", "fq-zpn"),
    ("F2xF5", "multipartite"), ("Z2xZ3xZ5xZ7", "boolean4"),
])
def test_family_of(ring, name):
    assert family_of(parse_ring_spec(ring)).name == name


def test_family_unknown():
    with pytest.raises(FormulaError):
        family_of(parse_ring_spec("Z2xZ2xZ2"))
    with pytest.raises(FormulaError):
        family_of(parse_ring_spec("F7"))


def test_formula_value_via_family():
    assert formula_value(family_of(parse_ring_spec("F3xZ8"))) == 11
    assert formula_value(family_of(parse_ring_spec("F3xF4"))) == lambda_exact(
        gamma(parse_ring_spec("F3xF4"))[0]).lam


def test_beck_gamma_diameter_small():
    g, _ = gamma(parse_ring_spec("Z8"))
    assert diameter(g) == 2
