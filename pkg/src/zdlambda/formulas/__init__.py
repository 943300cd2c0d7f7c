"""Closed-form lambda values and the constructions that realise them."""

from .closed import (
    FormulaError,
    boolean_lift_value,
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
from .construct import (
    Construction,
    ConstructionError,
    Discrepancy,
    add_dominating_labelling,
    construct_complete_multipartite,
    construct_fq_zpn,
    construct_zpn,
    construct_zpn_zqm,
    zpn_labels,
)
from .families import Family, construct, family_of, formula_value
