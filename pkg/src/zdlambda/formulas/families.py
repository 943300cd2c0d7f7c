"""Recognise which closed-form family a ring belongs to."""

from __future__ import annotations

from dataclasses import dataclass

from ..ring import Field, LocalZ, RingSpec
from .closed import (
    FormulaError,
    boolean_lift_value,
    fq_zpn_case,
    lambda_complete_multipartite,
    lambda_fq_zpn,
    lambda_zpn,
    lambda_zpn_zqm,
    zpn_zqm_case,
)
from .construct import (
    Construction,
    construct_complete_multipartite,
    construct_fq_zpn,
    construct_zpn,
    construct_zpn_zqm,
)


@dataclass(frozen=True)
class Family:
    name: str
    params: tuple

    @property
    def case(self):
        if self.name == "zpn-zqm":
            return zpn_zqm_case(*self.params)
        if self.name == "fq-zpn":
            return fq_zpn_case(*self.params)
        return None


def _field_size(f) -> int | None:
    if isinstance(f, Field):
        return f.q
    if isinstance(f, LocalZ) and f.k == 1:
        return f.p
    return None


def family_of(spec: RingSpec) -> Family:
    fields = [_field_size(f) for f in spec.factors]
    local = [f for f in spec.factors if _field_size(f) is None]
    qs = [q for q in fields if q is not None]
    if len(spec) == 1 and local:
        return Family("zpn", (local[0].p, local[0].k))
    if len(spec) == 2 and len(local) == 2:
        a, b = local
        return Family("zpn-zqm", (a.p, a.k, b.p, b.k))
    if len(spec) == 2 and len(local) == 1:
        return Family("fq-zpn", (qs[0], local[0].p, local[0].k))
    if not local and len(qs) == 2:
        # Gamma(F_a x F_b) is K_{a-1, b-1}
        return Family("multipartite", tuple(q - 1 for q in qs))
    if not local and len(qs) == 4:
        return Family("boolean4", tuple(sorted(qs)))
    raise FormulaError(f"no closed form is known for {spec}")


def formula_value(fam: Family) -> int:
    if fam.name == "zpn":
        return lambda_zpn(*fam.params)
    if fam.name == "zpn-zqm":
        return lambda_zpn_zqm(*fam.params)
    if fam.name == "fq-zpn":
        return lambda_fq_zpn(*fam.params)
    if fam.name == "multipartite":
        return lambda_complete_multipartite(fam.params)
    if fam.name == "boolean4":
        return boolean_lift_value(fam.params)
    raise FormulaError(f"unknown family {fam.name}")


def construct(fam: Family, strategy: str = "layered") -> Construction:
    if fam.name == "zpn":
        return construct_zpn(*fam.params)
    if fam.name == "zpn-zqm":
        return construct_zpn_zqm(*fam.params, strategy=strategy)
    if fam.name == "fq-zpn":
        return construct_fq_zpn(*fam.params)
    if fam.name == "multipartite":
        return construct_complete_multipartite(fam.params)
    raise FormulaError(f"no construction is implemented for family {fam.name}")
