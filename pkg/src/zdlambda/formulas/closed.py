"""Closed-form lambda values for the ring families and the Beck shift rules.

All arithmetic is exact; case thresholds use :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..ring import is_prime, prime_power


class FormulaError(ValueError):
    pass


def _need_prime(name: str, value: int):
    if not is_prime(value):
        raise FormulaError(f"{name} must be prime, got {value}")


def _need_exponent(name: str, value: int, low: int = 2):
    if value < low:
        raise FormulaError(f"{name} must be >= {low}, got {value}")


def lambda_zpn(p: int, n: int) -> int:
    _need_prime("p", p)
    _need_exponent("n", n)
    if n == 2:
        return 2 * p - 4
    return p ** (n - 1) + p - 3


def orient_pair(p: int, n: int, q: int, m: int) -> tuple[int, int, int, int]:
    """Swap the factors if needed so that p^n <= q^m."""
    if p**n > q**m:
        return q, m, p, n
    return p, n, q, m


def zpn_zqm_case(p: int, n: int, q: int, m: int) -> str:
    p, n, q, m = orient_pair(p, n, q, m)
    if n >= 3 and m >= 3:
        return "n,m>=3"
    if n == 2 and m == 2:
        return "n=m=2"
    if n == 2:
        return "n=2,m>=3"
    return "n>=3,m=2"


def lambda_zpn_zqm(p: int, n: int, q: int, m: int) -> int:
    for name, v in (("p", p), ("q", q)):
        _need_prime(name, v)
    _need_exponent("n", n)
    _need_exponent("m", m)
    case = zpn_zqm_case(p, n, q, m)
    p, n, q, m = orient_pair(p, n, q, m)
    if case == "n,m>=3":
        return p ** (n - 1) * q**m + p * q - 3
    if case == "n=m=2":
        return p * q**2 + p * q - 5
    if case == "n=2,m>=3":
        return p * q**m + p * q - 4
    return p ** (n - 1) * q**2 + p * q - 4


def fq_zpn_case(q: int, p: int, n: int) -> int:
    """Case number 1-4 for F_q x Z_{p^n}."""
    if prime_power(q) is None:
        raise FormulaError(f"q must be a prime power >= 2, got {q}")
    _need_prime("p", p)
    _need_exponent("n", n)
    if n >= 3:
        return 1 if q > Fraction(p**n - 1, p ** (n - 1) - 1) else 2
    return 3 if q < p + 1 else 4


def lambda_fq_zpn(q: int, p: int, n: int) -> int:
    case = fq_zpn_case(q, p, n)
    if case == 1:
        return q * p ** (n - 1) + p - 3
    if case == 2:
        return p**n + p + q - 3
    if case == 3:
        return p * p + p + q - 4
    return 2 * p * q - 2 * q - 1


def lambda_complete_multipartite(sizes: Sequence[int]) -> int:
    if len(sizes) < 2 or any(s < 1 for s in sizes):
        raise FormulaError("needs at least two parts, each of positive size")
    return sum(sizes) + len(sizes) - 2


def lambda_add_dominating(k: int, m: int, diam: float | None = None) -> int:
    """lambda after adding m isolated vertices and one dominating vertex."""
    if diam is not None and diam >= 3:
        raise FormulaError(f"shift rule needs diameter < 3, got {diam}")
    if m < 0:
        raise FormulaError("m must be non-negative")
    return k + m + 2


def lambda_beck_from_gamma(k: int, ring_order: int, gamma_order: int, diam: float | None = None) -> int:
    """lambda of Beck's graph from lambda(Gamma) = k."""
    if diam is not None and diam >= 3:
        raise FormulaError(f"shift rule needs diameter < 3, got {diam}")
    return k + ring_order - gamma_order + 1


def boolean_lift_value(qs: Sequence[int]) -> int:
    """The closed form stated for Gamma(F_q1 x ... x F_q4) with q1 <= ... <= q4."""
    if len(qs) != 4:
        raise FormulaError("needs exactly four field sizes")
    a = [q - 1 for q in sorted(qs)]
    pairs = sum(a[i] * a[j] for i in range(4) for j in range(i + 1, 4))
    return sum(a) + pairs + a[1] * a[2] * a[3] - 1
