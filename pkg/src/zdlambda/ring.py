"""Finite commutative rings as products of local factors Z_{p^k} and fields F_q.

Elements are plain tuples of ints, one component per factor.  A ``LocalZ``
component is a residue in ``[0, p**k)``; a ``Field`` component is an abstract
tag in ``[0, q)`` where ``0`` is the zero element.  Fields carry no
multiplication table: for every graph built here only the zero-product
relation matters, and in a field ``a*b == 0`` iff one side is zero.
"""

from __future__ import annotations

import enum
import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

import numpy as np

DEFAULT_ENUMERATION_CAP = 500_000

RingElement = tuple[int, ...]


class RingSpecError(ValueError):
    """Raised for malformed ring specs and cap violations."""


class RingTooLarge(RingSpecError):
    """The ring's order is above the enumeration cap."""


class Kind(enum.IntEnum):
    ZERO = 0
    UNIT = 1
    ZERODIV = 2


def factorize(m: int) -> list[tuple[int, int]]:
    """Prime factorization of ``m >= 1`` as ``[(p, e), ...]`` with p increasing."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``q == p**e``, or None if q is not a prime power."""
    if q < 2:
        return None
    f = factorize(q)
    return f[0] if len(f) == 1 else None


@dataclass(frozen=True)
class LocalZ:
    p: int
    k: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise RingSpecError(f"Z_{{p^k}} needs p prime, got p={self.p}")
        if self.k < 1:
            raise RingSpecError(f"Z_{{p^k}} needs k >= 1, got k={self.k}")

    @property
    def size(self) -> int:
        return self.p**self.k

    @property
    def is_field(self) -> bool:
        return self.k == 1

    def sort_key(self):
        return (1, self.p, self.k)

    def __str__(self):
        return f"Z{self.size}"


@dataclass(frozen=True)
class Field:
    q: int

    def __post_init__(self):
        if prime_power(self.q) is None:
            raise RingSpecError(f"F_q needs q a prime power >= 2, got q={self.q}")

    @property
    def size(self) -> int:
        return self.q

    @property
    def is_field(self) -> bool:
        return True

    def sort_key(self):
        p, e = prime_power(self.q)
        return (0, p, e)

    def __str__(self):
        return f"F{self.q}"


Factor = Union[LocalZ, Field]


@dataclass(frozen=True)
class RingSpec:
    """An ordered product of factors, kept in canonical order.

    Construct through :func:`parse_ring_spec` or :meth:`of`; the constructor
    itself does not reorder.
    """

    factors: tuple[Factor, ...]
    cap: int = DEFAULT_ENUMERATION_CAP

    def __post_init__(self):
        if not self.factors:
            raise RingSpecError("a ring needs at least one factor")
        if self.order > self.cap:
            raise RingTooLarge(
                f"ring order {self.order} exceeds enumeration cap {self.cap}"
            )

    @classmethod
    def of(cls, factors: Sequence[Factor], cap: int = DEFAULT_ENUMERATION_CAP) -> "RingSpec":
        return cls(tuple(sorted(factors, key=lambda f: f.sort_key())), cap)

    # Equality ignores the cap so that equal rings compare equal.
    def __eq__(self, other):
        return isinstance(other, RingSpec) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    @property
    def order(self) -> int:
        return math.prod(f.size for f in self.factors)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(f.size for f in self.factors)

    @property
    def is_reduced(self) -> bool:
        return all(f.is_field for f in self.factors)

    def __str__(self):
        return "x".join(str(f) for f in self.factors)

    def __len__(self):
        return len(self.factors)


_TERM = re.compile(r"([ZF])(\d+)")


def parse_ring_spec(text: str, cap: int = DEFAULT_ENUMERATION_CAP) -> RingSpec:
    """Parse ``"Z8"``, ``"F4 x Z9"``, ``"Z2xZ2xZ2"`` ...

    Composite ``Z{m}`` is split into its prime-power factors.
    """
    compact = re.sub(r"\s+", "", text).upper()
    if not compact:
        raise RingSpecError("empty ring spec")
    factors: list[Factor] = []
    for term in compact.split("X"):
        m = _TERM.fullmatch(term)
        if m is None:
            raise RingSpecError(f"cannot parse term {term!r} in {text!r}")
        kind, value = m.group(1), int(m.group(2))
        if value < 2:
            raise RingSpecError(f"term {term!r}: integer must be >= 2")
        if kind == "Z":
            factors.extend(LocalZ(p, e) for p, e in factorize(value))
        else:
            factors.append(Field(value))
    return RingSpec.of(factors, cap)


def enumerate_elements(spec: RingSpec) -> Iterator[RingElement]:
    """All elements in lexicographic component order, zero first."""
    return itertools.product(*(range(f.size) for f in spec.factors))


def element_array(spec: RingSpec) -> np.ndarray:
    """Elements as an ``(order, len(spec))`` int64 array, same order as enumerate."""
    grids = np.meshgrid(*(np.arange(s, dtype=np.int64) for s in spec.sizes), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def _check_member(e: RingElement, spec: RingSpec):
    if len(e) != len(spec.factors):
        raise RingSpecError(
            f"element {e} has {len(e)} components, ring {spec} has {len(spec.factors)}"
        )
    for c, f in zip(e, spec.factors):
        if not 0 <= c < f.size:
            raise RingSpecError(f"component {c} out of range for {f}")


def component_is_zero_product(a: int, b: int, factor: Factor) -> bool:
    if isinstance(factor, Field):
        return a == 0 or b == 0
    return (a * b) % factor.size == 0


def product_is_zero(a: RingElement, b: RingElement, spec: RingSpec) -> bool:
    _check_member(a, spec)
    _check_member(b, spec)
    return all(component_is_zero_product(x, y, f) for x, y, f in zip(a, b, spec.factors))


def component_kind(c: int, factor: Factor) -> Kind:
    if c == 0:
        return Kind.ZERO
    if isinstance(factor, Field) or c % factor.p != 0:
        return Kind.UNIT
    return Kind.ZERODIV


def zero_pattern(e: RingElement, spec: RingSpec) -> tuple[Kind, ...]:
    _check_member(e, spec)
    return tuple(component_kind(c, f) for c, f in zip(e, spec.factors))


def classify_element(e: RingElement, spec: RingSpec) -> Kind:
    """ZERO, UNIT or ZERODIV (every non-unit nonzero element of a finite ring)."""
    pattern = zero_pattern(e, spec)
    if all(k == Kind.ZERO for k in pattern):
        return Kind.ZERO
    if all(k == Kind.UNIT for k in pattern):
        return Kind.UNIT
    return Kind.ZERODIV


def format_element(e: RingElement) -> str:
    return "(" + ",".join(str(c) for c in e) + ")"


def zero_product_matrix(elements: np.ndarray, spec: RingSpec) -> np.ndarray:
    """Boolean matrix ``Z[i, j] = (elements[i] * elements[j] == 0)``."""
    n = len(elements)
    out = np.ones((n, n), dtype=bool)
    for col, f in enumerate(spec.factors):
        x = elements[:, col]
        if isinstance(f, Field):
            nz = x != 0
            out &= ~(nz[:, None] & nz[None, :])
        else:
            out &= np.multiply.outer(x, x) % f.size == 0
    return out
