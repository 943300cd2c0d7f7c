import pytest

from zdlambda.ring import (
    Field,
    Kind,
    LocalZ,
    RingSpec,
    RingSpecError,
    RingTooLarge,
    classify_element,
    element_array,
    enumerate_elements,
    factorize,
    parse_ring_spec,
    product_is_zero,
    zero_pattern,
)

U, Z, D = Kind.UNIT, Kind.ZERO, Kind.ZERODIV


@pytest.mark.parametrize("text, factors", [
    ("Z8", (LocalZ(2, 3),)),
    ("Z12", (LocalZ(2, 2), LocalZ(3, 1))),
    ("F4 x Z9", (Field(4), LocalZ(3, 2))),
    ("z2XZ2xz2", (LocalZ(2, 1),) * 3),
    ("Z9xF3", (Field(3), LocalZ(3, 2))),
])
def test_parse(text, factors):
    assert parse_ring_spec(text).factors == factors


@pytest.mark.parametrize("text", ["", "Z1", "F6", "Q5", "Z8xx", "F0", "Z"])
def test_parse_rejects(text):
    with pytest.raises(RingSpecError):
        parse_ring_spec(text)


def test_cap_refusal_is_distinguishable():
    with pytest.raises(RingTooLarge):
        parse_ring_spec("Z1000003", cap=1000)


def test_factorize():
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert factorize(97) == [(97, 1)]


def test_enumerate_order():
    assert list(enumerate_elements(RingSpec.of([LocalZ(2, 2)]))) == [(0,), (1,), (2,), (3,)]
    assert list(enumerate_elements(RingSpec.of([Field(2), Field(2)]))) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    spec = parse_ring_spec("Z8xZ27")
    assert sum(1 for _ in enumerate_elements(spec)) == 216
    assert element_array(spec).shape == (216, 2)


def test_product_is_zero():
    z8 = parse_ring_spec("Z8")
    assert product_is_zero((2,), (4,), z8)
    assert not product_is_zero((2,), (6,), z8)
    assert product_is_zero((1, 0), (0, 2), parse_ring_spec("F2xZ4"))


def test_classify():
    z8 = parse_ring_spec("Z8")
    assert classify_element((3,), z8) == U
    assert classify_element((6,), z8) == D
    assert classify_element((0,), z8) == Z


def test_classify_matches_scan():
    spec = parse_ring_spec("F2xZ4")
    elements = list(enumerate_elements(spec))
    zero = (0, 0)
    for e in elements:
        if e == zero:
            continue
        is_zd = any(f != zero and product_is_zero(e, f, spec) for f in elements)
        assert (classify_element(e, spec) == D) == is_zd


def test_zero_pattern():
    assert zero_pattern((1, 0, 1), RingSpec((Field(2), Field(3), Field(2)))) == (U, Z, U)
    assert zero_pattern((2, 1), RingSpec((LocalZ(2, 2), Field(3)))) == (D, U)


def test_field_pattern_count():
    spec = parse_ring_spec("F2xF3xF4")
    patterns = {zero_pattern(e, spec) for e in enumerate_elements(spec)}
    assert len(patterns) == 2**3
