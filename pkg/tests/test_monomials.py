"""Unit tests for monomial and monomial-ideal arithmetic."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.monomials import (
    MAX_EXPONENT,
    ExponentOverflowError,
    MonomialIdeal,
    Ring,
    RingMismatchError,
    ZeroIdealError,
    colon,
    contains,
    gcd_lcm,
    intersect,
    intersect_all,
    is_subideal,
    iter_box,
    minimalize,
    product_power,
    radical,
    radical_power_exponent,
)
from tests.conftest import ideal_of

pytestmark = pytest.mark.unit

RING3 = Ring.standard(3)
vectors3 = st.lists(st.tuples(*(st.integers(0, 2) for _ in range(3))), min_size=1, max_size=4)


def test_minimalize_drops_multiples_and_sorts_lexicographically() -> None:
    """Keep only the divisibility-minimal generators, sorted by exponent vector."""

    ring = Ring.standard(2)
    ideal = minimalize(ring, [ring.monomial((2, 0)), ring.monomial((2, 1)), ring.monomial((0, 1)), ring.monomial((2, 0))])
    assert ideal.exponent_vectors() == ((0, 1), (2, 0))


def test_zero_and_unit_ideal_conventions() -> None:
    """The zero ideal has no generators; the unit ideal is generated by 1."""

    zero = MonomialIdeal.zero(RING3)
    unit = MonomialIdeal.unit(RING3)
    assert zero.is_zero and not zero.is_proper
    assert unit.is_unit and unit.exponent_vectors() == ((0, 0, 0),)
    assert intersect_all(RING3, []) == unit
    assert not contains(zero, RING3.one())


def test_constructor_rejects_non_canonical_generators() -> None:
    """Direct construction requires a sorted antichain."""

    ring = Ring.standard(2)
    with pytest.raises(ValueError):
        MonomialIdeal(ring=ring, generators=(ring.monomial((1, 0)), ring.monomial((2, 0))))
    with pytest.raises(ValueError):
        MonomialIdeal(ring=ring, generators=(ring.monomial((1, 0)), ring.monomial((0, 1))))


def test_intersection_is_generated_by_lcms() -> None:
    """`(x1) ∩ (x2) = (x1x2)` and `(x1^2, x2) ∩ (x1x2^2) = (x1x2^2)`."""

    ring = Ring.standard(2)
    assert intersect(ideal_of(2, (1, 0)), ideal_of(2, (0, 1))).exponent_vectors() == ((1, 1),)
    assert intersect(ideal_of(2, (2, 0), (0, 1)), ideal_of(2, (1, 2))) == ideal_of(2, (1, 2))
    gcd, lcm = gcd_lcm(ring.monomial((2, 1)), ring.monomial((1, 3)))
    assert gcd.exponents == (1, 1)
    assert lcm.exponents == (2, 3)


def test_product_power_of_maximal_ideal() -> None:
    """`(x1, x2)^2 = (x1^2, x1x2, x2^2)`."""

    assert product_power(ideal_of(2, (1, 0), (0, 1)), 2).exponent_vectors() == ((0, 2), (1, 1), (2, 0))


def test_colon_divides_out_the_gcd() -> None:
    """`(x1^2) : x1 = (x1)` and `(x1^2x2, x3) : x1x3 = (1)`."""

    assert colon(ideal_of(2, (2, 0)), Ring.standard(2).monomial((1, 0))) == ideal_of(2, (1, 0))
    assert colon(ideal_of(3, (2, 1, 0), (0, 0, 1)), RING3.monomial((1, 0, 1))).is_unit
    assert colon(MonomialIdeal.zero(RING3), RING3.monomial((1, 1, 1))).is_zero


def test_radical_and_radical_power_exponent() -> None:
    """`√(x1^2x2, x3^3) = (x1x2, x3)`; `k_I` for `(x1^2, x2^3)` is lcm(2, 3)."""

    assert radical(ideal_of(3, (2, 1, 0), (0, 0, 3))).exponent_vectors() == ((0, 0, 1), (1, 1, 0))
    assert radical_power_exponent(ideal_of(2, (2, 0), (0, 3))) == 6
    assert radical_power_exponent(ideal_of(2, (1, 1))) == 1
    with pytest.raises(ZeroIdealError):
        radical_power_exponent(MonomialIdeal.zero(RING3))


def test_ring_mismatch_is_rejected() -> None:
    """Operations across rings raise RingMismatchError."""

    with pytest.raises(RingMismatchError) as excinfo:
        intersect(ideal_of(2, (1, 0)), ideal_of(3, (1, 0, 0)))
    assert excinfo.value.expected.n == 2
    assert excinfo.value.actual.n == 3


def test_exponent_overflow_is_checked() -> None:
    """Exponents above MAX_EXPONENT raise at construction, including via powers."""

    ring = Ring.standard(1)
    with pytest.raises(ExponentOverflowError):
        ring.monomial((MAX_EXPONENT + 1,))
    with pytest.raises(ExponentOverflowError):
        ring.monomial((2**30,)) ** 4


@settings(max_examples=60, deadline=None)
@given(left=vectors3, right=vectors3)
def test_intersection_membership_agrees_on_box(left: list[tuple[int, ...]], right: list[tuple[int, ...]]) -> None:
    """`u ∈ I ∩ J` iff `u ∈ I` and `u ∈ J`, for every u of the box `[0, 3]^3`."""

    first, second = MonomialIdeal.from_exponents(RING3, left), MonomialIdeal.from_exponents(RING3, right)
    both = intersect(first, second)
    for vector in iter_box((3, 3, 3)):
        assert both.contains_exponents(vector) == (first.contains_exponents(vector) and second.contains_exponents(vector))
    assert is_subideal(both, first) and is_subideal(both, second)


@settings(max_examples=60, deadline=None)
@given(gens=vectors3, v=st.tuples(*(st.integers(0, 2) for _ in range(3))))
def test_colon_membership_round_trip(gens: list[tuple[int, ...]], v: tuple[int, ...]) -> None:
    """`u ∈ (I : v)` iff `u·v ∈ I` on the box `[0, 2]^3`."""

    ideal = MonomialIdeal.from_exponents(RING3, gens)
    multiplier = RING3.monomial(v)
    quotient = colon(ideal, multiplier)
    for vector in iter_box((2, 2, 2)):
        u = RING3.monomial(vector)
        assert contains(quotient, u) == contains(ideal, u * multiplier)


@settings(max_examples=40, deadline=None)
@given(gens=vectors3)
def test_radical_power_exponent_characterizes_radical(gens: list[tuple[int, ...]]) -> None:
    """`u ∈ √I` iff `u^{k_I} ∈ I` for squarefree u."""

    ideal = MonomialIdeal.from_exponents(RING3, gens)
    k = radical_power_exponent(ideal)
    root = radical(ideal)
    for vector in iter_box((1, 1, 1)):
        u = RING3.monomial(vector)
        assert contains(root, u) == contains(ideal, u**k)
