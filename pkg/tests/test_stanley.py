"""Unit tests for Stanley spaces, decompositions and box verification."""

from __future__ import annotations

import pytest

from algebra.monomials import MonomialIdeal, Ring
from algebra.stanley import (
    InvalidDecompositionError,
    QuotientPair,
    QuotientPairError,
    StanleySpace,
    decomposition_of,
    sdepth_of,
    verify_decomposition,
)
from tests.conftest import ideal_of

pytestmark = pytest.mark.unit

RING2 = Ring.standard(2)
MAXIMAL_2 = ideal_of(2, (1, 0), (0, 1))


def test_space_membership() -> None:
    """`x1 K[x2]` holds `x1x2^5` but not `x1^2` or `x2`."""

    space = StanleySpace(root=RING2.monomial((1, 0)), vars=frozenset({2}))
    assert space.contains(RING2.monomial((1, 5)))
    assert not space.contains(RING2.monomial((2, 0)))
    assert not space.contains(RING2.monomial((0, 1)))
    assert space.dimension == 1


def test_space_rejects_out_of_range_variables() -> None:
    """Variable indices must lie in 1..n."""

    with pytest.raises(ValueError):
        StanleySpace(root=RING2.one(), vars=frozenset({3}))


def test_quotient_pair_requires_containment() -> None:
    """`J ⊆ I` is enforced; `I = J` gives the zero module."""

    with pytest.raises(QuotientPairError):
        QuotientPair(numerator=ideal_of(2, (1, 1)), denominator=ideal_of(2, (1, 0)))
    assert QuotientPair(numerator=MAXIMAL_2, denominator=MAXIMAL_2).is_zero_module


def test_valid_decomposition_of_maximal_ideal() -> None:
    """`(x1, x2) = x1K[x1, x2] ⊕ x2K[x2]` verifies with sdepth 1."""

    decomposition = decomposition_of(QuotientPair.of_ideal(MAXIMAL_2), [((1, 0), (1, 2)), ((0, 1), (2,))])
    result = verify_decomposition(decomposition)
    assert result.is_valid
    assert result.bound == (2, 2)
    assert sdepth_of(decomposition) == 1


@pytest.mark.parametrize(
    ("spaces", "reason", "witness", "hits"),
    [
        ([((1, 0), (1, 2)), ((0, 1), (1, 2))], "overlap", (1, 1), (0, 1)),
        ([((1, 0), (1, 2))], "uncovered", (0, 1), ()),
        ([((0, 0), (1, 2))], "outside_quotient", (0, 0), (0,)),
    ],
)
def test_verification_reports_first_failing_monomial(
    spaces: list[tuple[tuple[int, int], tuple[int, ...]]],
    reason: str,
    witness: tuple[int, int],
    hits: tuple[int, ...],
) -> None:
    """Failures carry the lexicographically first witness and the spaces holding it."""

    result = verify_decomposition(decomposition_of(QuotientPair.of_ideal(MAXIMAL_2), spaces))
    assert not result.is_valid
    assert result.reason == reason
    assert result.witness is not None and result.witness.exponents == witness
    assert result.spaces == hits
    assert reason in result.describe()


def test_sdepth_of_raises_on_invalid_decomposition() -> None:
    """sdepth_of refuses to report a value for a broken decomposition."""

    decomposition = decomposition_of(QuotientPair.of_ideal(MAXIMAL_2), [((1, 0), (1, 2))])
    with pytest.raises(InvalidDecompositionError) as excinfo:
        sdepth_of(decomposition)
    assert excinfo.value.result.reason == "uncovered"
    assert sdepth_of(decomposition, verify=False) == 2


def test_triangle_cover_decomposes_by_support(c3_cover: MonomialIdeal) -> None:
    """One space per support of size at least two gives sdepth 2."""

    decomposition = decomposition_of(
        QuotientPair.of_ideal(c3_cover),
        [((1, 1, 0), (1, 2)), ((1, 0, 1), (1, 3)), ((0, 1, 1), (2, 3)), ((1, 1, 1), (1, 2, 3))],
    )
    assert sdepth_of(decomposition) == 2


def test_zero_module_has_empty_decomposition() -> None:
    """The empty decomposition of `I/I` verifies and has sdepth 0."""

    decomposition = decomposition_of(QuotientPair(numerator=MAXIMAL_2, denominator=MAXIMAL_2), [])
    assert verify_decomposition(decomposition).is_valid
    assert sdepth_of(decomposition) == 0


def test_quotient_ring_by_maximal_ideal() -> None:
    """`S/(x1, x2)` is the single space `1·K`."""

    quotient = QuotientPair.of_quotient_ring(MAXIMAL_2)
    assert sdepth_of(decomposition_of(quotient, [((0, 0), ())])) == 0
    assert not verify_decomposition(decomposition_of(quotient, [((0, 0), (1,))])).is_valid


def test_unit_ideal_is_the_whole_ring() -> None:
    """`S = 1·K[x1, x2]` has sdepth n."""

    quotient = QuotientPair.of_ideal(MonomialIdeal.unit(RING2))
    assert sdepth_of(decomposition_of(quotient, [((0, 0), (1, 2))])) == 2


@pytest.mark.parametrize(
    "spaces",
    [
        [((1, 0), (1, 2)), ((0, 1), (2,))],
        [((1, 0), (1, 2)), ((0, 1), (1, 2))],
        [((1, 0), (1, 2))],
        [((0, 0), (1, 2))],
        [((1, 0), (1,)), ((0, 1), (2,)), ((1, 1), (1, 2))],
    ],
    ids=["valid", "overlap", "uncovered", "outside", "split"],
)
def test_larger_margin_gives_the_same_verdict(spaces: list[tuple[tuple[int, int], tuple[int, ...]]]) -> None:
    """Re-checking on a box three steps past G agrees with the default box."""

    decomposition = decomposition_of(QuotientPair.of_ideal(MAXIMAL_2), spaces)
    default, wide = verify_decomposition(decomposition), verify_decomposition(decomposition, margin=3)
    assert wide.bound == tuple(b + 2 for b in default.bound)
    assert (wide.is_valid, wide.reason) == (default.is_valid, default.reason)
