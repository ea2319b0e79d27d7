"""Stanley spaces and Stanley decompositions of monomial quotients `I/J`.

A Stanley space `uK[Z]` is the set of monomials `u * w` with `w` supported on
`Z`. A Stanley decomposition of `I/J` is a finite list of such spaces that
partitions the monomials of `I ∖ J`.

Spaces are infinite, but every membership question involved (in I, in J, in a
space) is a threshold condition on each exponent. Clamping exponents at one
above the largest exponent that appears therefore loses nothing, so checking
the finite box `[0, G + 1]^n` decides validity completely.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .monomials import (
    Exponents,
    Monomial,
    MonomialIdeal,
    Ring,
    VariableSet,
    check_variable_set,
    exponent_bound,
    is_subideal,
    iter_box,
    shift_bound,
)


class QuotientPairError(ValueError):
    """Raised when a quotient `I/J` is formed with `J ⊄ I`."""

    def __init__(self, *, numerator: MonomialIdeal, denominator: MonomialIdeal) -> None:
        """Initialize the error.

        Args:
            numerator: The ideal I.
            denominator: The ideal J that is not contained in I.
        """

        super().__init__(
            f"Quotient requires J ⊆ I; J={denominator.exponent_vectors()!r} is not contained in "
            f"I={numerator.exponent_vectors()!r}."
        )
        self.numerator = numerator
        self.denominator = denominator


class InvalidDecompositionError(ValueError):
    """Raised when a decomposition fails verification."""

    def __init__(self, *, result: VerificationResult) -> None:
        """Initialize the error.

        Args:
            result: The failing verification result (carries the witness).
        """

        super().__init__(f"Invalid Stanley decomposition: {result.describe()}")
        self.result = result


@dataclass(frozen=True, slots=True)
class StanleySpace:
    """The Stanley space `root * K[vars]`.

    Attributes:
        root: The monomial u.
        vars: The variable set Z (1-based indices).
    """

    root: Monomial
    vars: VariableSet

    def __post_init__(self) -> None:
        check_variable_set(self.root.ring, self.vars)

    @property
    def dimension(self) -> int:
        return len(self.vars)

    @property
    def sorted_vars(self) -> tuple[int, ...]:
        return tuple(sorted(self.vars))

    def contains(self, v: Monomial) -> bool:
        """Return True when `v ∈ root * K[vars]`."""

        return space_contains(self, v)

    def contains_exponents(self, vector: Exponents) -> bool:
        """Membership test on a raw exponent vector (no ring check)."""

        for j, (r, e) in enumerate(zip(self.root.exponents, vector), start=1):
            if e < r or (e > r and j not in self.vars):
                return False
        return True


def space_contains(space: StanleySpace, v: Monomial) -> bool:
    """Return True iff the root divides v and v only grows in the space's variables."""

    space.root.ring.check(v.ring)
    return space.contains_exponents(v.exponents)


@dataclass(frozen=True, slots=True)
class QuotientPair:
    """The module `I/J` for monomial ideals `J ⊆ I`.

    `S/I` is `(unit, I)` and the ideal `I` alone is `(I, zero)`.

    Attributes:
        numerator: The ideal I.
        denominator: The ideal J.
    """

    numerator: MonomialIdeal
    denominator: MonomialIdeal

    def __post_init__(self) -> None:
        self.numerator.ring.check(self.denominator.ring)
        if not is_subideal(self.denominator, self.numerator):
            raise QuotientPairError(numerator=self.numerator, denominator=self.denominator)

    @classmethod
    def of_ideal(cls, ideal: MonomialIdeal) -> QuotientPair:
        """Return the pair `(I, 0)` representing the ideal itself."""

        return cls(numerator=ideal, denominator=MonomialIdeal.zero(ideal.ring))

    @classmethod
    def of_quotient_ring(cls, ideal: MonomialIdeal) -> QuotientPair:
        """Return the pair `(S, I)` representing `S/I`."""

        return cls(numerator=MonomialIdeal.unit(ideal.ring), denominator=ideal)

    @property
    def ring(self) -> Ring:
        return self.numerator.ring

    @property
    def is_zero_module(self) -> bool:
        """True when `I = J`, i.e. `I ∖ J` is empty."""

        return self.numerator == self.denominator

    def bound(self) -> Exponents:
        """Componentwise max of the generator exponents of I and J."""

        return exponent_bound(
            self.ring, (*self.numerator.exponent_vectors(), *self.denominator.exponent_vectors())
        )

    def contains(self, u: Monomial) -> bool:
        """Return True when `u ∈ I ∖ J`."""

        self.ring.check(u.ring)
        return self.contains_exponents(u.exponents)

    def contains_exponents(self, vector: Exponents) -> bool:
        return self.numerator.contains_exponents(vector) and not self.denominator.contains_exponents(vector)


@dataclass(frozen=True, slots=True)
class StanleyDecomposition:
    """A list of Stanley spaces attached to a quotient `I/J`.

    The list is not checked on construction; use `verify_decomposition`.

    Attributes:
        quotient: The decomposed module.
        spaces: The Stanley spaces, in emission order.
    """

    quotient: QuotientPair
    spaces: tuple[StanleySpace, ...]

    def __post_init__(self) -> None:
        for space in self.spaces:
            self.quotient.ring.check(space.root.ring)

    @property
    def ring(self) -> Ring:
        return self.quotient.ring

    @property
    def sdepth(self) -> int:
        """Minimum space dimension, 0 for an empty list (the zero module)."""

        return min((space.dimension for space in self.spaces), default=0)

    def verification_bound(self, *, margin: int = 1) -> Exponents:
        """Return the box bound `G + margin` used by `verify_decomposition`."""

        roots = (space.root.exponents for space in self.spaces)
        base = exponent_bound(self.ring, (self.quotient.bound(), *roots))
        return shift_bound(base, margin)


@dataclass(frozen=True, slots=True)
class VerificationResult:
    """Outcome of a box verification.

    Attributes:
        is_valid: True when the decomposition passed.
        bound: The box bound that was scanned.
        witness: First failing monomial in lexicographic order, if any.
        reason: `uncovered`, `overlap` or `outside_quotient` on failure.
        spaces: Indices of the spaces containing the witness.
    """

    is_valid: bool
    bound: Exponents
    witness: Monomial | None = None
    reason: str | None = None
    spaces: tuple[int, ...] = ()

    def describe(self) -> str:
        """Return a one-line diagnostic."""

        if self.is_valid:
            return f"valid on box [0, {list(self.bound)}]"
        assert self.witness is not None
        return (
            f"{self.reason} at monomial {list(self.witness.exponents)} "
            f"(spaces {list(self.spaces)}; box [0, {list(self.bound)}])"
        )


def verify_decomposition(decomposition: StanleyDecomposition, *, margin: int = 1) -> VerificationResult:
    """Check that the spaces partition `I ∖ J` on the verification box.

    For every monomial m of `[0, G + margin]^n`, where G is the componentwise
    max of all generator exponents of I and J and of all space roots:
    m in `I ∖ J` must lie in exactly one space, and m outside `I ∖ J` must lie
    in none.

    Args:
        decomposition: Decomposition to check.
        margin: Extra room above G (1 is complete; larger values re-check).

    Returns:
        VerificationResult with the first failing witness in lexicographic order.
    """

    ring = decomposition.ring
    bound = decomposition.verification_bound(margin=margin)
    quotient = decomposition.quotient
    spaces = decomposition.spaces
    for vector in iter_box(bound):
        hits = tuple(i for i, space in enumerate(spaces) if space.contains_exponents(vector))
        inside = quotient.contains_exponents(vector)
        reason = None
        if inside and not hits:
            reason = "uncovered"
        elif inside and len(hits) > 1:
            reason = "overlap"
        elif not inside and hits:
            reason = "outside_quotient"
        if reason is not None:
            return VerificationResult(
                is_valid=False, bound=bound, witness=ring.monomial(vector), reason=reason, spaces=hits
            )
    return VerificationResult(is_valid=True, bound=bound)


def sdepth_of(decomposition: StanleyDecomposition, *, verify: bool = True) -> int:
    """Return the Stanley depth of a decomposition.

    Args:
        decomposition: A Stanley decomposition.
        verify: Verify the decomposition first (default).

    Raises:
        InvalidDecompositionError: When verification fails.
    """

    if verify:
        result = verify_decomposition(decomposition)
        if not result.is_valid:
            raise InvalidDecompositionError(result=result)
    return decomposition.sdepth


def decomposition_of(quotient: QuotientPair, spaces: Iterable[tuple[Iterable[int], Iterable[int]]]) -> StanleyDecomposition:
    """Build a decomposition from `(root exponents, vars)` pairs."""

    ring = quotient.ring
    return StanleyDecomposition(
        quotient=quotient,
        spaces=tuple(
            StanleySpace(root=ring.monomial(root), vars=check_variable_set(ring, members))
            for root, members in spaces
        ),
    )
