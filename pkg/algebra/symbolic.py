"""Primary decomposition and symbolic powers of squarefree monomial ideals.

A squarefree monomial ideal is the irredundant intersection of the monomial
primes generated by its minimal vertex-cover-like transversals. Its k-th
symbolic power intersects the k-th powers of those primes, which gives the
membership criterion used throughout: `u ∈ I^(k)` iff, for every minimal prime
`p`, the degree of `u` summed over the variables of `p` is at least k.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from .monomials import (
    Monomial,
    MonomialIdeal,
    Ring,
    VariableSet,
    check_variable_set,
    intersect_all,
    minimalize,
)

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_LIMIT = 20


class NotSquarefreeError(ValueError):
    """Raised when an operation requires a squarefree monomial ideal."""

    def __init__(self, *, operation: str, ideal: MonomialIdeal) -> None:
        """Initialize the error.

        Args:
            operation: Operation that rejected the input.
            ideal: The offending ideal.
        """

        super().__init__(f"{operation} requires a squarefree monomial ideal; got generators {ideal.exponent_vectors()!r}.")
        self.operation = operation
        self.ideal = ideal


class ImproperIdealError(ValueError):
    """Raised when an operation requires a nonzero proper ideal."""

    def __init__(self, *, operation: str, ideal: MonomialIdeal) -> None:
        """Initialize the error.

        Args:
            operation: Operation that rejected the input.
            ideal: The zero or unit ideal that was passed.
        """

        kind = "zero" if ideal.is_zero else "unit"
        super().__init__(f"{operation} requires a nonzero proper ideal; got the {kind} ideal.")
        self.operation = operation
        self.ideal = ideal


class MixedIdealError(ValueError):
    """Raised when an operation requires an unmixed ideal."""

    def __init__(self, *, operation: str, sizes: tuple[int, ...]) -> None:
        """Initialize the error.

        Args:
            operation: Operation that rejected the input.
            sizes: Support sizes of the minimal primes (sorted).
        """

        super().__init__(f"{operation} requires an unmixed ideal; minimal primes have sizes {sizes!r}.")
        self.operation = operation
        self.sizes = sizes


@dataclass(frozen=True, slots=True)
class PrimeIdeal:
    """A monomial prime `⟨x_i : i ∈ support⟩`.

    Attributes:
        ring: Ambient ring.
        support: Nonempty set of 1-based variable indices.
    """

    ring: Ring
    support: VariableSet

    def __post_init__(self) -> None:
        if not self.support:
            raise ValueError("A monomial prime needs a nonempty support.")
        check_variable_set(self.ring, self.support)

    @property
    def sorted_support(self) -> tuple[int, ...]:
        return tuple(sorted(self.support))

    def as_ideal(self) -> MonomialIdeal:
        """Return the prime as a MonomialIdeal generated by its variables."""

        return minimalize(self.ring, (self.ring.variable(j) for j in self.support))

    def degree_in(self, u: Monomial) -> int:
        """Return the sum of `deg_{x_j}(u)` over the variables of this prime."""

        self.ring.check(u.ring)
        return sum(u.exponents[j - 1] for j in self.support)


@dataclass(frozen=True, slots=True)
class PrimaryDecomposition:
    """Irredundant decomposition of a squarefree ideal into monomial primes.

    Attributes:
        source: The decomposed ideal.
        primes: Minimal primes, sorted by their sorted supports.
    """

    source: MonomialIdeal
    primes: tuple[PrimeIdeal, ...]

    def intersection(self) -> MonomialIdeal:
        """Intersect the primes back into an ideal."""

        return intersect_all(self.source.ring, (p.as_ideal() for p in self.primes))

    def is_irredundant(self) -> bool:
        """True when no prime's support contains another's."""

        supports = [p.support for p in self.primes]
        return not any(a < b for a in supports for b in supports)

    def support_sizes(self) -> tuple[int, ...]:
        return tuple(sorted(len(p.support) for p in self.primes))

    def supports(self) -> tuple[tuple[int, ...], ...]:
        """Sorted supports, in decomposition order."""

        return tuple(p.sorted_support for p in self.primes)


def is_squarefree(ideal: MonomialIdeal) -> bool:
    """Return True when every generator exponent is at most 1 (vacuous for zero)."""

    return all(g.is_squarefree for g in ideal.generators)


def _require_squarefree_proper(operation: str, ideal: MonomialIdeal) -> None:
    if not is_squarefree(ideal):
        raise NotSquarefreeError(operation=operation, ideal=ideal)
    if not ideal.is_proper:
        raise ImproperIdealError(operation=operation, ideal=ideal)


def minimal_primes(ideal: MonomialIdeal, *, max_variables: int = DEFAULT_ENUMERATION_LIMIT) -> PrimaryDecomposition:
    """Return the minimal primes of a squarefree ideal.

    The supports of the minimal primes are the inclusion-minimal transversals
    of the generator supports. They are enumerated exhaustively by increasing
    size over subsets of the union of generator supports.

    Args:
        ideal: Squarefree, nonzero, proper monomial ideal.
        max_variables: Refuse inputs whose generators involve more variables.

    Returns:
        PrimaryDecomposition whose intersection equals `ideal`.

    Raises:
        NotSquarefreeError: For non-squarefree input.
        ImproperIdealError: For the zero or unit ideal.
    """

    _require_squarefree_proper("minimal_primes", ideal)
    edges = [sum(1 << (j - 1) for j in g.support) for g in ideal.generators]
    variables = sorted(set().union(*(g.support for g in ideal.generators)))
    if len(variables) > max_variables:
        raise ValueError(f"minimal_primes enumerates subsets of at most {max_variables} variables; got {len(variables)}.")

    found: list[int] = []
    for size in range(1, len(variables) + 1):
        for subset in combinations(variables, size):
            mask = sum(1 << (j - 1) for j in subset)
            if any(known & mask == known for known in found):
                continue
            if all(edge & mask for edge in edges):
                found.append(mask)

    primes = sorted(
        (PrimeIdeal(ring=ideal.ring, support=frozenset(j for j in variables if mask >> (j - 1) & 1)) for mask in found),
        key=lambda p: p.sorted_support,
    )
    logger.debug("minimal_primes: %d generators -> %d primes", len(edges), len(primes))
    return PrimaryDecomposition(source=ideal, primes=tuple(primes))


def prime_power(prime: PrimeIdeal, k: int) -> MonomialIdeal:
    """Return `p^k`: all monomials of degree k supported on the prime's variables."""

    if k < 1:
        raise ValueError(f"Prime powers require k >= 1, got {k}.")
    ring = prime.ring
    gens = []
    for choice in combinations_with_replacement(prime.sorted_support, k):
        exponents = [0] * ring.n
        for j in choice:
            exponents[j - 1] += 1
        gens.append(ring.monomial(exponents))
    return minimalize(ring, gens)


def in_prime_power(prime: PrimeIdeal, k: int, u: Monomial) -> bool:
    """Degree-sum membership test for `p^k` without materializing generators."""

    return prime.degree_in(u) >= k


def symbolic_power(ideal: MonomialIdeal, k: int, *, decomposition: PrimaryDecomposition | None = None) -> MonomialIdeal:
    """Return the k-th symbolic power `I^(k) = p_1^k ∩ ... ∩ p_r^k`.

    Args:
        ideal: Squarefree monomial ideal. The unit ideal maps to itself and the
            zero ideal maps to itself.
        k: Positive exponent.
        decomposition: Precomputed minimal primes of `ideal`, if available.

    Raises:
        NotSquarefreeError: For non-squarefree input.
    """

    if k < 1:
        raise ValueError(f"Symbolic powers require k >= 1, got {k}.")
    if not is_squarefree(ideal):
        raise NotSquarefreeError(operation="symbolic_power", ideal=ideal)
    if not ideal.is_proper:
        return ideal
    primes = (decomposition or minimal_primes(ideal)).primes
    return intersect_all(ideal.ring, (prime_power(p, k) for p in primes))


def symbolic_contains(decomposition: PrimaryDecomposition, k: int, u: Monomial) -> bool:
    """Membership in `I^(k)` by the degree-sum criterion over every minimal prime."""

    return all(in_prime_power(p, k, u) for p in decomposition.primes)


def height_unmixed(ideal: MonomialIdeal) -> tuple[int, bool]:
    """Return `(height, unmixed)` for a squarefree, nonzero, proper ideal.

    The height is the smallest support size among the minimal primes; the ideal
    is unmixed when every minimal prime has that size.
    """

    sizes = minimal_primes(ideal).support_sizes()
    return sizes[0], sizes[0] == sizes[-1]


def require_unmixed(ideal: MonomialIdeal, *, operation: str) -> int:
    """Return the height of an unmixed ideal or raise MixedIdealError."""

    sizes = minimal_primes(ideal).support_sizes()
    if sizes[0] != sizes[-1]:
        raise MixedIdealError(operation=operation, sizes=sizes)
    return sizes[0]


def symbolic_powers(ideal: MonomialIdeal, exponents: Iterable[int]) -> dict[int, MonomialIdeal]:
    """Compute several symbolic powers sharing one primary decomposition."""

    wanted = sorted(set(exponents))
    if not ideal.is_proper or not is_squarefree(ideal):
        return {k: symbolic_power(ideal, k) for k in wanted}
    decomposition = minimal_primes(ideal)
    return {k: symbolic_power(ideal, k, decomposition=decomposition) for k in wanted}
