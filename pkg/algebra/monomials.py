"""Exact arithmetic on monomials and monomial ideals.

Monomials are exponent vectors over a fixed polynomial ring `K[x_1, ..., x_n]`;
the coefficient field is never materialized. Every value in this module is
immutable and every operation is a pure function, so results can be shared
freely between threads.

Conventions:
- the zero ideal has no generators, the unit ideal is generated by `1`;
- generators are always the minimal antichain under divisibility, sorted
  lexicographically by exponent vector, so ideal equality is tuple equality.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import reduce
from itertools import product
from math import lcm, prod
from typing import Final

from sympy.polys.monomials import monomial_divides, monomial_gcd, monomial_lcm, monomial_ldiv, monomial_mul

Exponents = tuple[int, ...]
VariableSet = frozenset[int]

MAX_EXPONENT: Final[int] = 2**31 - 1


class RingMismatchError(ValueError):
    """Raised when two values from different rings are combined."""

    def __init__(self, *, expected: Ring, actual: Ring) -> None:
        """Initialize the error.

        Args:
            expected: Ring of the left-hand operand.
            actual: Ring of the offending operand.
        """

        super().__init__(f"Ring mismatch: expected {expected.describe()}, got {actual.describe()}.")
        self.expected = expected
        self.actual = actual


class ExponentOverflowError(ValueError):
    """Raised when an exponent would leave the checked machine-width range."""

    def __init__(self, *, exponents: Sequence[int]) -> None:
        """Initialize the error.

        Args:
            exponents: The exponent vector that overflowed.
        """

        super().__init__(f"Exponent overflow (limit {MAX_EXPONENT}): {tuple(exponents)!r}.")
        self.exponents = tuple(exponents)


class ZeroIdealError(ValueError):
    """Raised when an operation is undefined on the zero ideal."""

    def __init__(self, *, operation: str) -> None:
        """Initialize the error.

        Args:
            operation: Name of the operation that rejected the zero ideal.
        """

        super().__init__(f"{operation} is undefined for the zero ideal.")
        self.operation = operation


@dataclass(frozen=True, slots=True)
class Ring:
    """The polynomial ring `K[x_1, ..., x_n]`, reduced to its variable names.

    Attributes:
        n: Number of variables (>= 1).
        names: Distinct variable names, one per variable.
    """

    n: int
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"A ring needs at least one variable, got n={self.n}.")
        if len(self.names) != self.n:
            raise ValueError(f"Expected {self.n} variable names, got {len(self.names)}.")
        if len(set(self.names)) != self.n:
            raise ValueError(f"Variable names must be unique: {self.names!r}.")

    @classmethod
    def standard(cls, n: int) -> Ring:
        """Return the ring with variables named `x1, ..., xn`."""

        return cls(n=n, names=tuple(f"x{index}" for index in range(1, n + 1)))

    def describe(self) -> str:
        """Return a short human-readable description (e.g. `K[x1,x2]`)."""

        return f"K[{','.join(self.names)}]"

    def check(self, other: Ring) -> None:
        """Raise RingMismatchError unless `other` is this ring."""

        if other != self:
            raise RingMismatchError(expected=self, actual=other)

    def one(self) -> Monomial:
        """Return the monomial `1`."""

        return Monomial(ring=self, exponents=(0,) * self.n)

    def variable(self, index: int) -> Monomial:
        """Return the variable `x_index` (1-based)."""

        if not 1 <= index <= self.n:
            raise ValueError(f"Variable index {index} is outside 1..{self.n}.")
        return Monomial(ring=self, exponents=tuple(int(j == index) for j in range(1, self.n + 1)))

    def monomial(self, exponents: Iterable[int]) -> Monomial:
        """Build a monomial of this ring from an exponent vector."""

        return Monomial(ring=self, exponents=tuple(int(e) for e in exponents))

    def product_of(self, indices: Iterable[int]) -> Monomial:
        """Return the squarefree monomial `prod_{i in indices} x_i`."""

        members = check_variable_set(self, indices)
        return Monomial(ring=self, exponents=tuple(int(j in members) for j in range(1, self.n + 1)))

    def all_variables(self) -> Monomial:
        """Return `x_1 * ... * x_n`."""

        return Monomial(ring=self, exponents=(1,) * self.n)


def check_variable_set(ring: Ring, members: Iterable[int]) -> VariableSet:
    """Validate 1-based variable indices against a ring.

    Args:
        ring: Ring the indices refer to.
        members: Candidate indices.

    Returns:
        The indices as a frozenset.

    Raises:
        ValueError: When an index lies outside `1..n`.
    """

    result = frozenset(int(m) for m in members)
    bad = sorted(m for m in result if not 1 <= m <= ring.n)
    if bad:
        raise ValueError(f"Variable indices {bad} are outside 1..{ring.n}.")
    return result


@dataclass(frozen=True, slots=True)
class Monomial:
    """A monomial `x^a`, stored as its exponent vector.

    Attributes:
        ring: Ring the monomial lives in.
        exponents: Nonnegative exponent per variable; all zeros is `1`.
    """

    ring: Ring
    exponents: Exponents

    def __post_init__(self) -> None:
        if len(self.exponents) != self.ring.n:
            raise ValueError(f"Expected {self.ring.n} exponents, got {len(self.exponents)}.")
        for e in self.exponents:
            if e < 0:
                raise ValueError(f"Exponents must be nonnegative: {self.exponents!r}.")
            if e > MAX_EXPONENT:
                raise ExponentOverflowError(exponents=self.exponents)

    @property
    def degree(self) -> int:
        """Total degree."""

        return sum(self.exponents)

    @property
    def support(self) -> VariableSet:
        """1-based indices of the variables with positive exponent."""

        return frozenset(j for j, e in enumerate(self.exponents, start=1) if e)

    @property
    def is_one(self) -> bool:
        return not any(self.exponents)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def divides(self, other: Monomial) -> bool:
        """Return True when this monomial divides `other`."""

        return divides(self, other)

    def __mul__(self, other: Monomial) -> Monomial:
        self.ring.check(other.ring)
        return Monomial(ring=self.ring, exponents=monomial_mul(self.exponents, other.exponents))

    def __pow__(self, k: int) -> Monomial:
        if k < 0:
            raise ValueError(f"Negative powers are not monomials (k={k}).")
        return Monomial(ring=self.ring, exponents=tuple(e * k for e in self.exponents))

    def quotient(self, divisor: Monomial) -> Monomial:
        """Return `self / divisor`; the divisor must divide this monomial."""

        self.ring.check(divisor.ring)
        if not monomial_divides(divisor.exponents, self.exponents):
            raise ValueError(f"{divisor.exponents!r} does not divide {self.exponents!r}.")
        return Monomial(ring=self.ring, exponents=monomial_ldiv(self.exponents, divisor.exponents))

    def squarefree_part(self) -> Monomial:
        """Return the monomial with every positive exponent clamped to 1."""

        return Monomial(ring=self.ring, exponents=tuple(min(e, 1) for e in self.exponents))


def divides(a: Monomial, b: Monomial) -> bool:
    """Return True iff `a | b`, i.e. `a_i <= b_i` for every variable.

    Raises:
        RingMismatchError: When the monomials live in different rings.
    """

    a.ring.check(b.ring)
    return monomial_divides(a.exponents, b.exponents)


def gcd_lcm(a: Monomial, b: Monomial) -> tuple[Monomial, Monomial]:
    """Return `(gcd(a, b), lcm(a, b))` as componentwise min and max.

    Raises:
        RingMismatchError: When the monomials live in different rings.
    """

    a.ring.check(b.ring)
    return (
        Monomial(ring=a.ring, exponents=monomial_gcd(a.exponents, b.exponents)),
        Monomial(ring=a.ring, exponents=monomial_lcm(a.exponents, b.exponents)),
    )


@dataclass(frozen=True, slots=True)
class MonomialIdeal:
    """A monomial ideal described by its minimal monomial generators.

    Build instances through `minimalize` (or the `zero`/`unit`/`from_exponents`
    helpers); the constructor only accepts canonical generator tuples.

    Attributes:
        ring: Ambient ring.
        generators: Minimal generators, sorted lexicographically by exponents.
    """

    ring: Ring
    generators: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        for g in self.generators:
            self.ring.check(g.ring)
        vectors = [g.exponents for g in self.generators]
        if vectors != sorted(set(vectors)):
            raise ValueError("Generators must be distinct and sorted lexicographically; use minimalize().")
        for i, g in enumerate(vectors):
            for j, h in enumerate(vectors):
                if i != j and monomial_divides(g, h):
                    raise ValueError(f"Generators are not minimal: {g!r} divides {h!r}.")

    @classmethod
    def zero(cls, ring: Ring) -> MonomialIdeal:
        """Return the zero ideal."""

        return cls(ring=ring, generators=())

    @classmethod
    def unit(cls, ring: Ring) -> MonomialIdeal:
        """Return the unit ideal `S`."""

        return cls(ring=ring, generators=(ring.one(),))

    @classmethod
    def from_exponents(cls, ring: Ring, vectors: Iterable[Iterable[int]]) -> MonomialIdeal:
        """Return the ideal generated by the given exponent vectors (minimalized)."""

        return minimalize(ring, (ring.monomial(v) for v in vectors))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_one

    @property
    def is_proper(self) -> bool:
        """True when the ideal is neither zero nor the unit ideal."""

        return not self.is_zero and not self.is_unit

    def exponent_vectors(self) -> tuple[Exponents, ...]:
        """Return the generator exponent vectors in canonical order."""

        return tuple(g.exponents for g in self.generators)

    def max_exponents(self) -> Exponents:
        """Componentwise max over generator exponents (zeros for the zero ideal)."""

        return exponent_bound(self.ring, self.exponent_vectors())

    def contains(self, u: Monomial) -> bool:
        """Return True when `u` lies in this ideal."""

        return contains(self, u)

    def contains_exponents(self, vector: Exponents) -> bool:
        """Membership test on a raw exponent vector (no ring check)."""

        return any(monomial_divides(g.exponents, vector) for g in self.generators)


def contains(ideal: MonomialIdeal, u: Monomial) -> bool:
    """Return True iff some minimal generator of `ideal` divides `u`."""

    ideal.ring.check(u.ring)
    return ideal.contains_exponents(u.exponents)


def minimalize(ring: Ring, gens: Iterable[Monomial]) -> MonomialIdeal:
    """Reduce a finite set of monomials to the minimal generators of its ideal.

    Args:
        ring: Ambient ring (needed to represent the zero ideal).
        gens: Any finite family of monomials; order and repetitions are ignored.

    Returns:
        MonomialIdeal whose generators form a lexicographically sorted antichain.
    """

    vectors: set[Exponents] = set()
    for g in gens:
        ring.check(g.ring)
        vectors.add(g.exponents)
    return _ideal_from_vectors(ring, vectors)


def _ideal_from_vectors(ring: Ring, vectors: Iterable[Exponents]) -> MonomialIdeal:
    """Minimalize raw exponent vectors and wrap them as an ideal."""

    kept: list[Exponents] = []
    for vector in sorted(set(vectors), key=lambda v: (sum(v), v)):
        if not any(monomial_divides(k, vector) for k in kept):
            kept.append(vector)
    kept.sort()
    return MonomialIdeal(ring=ring, generators=tuple(Monomial(ring=ring, exponents=v) for v in kept))


def intersect(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    """Return the minimal generators of `left ∩ right`.

    The intersection of monomial ideals is generated by the pairwise lcms of
    their generators.
    """

    left.ring.check(right.ring)
    return _ideal_from_vectors(
        left.ring,
        (monomial_lcm(g.exponents, h.exponents) for g in left.generators for h in right.generators),
    )


def intersect_all(ring: Ring, ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    """Left fold of `intersect`, minimalizing after each step.

    The intersection of an empty family is the unit ideal.
    """

    return reduce(intersect, ideals, MonomialIdeal.unit(ring))


def product_ideal(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    """Return the minimal generators of the product `left * right`."""

    left.ring.check(right.ring)
    return _ideal_from_vectors(
        left.ring,
        (monomial_mul(g.exponents, h.exponents) for g in left.generators for h in right.generators),
    )


def product_power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """Return the ordinary power `I^k` for `k >= 1`."""

    if k < 1:
        raise ValueError(f"Ideal powers require k >= 1, got {k}.")
    result = ideal
    for _ in range(k - 1):
        result = product_ideal(result, ideal)
    return result


def colon(ideal: MonomialIdeal, v: Monomial) -> MonomialIdeal:
    """Return `(I : v)`, generated by `g / gcd(g, v)` over the generators of I."""

    ideal.ring.check(v.ring)
    return _ideal_from_vectors(
        ideal.ring,
        (monomial_ldiv(g.exponents, monomial_gcd(g.exponents, v.exponents)) for g in ideal.generators),
    )


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    """Return `√I`, generated by the squarefree parts of the generators of I."""

    return minimalize(ideal.ring, (g.squarefree_part() for g in ideal.generators))


def radical_power_exponent(ideal: MonomialIdeal) -> int:
    """Return `k_I`: the lcm over generators `u_i` of `√I` of the least `k_i` with `u_i^{k_i} ∈ I`.

    With this exponent, `u ∈ √I` holds iff `u^{k_I} ∈ I` for every monomial u.

    Raises:
        ZeroIdealError: For the zero ideal.
    """

    if ideal.is_zero:
        raise ZeroIdealError(operation="radical_power_exponent")
    ceiling = max(max(ideal.max_exponents()), 1)
    exponents = []
    for u in radical(ideal).generators:
        k = next(k for k in range(1, ceiling + 1) if contains(ideal, u**k))
        exponents.append(k)
    return lcm(*exponents)


def is_subideal(small: MonomialIdeal, big: MonomialIdeal) -> bool:
    """Return True when every generator of `small` lies in `big`."""

    small.ring.check(big.ring)
    return all(big.contains_exponents(g.exponents) for g in small.generators)


def exponent_bound(ring: Ring, vectors: Iterable[Exponents]) -> Exponents:
    """Componentwise max of exponent vectors, zeros for an empty family."""

    bound = [0] * ring.n
    for vector in vectors:
        for j, e in enumerate(vector):
            if e > bound[j]:
                bound[j] = e
    return tuple(bound)


def shift_bound(bound: Exponents, margin: int) -> Exponents:
    """Add `margin` to every coordinate of a box bound."""

    return tuple(b + margin for b in bound)


def join_bounds(*bounds: Exponents) -> Exponents:
    """Componentwise max of several box bounds of equal length."""

    return tuple(max(column) for column in zip(*bounds, strict=True))


def iter_box(bound: Exponents) -> Iterator[Exponents]:
    """Yield every exponent vector in `[0, bound]` in lexicographic order."""

    return product(*(range(b + 1) for b in bound))


def box_volume(bound: Exponents) -> int:
    """Number of exponent vectors in the box `[0, bound]`."""

    return prod(b + 1 for b in bound)
