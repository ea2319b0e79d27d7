"""Transfer of Stanley decompositions along monomial maps.

Given quotients `I1/I2` (target) and `J1/J2` (source) and a monomial map φ with

  (i)   u ∈ I1  iff  φ(u) ∈ J1,
  (ii)  u ∈ I2  iff  φ(u) ∈ J2,
  (iii) v ∈ uK[Z]  iff  φ(v) ∈ φ(u)K[Z],

any Stanley decomposition `⊕ t_i K[Z_i]` of the source yields one of the target:
group the monomials u of `I1 ∖ I2` by the source space containing φ(u), take the
gcd `u_i` of each group and emit `u_i K[Z_i]`. The result has Stanley depth at
least that of the input.

φ is drawn from a closed catalog (power, multiply, identity) for which (iii)
holds by construction. Conditions (i) and (ii) are checked on every monomial
the transfer enumerates.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import lcm
from typing import Literal

from .monomials import (
    Exponents,
    Monomial,
    MonomialIdeal,
    ZeroIdealError,
    colon,
    iter_box,
    join_bounds,
    radical,
    radical_power_exponent,
    shift_bound,
)
from .stanley import (
    InvalidDecompositionError,
    QuotientPair,
    StanleyDecomposition,
    StanleySpace,
    verify_decomposition,
)
from .symbolic import NotSquarefreeError, is_squarefree, symbolic_power

logger = logging.getLogger(__name__)

PhiKind = Literal["power", "multiply", "identity"]
Mode = Literal["ideal", "quotient"]

DEFAULT_MAX_DOUBLINGS = 3


class MalformedInstanceError(ValueError):
    """Raised when conditions (i)/(ii) fail or φ(u) is not covered exactly once."""

    def __init__(self, *, reason: str, witness: Monomial) -> None:
        """Initialize the error.

        Args:
            reason: Which check failed.
            witness: The target-side monomial u exposing the failure.
        """

        super().__init__(f"Malformed transfer instance: {reason} at u={list(witness.exponents)}.")
        self.reason = reason
        self.witness = witness


class TransferError(ValueError):
    """Raised when the transfer cannot produce a verified decomposition."""


@dataclass(frozen=True, slots=True)
class PhiMap:
    """A catalog monomial map.

    Attributes:
        kind: `power` (u ↦ u^k), `multiply` (u ↦ v·u) or `identity`.
        k: Exponent for power maps.
        v: Multiplier for multiply maps.
    """

    kind: PhiKind
    k: int = 1
    v: Monomial | None = None

    def __post_init__(self) -> None:
        if self.kind == "power" and self.k < 1:
            raise ValueError(f"Power maps need k >= 1, got {self.k}.")
        if self.kind == "multiply" and self.v is None:
            raise ValueError("Multiply maps need a monomial v.")

    @classmethod
    def power(cls, k: int) -> PhiMap:
        return cls(kind="power", k=k)

    @classmethod
    def multiply(cls, v: Monomial) -> PhiMap:
        return cls(kind="multiply", v=v)

    @classmethod
    def identity(cls) -> PhiMap:
        return cls(kind="identity")

    def apply(self, u: Monomial) -> Monomial:
        """Return φ(u)."""

        if self.kind == "power":
            return u**self.k
        if self.kind == "multiply":
            assert self.v is not None
            return self.v * u
        return u

    def apply_exponents(self, vector: Exponents) -> Exponents:
        """Return φ on a raw exponent vector."""

        if self.kind == "power":
            return tuple(e * self.k for e in vector)
        if self.kind == "multiply":
            assert self.v is not None
            return tuple(e + f for e, f in zip(vector, self.v.exponents))
        return vector

    def pull_back_bound(self, bound: Exponents) -> Exponents:
        """Map a source-side box bound back to the target side."""

        if self.kind == "power":
            return tuple(-(-b // self.k) for b in bound)
        if self.kind == "multiply":
            assert self.v is not None
            return tuple(max(b - f, 0) for b, f in zip(bound, self.v.exponents))
        return bound

    def describe(self) -> str:
        if self.kind == "power":
            return f"u -> u^{self.k}"
        if self.kind == "multiply":
            assert self.v is not None
            return f"u -> {list(self.v.exponents)}*u"
        return "u -> u"


@dataclass(frozen=True, slots=True)
class TransferInstance:
    """A target quotient, a source quotient and the map between them.

    Attributes:
        source: `(J1, J2)`, the quotient whose decomposition is given.
        target: `(I1, I2)`, the quotient to decompose.
        phi: Catalog map from target monomials to source monomials.
    """

    source: QuotientPair
    target: QuotientPair
    phi: PhiMap

    def __post_init__(self) -> None:
        self.source.ring.check(self.target.ring)
        if self.phi.v is not None:
            self.source.ring.check(self.phi.v.ring)


@dataclass(frozen=True, slots=True)
class TransferLimits:
    """Limits for the box-growth loop of `transfer`.

    Args:
        max_doublings: How many times the working box may be doubled.
    """

    max_doublings: int = DEFAULT_MAX_DOUBLINGS


@dataclass(frozen=True, slots=True)
class TransferReport:
    """Result of a transfer run.

    Attributes:
        decomposition: Verified decomposition of the target.
        input_sdepth: sdepth of the given source decomposition.
        output_sdepth: sdepth of the produced target decomposition.
        bound: Final working box bound.
        verified: Always True for a returned report.
    """

    decomposition: StanleyDecomposition
    input_sdepth: int
    output_sdepth: int
    bound: Exponents
    verified: bool = True

    def as_dict(self) -> dict[str, object]:
        return {
            "input_sdepth": self.input_sdepth,
            "output_sdepth": self.output_sdepth,
            "verified": self.verified,
        }


def make_identity_instance(quotient: QuotientPair) -> TransferInstance:
    """Return the instance with source = target and φ = identity."""

    return TransferInstance(source=quotient, target=quotient, phi=PhiMap.identity())


def _symbolic_pair(ideal: MonomialIdeal, exponent: int, mode: Mode) -> QuotientPair:
    power = symbolic_power(ideal, exponent)
    if mode == "ideal":
        return QuotientPair.of_ideal(power)
    return QuotientPair.of_quotient_ring(power)


def make_symbolic_instance(ideal: MonomialIdeal, s: int, k: int, mode: Mode) -> TransferInstance:
    """Instance comparing `I^(ks)` (source) with `I^(s)` (target) via φ(u) = u^k.

    `mode="ideal"` uses the pairs `(I^(m), 0)`; `mode="quotient"` uses `(S, I^(m))`.

    Raises:
        NotSquarefreeError: For non-squarefree input.
    """

    if not is_squarefree(ideal):
        raise NotSquarefreeError(operation="make_symbolic_instance", ideal=ideal)
    if s < 1 or k < 1:
        raise ValueError(f"s and k must be positive, got s={s}, k={k}.")
    return TransferInstance(
        source=_symbolic_pair(ideal, k * s, mode),
        target=_symbolic_pair(ideal, s, mode),
        phi=PhiMap.power(k),
    )


def make_symbolic_pair_instance(numerator: MonomialIdeal, denominator: MonomialIdeal, s: int, k: int) -> TransferInstance:
    """Instance comparing `I^(ks)/J^(ks)` with `I^(s)/J^(s)` for squarefree `J ⊆ I`.

    Raises:
        NotSquarefreeError: For non-squarefree input.
        QuotientPairError: When `J ⊄ I`.
    """

    for ideal in (numerator, denominator):
        if not is_squarefree(ideal):
            raise NotSquarefreeError(operation="make_symbolic_pair_instance", ideal=ideal)
    QuotientPair(numerator=numerator, denominator=denominator)
    return TransferInstance(
        source=QuotientPair(
            numerator=symbolic_power(numerator, k * s), denominator=symbolic_power(denominator, k * s)
        ),
        target=QuotientPair(numerator=symbolic_power(numerator, s), denominator=symbolic_power(denominator, s)),
        phi=PhiMap.power(k),
    )


def make_colon_instance(numerator: MonomialIdeal, denominator: MonomialIdeal, v: Monomial) -> TransferInstance:
    """Instance comparing `I/J` (source) with `(I:v)/(J:v)` (target) via φ(u) = v·u.

    Raises:
        QuotientPairError: When `J ⊄ I`.
    """

    source = QuotientPair(numerator=numerator, denominator=denominator)
    target = QuotientPair(numerator=colon(numerator, v), denominator=colon(denominator, v))
    return TransferInstance(source=source, target=target, phi=PhiMap.multiply(v))


def make_radical_instance(numerator: MonomialIdeal, denominator: MonomialIdeal) -> TransferInstance:
    """Instance comparing `I/J` (source) with `√I/√J` (target) via φ(u) = u^k.

    `k = lcm(k_I, k_J)` with `k_I` from `radical_power_exponent`; the zero ideal
    contributes `k_J = 1` (no power of a monomial lies in it, nor in its radical).

    Raises:
        ZeroIdealError: When I is the zero ideal.
        QuotientPairError: When `J ⊄ I`.
    """

    if numerator.is_zero:
        raise ZeroIdealError(operation="make_radical_instance")
    source = QuotientPair(numerator=numerator, denominator=denominator)
    k_denominator = 1 if denominator.is_zero else radical_power_exponent(denominator)
    k = lcm(radical_power_exponent(numerator), k_denominator)
    target = QuotientPair(numerator=radical(numerator), denominator=radical(denominator))
    return TransferInstance(source=source, target=target, phi=PhiMap.power(k))


def check_conditions(instance: TransferInstance, bound: Exponents) -> Monomial | None:
    """Check conditions (i) and (ii) on the box `[0, bound]`.

    Returns:
        The first violating target monomial in lexicographic order, or None.
    """

    ring = instance.target.ring
    target, source, phi = instance.target, instance.source, instance.phi
    for vector in iter_box(bound):
        image = phi.apply_exponents(vector)
        if target.numerator.contains_exponents(vector) != source.numerator.contains_exponents(image):
            return ring.monomial(vector)
        if target.denominator.contains_exponents(vector) != source.denominator.contains_exponents(image):
            return ring.monomial(vector)
    return None


def initial_bound(instance: TransferInstance, decomposition: StanleyDecomposition) -> Exponents:
    """Working box: target generators plus the source box pulled back through φ, with a +1 margin."""

    source_bound = decomposition.verification_bound(margin=1)
    target_bound = shift_bound(instance.target.bound(), 1)
    return join_bounds(target_bound, instance.phi.pull_back_bound(source_bound))


def _group_minima(
    instance: TransferInstance, decomposition: StanleyDecomposition, bound: Exponents
) -> dict[int, list[int]]:
    """Group target monomials by the source space containing their image; keep per-group minima."""

    ring = instance.target.ring
    target, source, phi = instance.target, instance.source, instance.phi
    spaces = decomposition.spaces
    minima: dict[int, list[int]] = {}
    for vector in iter_box(bound):
        image = phi.apply_exponents(vector)
        in_target_num = target.numerator.contains_exponents(vector)
        if in_target_num != source.numerator.contains_exponents(image):
            raise MalformedInstanceError(reason="condition (i) fails", witness=ring.monomial(vector))
        in_target_den = target.denominator.contains_exponents(vector)
        if in_target_den != source.denominator.contains_exponents(image):
            raise MalformedInstanceError(reason="condition (ii) fails", witness=ring.monomial(vector))
        if not in_target_num or in_target_den:
            continue
        hits = [i for i, space in enumerate(spaces) if space.contains_exponents(image)]
        if len(hits) != 1:
            raise MalformedInstanceError(
                reason=f"image lies in {len(hits)} source spaces", witness=ring.monomial(vector)
            )
        current = minima.get(hits[0])
        if current is None:
            minima[hits[0]] = list(vector)
        else:
            for j, e in enumerate(vector):
                if e < current[j]:
                    current[j] = e
    return minima


def transfer(
    instance: TransferInstance,
    decomposition: StanleyDecomposition,
    *,
    limits: TransferLimits | None = None,
) -> StanleyDecomposition:
    """Build a Stanley decomposition of the target from one of the source.

    Raises:
        InvalidDecompositionError: When `decomposition` does not verify against the source.
        MalformedInstanceError: When conditions (i)/(ii) fail on the working box.
        TransferError: When the box-growth limit is exceeded or a proof claim fails.
    """

    return run_transfer(instance, decomposition, limits=limits).decomposition


def run_transfer(
    instance: TransferInstance,
    decomposition: StanleyDecomposition,
    *,
    limits: TransferLimits | None = None,
) -> TransferReport:
    """Run `transfer` and report input/output Stanley depths.

    See `transfer` for the raised errors.
    """

    limits = limits or TransferLimits()
    if decomposition.quotient != instance.source:
        raise TransferError("The decomposition is not attached to the instance's source quotient.")
    checked = verify_decomposition(decomposition)
    if not checked.is_valid:
        raise InvalidDecompositionError(result=checked)

    ring = instance.target.ring
    bound = initial_bound(instance, decomposition)
    for attempt in range(limits.max_doublings + 1):
        minima = _group_minima(instance, decomposition, bound)
        spaces: list[StanleySpace] = []
        for i in sorted(minima):
            root = ring.monomial(minima[i])
            source_space = decomposition.spaces[i]
            if not source_space.contains_exponents(instance.phi.apply_exponents(root.exponents)):
                raise TransferError(f"Claim failed: φ(u_{i}) is not in source space {i}.")
            spaces.append(StanleySpace(root=root, vars=source_space.vars))
        output = StanleyDecomposition(quotient=instance.target, spaces=tuple(spaces))
        result = verify_decomposition(output)
        if result.is_valid:
            if output.sdepth < decomposition.sdepth and spaces:
                raise TransferError(
                    f"Output sdepth {output.sdepth} is below input sdepth {decomposition.sdepth}."
                )
            logger.debug("transfer: %d spaces on box %s after %d doublings", len(spaces), bound, attempt)
            return TransferReport(
                decomposition=output,
                input_sdepth=decomposition.sdepth,
                output_sdepth=output.sdepth,
                bound=bound,
            )
        logger.debug("transfer: box %s insufficient (%s); doubling", bound, result.describe())
        bound = tuple(max(2 * b, 1) for b in bound)
    raise TransferError(f"No verified decomposition after {limits.max_doublings} box doublings (last box {bound}).")
