"""Exact Stanley depth of monomial quotients via interval partitions.

`I/J` is reduced to its characteristic poset: the exponent vectors `c` with
`0 <= c <= g` and `x^c ∈ I ∖ J`, where g is the componentwise max of the
generator exponents of I and J. The Stanley depth of `I/J` is the largest value
of a partition of this poset into intervals `[a, b]`, where an interval's value
is the number of coordinates with `b_j = g_j`.

Two independent procedures are provided:
- `sdepth_decision` / `sdepth_exact`: depth-first search with memoized failures;
- `sdepth_naive`: brute-force enumeration of set partitions, used as an oracle
  for small posets.

Both refuse (`SolverRefusal`) instead of running past their configured limits.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import cache
from itertools import product

from .monomials import Exponents, box_volume, iter_box
from .stanley import QuotientPair, StanleyDecomposition, StanleySpace

logger = logging.getLogger(__name__)

DEFAULT_MAX_POSET_POINTS = 4096
DEFAULT_TIME_BUDGET_SECS = 60.0
NAIVE_POINT_LIMIT = 16
MEMO_POINT_LIMIT = 512
_DEADLINE_CHECK_EVERY = 1024


class SolverRefusal(ValueError):
    """Raised when a computation would exceed a configured limit."""

    def __init__(self, *, reason: str, detail: str) -> None:
        """Initialize the refusal.

        Args:
            reason: `poset_limit` or `time_budget`.
            detail: Human-readable description of the exceeded limit.
        """

        super().__init__(f"Solver refused ({reason}): {detail}")
        self.reason = reason
        self.detail = detail


@dataclass(frozen=True, slots=True)
class SolverLimits:
    """Hard limits for the exact solver.

    Args:
        max_poset_points: Largest characteristic poset the solver accepts.
        time_budget_secs: Wall-clock budget per decision call.
    """

    max_poset_points: int = DEFAULT_MAX_POSET_POINTS
    time_budget_secs: float = DEFAULT_TIME_BUDGET_SECS


@dataclass(frozen=True, slots=True)
class CharacteristicPoset:
    """Exponent vectors of `I ∖ J` inside the box `[0, g]`.

    Attributes:
        quotient: The module the poset represents.
        bound: The box bound g.
        points: Points in lexicographic order.
    """

    quotient: QuotientPair
    bound: Exponents
    points: tuple[Exponents, ...]

    @property
    def is_empty(self) -> bool:
        return not self.points

    @property
    def size(self) -> int:
        return len(self.points)


@dataclass(frozen=True, slots=True)
class IntervalPartition:
    """A partition of a characteristic poset into intervals `[a, b]`.

    Attributes:
        bound: The poset's box bound g.
        intervals: `(a, b)` pairs with `a <= b` componentwise.
    """

    bound: Exponents
    intervals: tuple[tuple[Exponents, Exponents], ...]

    @property
    def value(self) -> int:
        """Min over intervals of `|{j : b_j = g_j}|`, 0 for no intervals."""

        return min((_full_count(top, self.bound) for _, top in self.intervals), default=0)


@dataclass(frozen=True, slots=True)
class SdepthResult:
    """Exact Stanley depth together with its certificate.

    Attributes:
        value: sdepth of the quotient.
        poset: The characteristic poset that was searched.
        partition: An optimal interval partition.
        witness: Stanley decomposition derived from the partition.
    """

    value: int
    poset: CharacteristicPoset
    partition: IntervalPartition
    witness: StanleyDecomposition = field(compare=False)


def _full_count(top: Exponents, bound: Exponents) -> int:
    return sum(1 for b, g in zip(top, bound) if b == g)


def _dominates(top: Exponents, bottom: Exponents) -> bool:
    return all(b >= a for a, b in zip(bottom, top))


def build_poset(quotient: QuotientPair, *, limits: SolverLimits | None = None) -> CharacteristicPoset:
    """Enumerate the characteristic poset of `I/J`.

    An empty point set signals the zero module.

    Raises:
        SolverRefusal: When the poset has more points than allowed.
    """

    limits = limits or SolverLimits()
    bound = quotient.bound()
    points: list[Exponents] = []
    for vector in iter_box(bound):
        if quotient.contains_exponents(vector):
            points.append(vector)
            if len(points) > limits.max_poset_points:
                raise SolverRefusal(
                    reason="poset_limit",
                    detail=f"more than {limits.max_poset_points} points (box volume {box_volume(bound)})",
                )
    logger.debug("build_poset: bound=%s points=%d", bound, len(points))
    return CharacteristicPoset(quotient=quotient, bound=bound, points=tuple(points))


class _IntervalSearch:
    """Depth-first search for an interval partition with value >= d."""

    def __init__(self, poset: CharacteristicPoset, d: int, limits: SolverLimits) -> None:
        self.poset = poset
        self.d = d
        self.points = poset.points
        self.bound = poset.bound
        self.index = {point: i for i, point in enumerate(self.points)}
        self.full_mask = (1 << len(self.points)) - 1
        self.branches: dict[int, tuple[tuple[int, int], ...]] = {}
        self.failed: set[int] = set()
        self.memoize = len(self.points) <= MEMO_POINT_LIMIT
        self.deadline = time.monotonic() + limits.time_budget_secs
        self.budget = limits.time_budget_secs
        self.steps = 0

    def _interval_mask(self, bottom: Exponents, top: Exponents) -> int:
        # [a, b] lies inside the poset whenever a and b do: I is up-closed and
        # the complement of J is down-closed.
        mask = 0
        for vector in product(*(range(a, b + 1) for a, b in zip(bottom, top))):
            mask |= 1 << self.index[vector]
        return mask

    def _branches_for(self, i: int) -> tuple[tuple[int, int], ...]:
        cached = self.branches.get(i)
        if cached is not None:
            return cached
        bottom = self.points[i]
        tops = [
            j
            for j in range(i, len(self.points))
            if _full_count(self.points[j], self.bound) >= self.d and _dominates(self.points[j], bottom)
        ]
        # Largest intervals first; the order only affects speed.
        tops.sort(key=lambda j: (-(sum(self.points[j]) - sum(bottom)), self.points[j]))
        result = tuple((j, self._interval_mask(bottom, self.points[j])) for j in tops)
        self.branches[i] = result
        return result

    def _tick(self) -> None:
        self.steps += 1
        if self.steps % _DEADLINE_CHECK_EVERY == 1 and time.monotonic() >= self.deadline:
            raise SolverRefusal(
                reason="time_budget",
                detail=f"decision d={self.d} exceeded {self.budget:g}s on {len(self.points)} points",
            )

    def run(self) -> IntervalPartition | None:
        """Return a partition with value >= d, or None when none exists."""

        if not self.points:
            return IntervalPartition(bound=self.bound, intervals=())

        # Each frame: (covered mask, bottom index, branch iterator).
        chosen: list[tuple[int, int]] = []
        stack: list[tuple[int, int, Iterator[tuple[int, int]]]] = []

        def push(covered: int) -> None:
            bottom = (~covered & (covered + 1)).bit_length() - 1
            stack.append((covered, bottom, iter(self._branches_for(bottom))))

        push(0)
        while stack:
            self._tick()
            covered, bottom, branches = stack[-1]
            advanced = False
            for top, mask in branches:
                if mask & covered:
                    continue
                nxt = covered | mask
                if nxt in self.failed:
                    continue
                chosen.append((bottom, top))
                if nxt == self.full_mask:
                    return IntervalPartition(
                        bound=self.bound,
                        intervals=tuple((self.points[a], self.points[b]) for a, b in chosen),
                    )
                push(nxt)
                advanced = True
                break
            if advanced:
                continue
            stack.pop()
            if self.memoize:
                self.failed.add(covered)
            if chosen:
                chosen.pop()
        return None


def _decide(poset: CharacteristicPoset, d: int, limits: SolverLimits) -> IntervalPartition | None:
    partition = _IntervalSearch(poset, d, limits).run()
    logger.debug("decision d=%d on %d points: %s", d, poset.size, "yes" if partition else "no")
    return partition


def sdepth_decision(quotient: QuotientPair, d: int, *, limits: SolverLimits | None = None) -> bool:
    """Return True iff some interval partition of the poset has value >= d.

    Raises:
        ValueError: When d is outside `0..n`.
        SolverRefusal: When a limit is exceeded.
    """

    if not 0 <= d <= quotient.ring.n:
        raise ValueError(f"d must lie in 0..{quotient.ring.n}, got {d}.")
    limits = limits or SolverLimits()
    poset = build_poset(quotient, limits=limits)
    if d == 0:
        return True
    return _decide(poset, d, limits) is not None


def _singletons(poset: CharacteristicPoset) -> IntervalPartition:
    return IntervalPartition(bound=poset.bound, intervals=tuple((p, p) for p in poset.points))


def sdepth_exact(quotient: QuotientPair, *, limits: SolverLimits | None = None) -> SdepthResult:
    """Compute `sdepth(I/J)` exactly, with a verified-by-construction witness.

    Decision levels are tried upward from 1; the first infeasible level stops the
    search, and the last feasible partition becomes the witness.

    Raises:
        SolverRefusal: When the poset or a decision call exceeds its limit.
    """

    limits = limits or SolverLimits()
    poset = build_poset(quotient, limits=limits)
    best = _singletons(poset)
    if not poset.is_empty:
        for d in range(1, quotient.ring.n + 1):
            partition = _decide(poset, d, limits)
            if partition is None:
                break
            best = partition
    value = best.value
    logger.debug("sdepth_exact: %d points -> %d", poset.size, value)
    return SdepthResult(value=value, poset=poset, partition=best, witness=partition_to_decomposition(poset, best))


def partition_to_decomposition(poset: CharacteristicPoset, partition: IntervalPartition) -> StanleyDecomposition:
    """Turn an interval partition into a Stanley decomposition of the quotient.

    Each interval `[a, b]` with full set `Z = {j : b_j = g_j}` contributes the
    spaces `x^c K[Z]` for all `c ∈ [a, b]` with `c_j = a_j` on Z. Every space
    has dimension `|Z|`, so the decomposition's sdepth equals the partition value.
    """

    ring = poset.quotient.ring
    spaces: list[StanleySpace] = []
    for bottom, top in partition.intervals:
        full = frozenset(j for j, (b, g) in enumerate(zip(top, poset.bound), start=1) if b == g)
        ranges = [
            range(a, a + 1) if j in full else range(a, b + 1)
            for j, (a, b) in enumerate(zip(bottom, top), start=1)
        ]
        for corner in product(*ranges):
            spaces.append(StanleySpace(root=ring.monomial(corner), vars=full))
    return StanleyDecomposition(quotient=poset.quotient, spaces=tuple(spaces))


def sdepth_naive(poset: CharacteristicPoset) -> int:
    """Brute-force sdepth over all set partitions of a small poset into intervals.

    A block is an interval exactly when it equals the box spanned by its
    componentwise min and max. The lexicographically first remaining point is
    minimal among the remaining points, so only points above it can share its
    block. This oracle shares no code with the search.

    Raises:
        SolverRefusal: For posets with more than NAIVE_POINT_LIMIT points.
    """

    if poset.size > NAIVE_POINT_LIMIT:
        raise SolverRefusal(reason="poset_limit", detail=f"naive oracle accepts at most {NAIVE_POINT_LIMIT} points")
    if poset.is_empty:
        return 0
    n = len(poset.bound)

    def block_value(block: list[Exponents]) -> int | None:
        low = tuple(min(p[j] for p in block) for j in range(n))
        high = tuple(max(p[j] for p in block) for j in range(n))
        if box_volume(tuple(h - lo for lo, h in zip(low, high))) != len(block):
            return None
        members = set(block)
        if any(vector not in members for vector in product(*(range(lo, h + 1) for lo, h in zip(low, high)))):
            return None
        return _full_count(high, poset.bound)

    @cache
    def best(remaining: tuple[Exponents, ...]) -> int:
        if not remaining:
            return n
        first, rest = remaining[0], remaining[1:]
        above = [p for p in rest if _dominates(p, first)]
        result = -1
        for mask in range(1 << len(above)):
            block = [first] + [p for i, p in enumerate(above) if mask >> i & 1]
            value = block_value(block)
            if value is None or value <= result:
                continue
            taken = set(block)
            result = max(result, min(value, best(tuple(p for p in rest if p not in taken))))
        return result

    return best(poset.points)
