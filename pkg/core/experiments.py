"""Experiment suites that machine-check Stanley depth inequalities on a corpus.

Each suite walks the corpus named by an `ExperimentSpec`, computes exact Stanley
depths with `algebra.solver.sdepth_exact`, and emits `ReportRow`s:

- `VALUE` / `REFUSED` rows record individual sdepth values;
- `PASS` / `FAIL` rows record a checked inequality or exact identity, always
  naming the theorem they instantiate;
- `SKIPPED` rows record checks that could not run (a refused value, a zero
  target module, a mixed random ideal). They never count as pass or fail.

Rows are deduplicated and sorted before a report is returned, so a report
depends only on the spec (including its seed and limits).
"""

from __future__ import annotations

import logging
import re
from collections.abc import Callable, Iterable, Mapping
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Final, Literal

from algebra.formats import (
    decomposition_from_dict,
    format_monomial,
    instance_from_dict,
    load_graph,
    load_ideal,
)
from algebra.graphs import a_set_for, is_bipartite
from algebra.monomials import MonomialIdeal, colon, is_subideal, product_power, radical
from algebra.solver import SdepthResult, SolverLimits, SolverRefusal, sdepth_exact
from algebra.stanley import InvalidDecompositionError, QuotientPair, StanleyDecomposition
from algebra.symbolic import (
    ImproperIdealError,
    MixedIdealError,
    NotSquarefreeError,
    PrimaryDecomposition,
    is_squarefree,
    minimal_primes,
    symbolic_power,
)
from algebra.transfer import (
    MalformedInstanceError,
    Mode,
    TransferError,
    TransferInstance,
    TransferLimits,
    TransferReport,
    make_colon_instance,
    make_radical_instance,
    make_symbolic_instance,
    run_transfer,
)
from core.corpus import CorpusEntry, cover_entry, default_corpus, random_corpus

logger = logging.getLogger(__name__)

Verdict = Literal["VALUE", "REFUSED", "PASS", "FAIL", "SKIPPED"]
FamilyKind = Literal["cover_ideal", "ideal", "random_squarefree", "default_corpus"]

SUITES: Final[tuple[str, ...]] = (
    "exact_identities",
    "symbolic_inequality",
    "unmixed_step",
    "monotone_prefix",
    "quotient_comparisons",
    "bipartite_powers",
)
FAMILY_KINDS: Final[tuple[str, ...]] = ("cover_ideal", "ideal", "random_squarefree", "default_corpus")
MODES: Final[tuple[Mode, ...]] = ("ideal", "quotient")
EXACT_IDENTITY_MAX_K: Final[int] = 3
NO_VALUE: Final[str] = "-"


class ExperimentSpecError(ValueError):
    """Raised when an experiment spec is malformed or exceeds its own limits."""


@dataclass(frozen=True, slots=True)
class FamilySpec:
    """Which ideals an experiment runs on.

    Attributes:
        kind: `cover_ideal` (graph file), `ideal` (ideal file),
            `random_squarefree` or `default_corpus`.
        path: Input file for the file-backed kinds.
        n: Variable count for random ideals.
        generators: Subsets drawn per random ideal.
        count: Number of random ideals.
    """

    kind: FamilyKind
    path: Path | None = None
    n: int = 4
    generators: int = 3
    count: int = 1


@dataclass(frozen=True, slots=True)
class ExperimentSpec:
    """A reproducible experiment: family, exponents, modes, limits and seed.

    Attributes:
        family: Corpus selection.
        suites: Suites to run, in `SUITES` vocabulary.
        parameters: `(k, s)` pairs for the symbolic-multiple suite.
        k_values: Base exponents for the height and A-set steps.
        max_power: Largest symbolic exponent any suite may request.
        modes: `ideal` compares `I^(m)`; `quotient` compares `S/I^(m)`.
        limits: Exact-solver limits.
        transfer_limits: Box-growth limit for transfers.
        enumeration_limit: Variable cap for A-set searches.
        seed: Seed for random corpora.
    """

    family: FamilySpec
    suites: tuple[str, ...] = SUITES
    parameters: tuple[tuple[int, int], ...] = ((2, 1), (3, 1))
    k_values: tuple[int, ...] = (1, 2)
    max_power: int = 4
    modes: tuple[Mode, ...] = MODES
    limits: SolverLimits = SolverLimits()
    transfer_limits: TransferLimits = TransferLimits()
    enumeration_limit: int = 20
    seed: int = 0

    def __post_init__(self) -> None:
        unknown = sorted(set(self.suites) - set(SUITES))
        if unknown:
            raise ExperimentSpecError(f"Unknown suites {unknown}; expected a subset of {list(SUITES)}.")
        if self.family.kind not in FAMILY_KINDS:
            raise ExperimentSpecError(f"Unknown family kind {self.family.kind!r}.")
        if self.family.kind in ("cover_ideal", "ideal") and self.family.path is None:
            raise ExperimentSpecError(f"Family {self.family.kind!r} needs a 'path'.")
        if self.max_power < 1:
            raise ExperimentSpecError(f"max_power must be positive, got {self.max_power}.")
        for k, s in self.parameters:
            if k < 1 or s < 1:
                raise ExperimentSpecError(f"Parameters need k, s >= 1; got ({k}, {s}).")
            if k * s > self.max_power:
                raise ExperimentSpecError(f"Parameter ({k}, {s}) needs exponent {k * s} > max_power {self.max_power}.")
        if any(k < 1 for k in self.k_values):
            raise ExperimentSpecError(f"k_values must be positive, got {list(self.k_values)}.")
        if any(mode not in MODES for mode in self.modes):
            raise ExperimentSpecError(f"modes must be drawn from {list(MODES)}, got {list(self.modes)}.")

    def describe_limits(self) -> dict[str, Any]:
        return {
            **asdict(self.limits),
            **asdict(self.transfer_limits),
            "enumeration_limit": self.enumeration_limit,
            "max_power": self.max_power,
        }


def _int_pairs(raw: Any, *, field_name: str) -> tuple[tuple[int, int], ...]:
    if not isinstance(raw, list) or not all(
        isinstance(item, list) and len(item) == 2 and all(isinstance(v, int) for v in item) for item in raw
    ):
        raise ExperimentSpecError(f"{field_name!r} must be a list of [k, s] integer pairs.")
    return tuple((item[0], item[1]) for item in raw)


def spec_from_dict(
    payload: Any,
    *,
    base_dir: Path,
    limits: SolverLimits,
    transfer_limits: TransferLimits,
    enumeration_limit: int,
) -> ExperimentSpec:
    """Build an ExperimentSpec from its JSON form.

    Relative family paths resolve against `base_dir`. A `limits` object in the
    payload overrides the given solver limits key by key.

    Raises:
        ExperimentSpecError: For unknown keys, wrong types or inconsistent values.
    """

    if not isinstance(payload, Mapping):
        raise ExperimentSpecError("An experiment spec must be a JSON object.")
    allowed = {"suites", "family", "parameters", "k_values", "max_power", "modes", "limits", "seed"}
    unknown = sorted(set(payload) - allowed)
    if unknown:
        raise ExperimentSpecError(f"Unknown spec keys {unknown}.")

    raw_family = payload.get("family", {"kind": "default_corpus"})
    if not isinstance(raw_family, Mapping) or "kind" not in raw_family:
        raise ExperimentSpecError("'family' must be an object with a 'kind'.")
    raw_path = raw_family.get("path")
    family = FamilySpec(
        kind=raw_family["kind"],
        path=None if raw_path is None else base_dir / str(raw_path),
        n=int(raw_family.get("n", 4)),
        generators=int(raw_family.get("generators", 3)),
        count=int(raw_family.get("count", 1)),
    )

    raw_limits = payload.get("limits", {})
    if not isinstance(raw_limits, Mapping):
        raise ExperimentSpecError("'limits' must be an object.")
    solver_limits = SolverLimits(
        max_poset_points=int(raw_limits.get("max_poset_points", limits.max_poset_points)),
        time_budget_secs=float(raw_limits.get("time_budget_secs", limits.time_budget_secs)),
    )
    kwargs: dict[str, Any] = {}
    if "suites" in payload:
        kwargs["suites"] = tuple(payload["suites"])
    if "parameters" in payload:
        kwargs["parameters"] = _int_pairs(payload["parameters"], field_name="parameters")
    if "k_values" in payload:
        kwargs["k_values"] = tuple(int(k) for k in payload["k_values"])
    if "max_power" in payload:
        kwargs["max_power"] = int(payload["max_power"])
    if "modes" in payload:
        kwargs["modes"] = tuple(payload["modes"])
    if "seed" in payload:
        kwargs["seed"] = int(payload["seed"])
    return ExperimentSpec(
        family=family,
        limits=solver_limits,
        transfer_limits=transfer_limits,
        enumeration_limit=enumeration_limit,
        **kwargs,
    )


@dataclass(frozen=True, slots=True)
class ReportRow:
    """One CSV row: `ideal,mode,power,sdepth,theorem,verdict`.

    Attributes:
        ideal: Corpus entry name.
        mode: `ideal`, `quotient`, or `-` for ring-level identities.
        power: Which module(s) the row is about, e.g. `(3)` or `(3)<=(1)`.
        sdepth: The value, `REFUSED`, the compared values (`1<=2`) or `-`.
        theorem: Theorem name for checks, empty for value rows.
        verdict: One of VALUE, REFUSED, PASS, FAIL, SKIPPED.
    """

    ideal: str
    mode: str
    power: str
    sdepth: str
    theorem: str
    verdict: Verdict

    def as_tuple(self) -> tuple[str, str, str, str, str, str]:
        return (self.ideal, self.mode, self.power, self.sdepth, self.theorem, self.verdict)


@dataclass(frozen=True, slots=True)
class ExperimentReport:
    """Sorted report rows plus run metadata and witness decompositions.

    Attributes:
        rows: Canonically sorted, deduplicated rows.
        metadata: Seed, limits, suites and family of the run.
        witnesses: Optimal decompositions keyed by `witness_key`.
    """

    rows: tuple[ReportRow, ...]
    metadata: dict[str, Any] = field(default_factory=dict, compare=False)
    witnesses: dict[str, StanleyDecomposition] = field(default_factory=dict, compare=False)

    @property
    def failures(self) -> tuple[ReportRow, ...]:
        return tuple(row for row in self.rows if row.verdict == "FAIL")

    def counts(self) -> dict[str, int]:
        """Return `{verdict: row count}` for the verdicts present."""

        totals: dict[str, int] = {}
        for row in self.rows:
            totals[row.verdict] = totals.get(row.verdict, 0) + 1
        return dict(sorted(totals.items()))


def witness_key(ideal: str, mode: str, power: str) -> str:
    """Return a filesystem-safe `<ideal>-<mode>-<power>` key."""

    slug = re.sub(r"[^A-Za-z0-9]+", "_", power.replace("^", "pow")).strip("_")
    return f"{ideal}-{mode}-{slug}"


def pair_for(ideal: MonomialIdeal, mode: Mode) -> QuotientPair:
    """`(I, 0)` in ideal mode, `(S, I)` in quotient mode."""

    if mode == "ideal":
        return QuotientPair.of_ideal(ideal)
    return QuotientPair.of_quotient_ring(ideal)


class _Runner:
    """Shared state for one experiment run: caches, rows and witnesses."""

    def __init__(self, spec: ExperimentSpec) -> None:
        self.spec = spec
        self._results: dict[tuple[Any, Any], SdepthResult | None] = {}
        self._primes: dict[str, PrimaryDecomposition] = {}
        self._symbolic: dict[tuple[str, int], MonomialIdeal] = {}
        self._rows: dict[tuple[str, str, str, str], ReportRow] = {}
        self.witnesses: dict[str, StanleyDecomposition] = {}

    def add(self, row: ReportRow) -> ReportRow:
        key = (row.ideal, row.mode, row.power, row.theorem)
        return self._rows.setdefault(key, row)

    def symbolic(self, entry: CorpusEntry, m: int) -> MonomialIdeal:
        key = (entry.name, m)
        if key not in self._symbolic:
            if entry.name not in self._primes:
                self._primes[entry.name] = minimal_primes(entry.ideal, max_variables=self.spec.enumeration_limit)
            self._symbolic[key] = symbolic_power(entry.ideal, m, decomposition=self._primes[entry.name])
        return self._symbolic[key]

    def height(self, entry: CorpusEntry, *, theorem: str, skip_mixed: bool = False) -> int | None:
        """Return the height of an unmixed entry.

        Mixed random ideals, and any mixed ideal when `skip_mixed` is set, yield
        a SKIPPED row and None; any other mixed ideal raises MixedIdealError.
        """

        if entry.name not in self._primes:
            self._primes[entry.name] = minimal_primes(entry.ideal, max_variables=self.spec.enumeration_limit)
        sizes = self._primes[entry.name].support_sizes()
        if sizes[0] == sizes[-1]:
            return sizes[0]
        if skip_mixed or entry.source == "random_squarefree":
            self.add(ReportRow(entry.name, NO_VALUE, "mixed", NO_VALUE, theorem, "SKIPPED"))
            return None
        raise MixedIdealError(operation=theorem, sizes=sizes)

    def result(self, pair: QuotientPair) -> SdepthResult | None:
        key = (pair.numerator.exponent_vectors(), pair.denominator.exponent_vectors())
        if key not in self._results:
            try:
                self._results[key] = sdepth_exact(pair, limits=self.spec.limits)
            except SolverRefusal as exc:
                logger.warning("sdepth refused: %s", exc)
                self._results[key] = None
        return self._results[key]

    def value(self, entry: CorpusEntry, mode: str, power: str, pair: QuotientPair) -> int | None:
        """Compute (or reuse) an sdepth value and record its VALUE/REFUSED row."""

        found = self.result(pair)
        if found is None:
            self.add(ReportRow(entry.name, mode, power, "REFUSED", "", "REFUSED"))
            return None
        self.add(ReportRow(entry.name, mode, power, str(found.value), "", "VALUE"))
        self.witnesses.setdefault(witness_key(entry.name, mode, power), found.witness)
        return found.value

    def compare(
        self, entry: CorpusEntry, mode: str, power: str, theorem: str, small: int | None, large: int | None
    ) -> ReportRow:
        """Record the check `small <= large`; SKIPPED when either side was refused."""

        shown = f"{'REFUSED' if small is None else small}<={'REFUSED' if large is None else large}"
        if small is None or large is None:
            return self.add(ReportRow(entry.name, mode, power, shown, theorem, "SKIPPED"))
        verdict: Verdict = "PASS" if small <= large else "FAIL"
        if verdict == "FAIL":
            logger.error("%s failed for %s (%s, %s): %s", theorem, entry.name, mode, power, shown)
        return self.add(ReportRow(entry.name, mode, power, shown, theorem, verdict))

    def identity(self, entry: CorpusEntry, power: str, theorem: str, holds: bool) -> ReportRow:
        if not holds:
            logger.error("%s failed for %s: %s", theorem, entry.name, power)
        return self.add(ReportRow(entry.name, NO_VALUE, power, NO_VALUE, theorem, "PASS" if holds else "FAIL"))

    def transfer(
        self, entry: CorpusEntry, mode: str, power: str, instance: TransferInstance, target_value: int | None
    ) -> ReportRow:
        """Run the constructive transfer from the source's optimal witness and record soundness.

        PASS requires a verified output whose sdepth is at least the input's and,
        when the target's exact value is known, at most that value.
        """

        theorem = "transfer_soundness"
        if instance.target.is_zero_module:
            return self.add(ReportRow(entry.name, mode, power, NO_VALUE, theorem, "SKIPPED"))
        source = self.result(instance.source)
        if source is None:
            return self.add(ReportRow(entry.name, mode, power, "REFUSED", theorem, "SKIPPED"))
        try:
            report = run_transfer(instance, source.witness, limits=self.spec.transfer_limits)
        except (TransferError, MalformedInstanceError, InvalidDecompositionError) as exc:
            logger.error("transfer failed for %s (%s, %s): %s", entry.name, mode, power, exc)
            return self.add(ReportRow(entry.name, mode, power, NO_VALUE, theorem, "FAIL"))
        shown = f"{report.input_sdepth}<={report.output_sdepth}"
        sound = report.input_sdepth <= report.output_sdepth
        if target_value is not None:
            sound = sound and report.output_sdepth <= target_value
        self.witnesses.setdefault(witness_key(entry.name, mode, f"{power}-transfer"), report.decomposition)
        return self.add(ReportRow(entry.name, mode, power, shown, theorem, "PASS" if sound else "FAIL"))

    def report(self, corpus: Iterable[CorpusEntry]) -> ExperimentReport:
        spec = self.spec
        rows = tuple(sorted(self._rows.values(), key=ReportRow.as_tuple))
        metadata = {
            "seed": spec.seed,
            "limits": spec.describe_limits(),
            "suites": list(spec.suites),
            "family": {
                "kind": spec.family.kind,
                "path": None if spec.family.path is None else spec.family.path.name,
            },
            "corpus": [entry.name for entry in corpus],
        }
        return ExperimentReport(rows=rows, metadata=metadata, witnesses=dict(sorted(self.witnesses.items())))


def load_corpus(spec: ExperimentSpec) -> tuple[CorpusEntry, ...]:
    """Materialize the spec's family.

    Raises:
        NotSquarefreeError: When an explicit ideal is not squarefree.
        ImproperIdealError: When an explicit ideal is zero or the unit ideal.
        OSError: When an input file cannot be read.
    """

    family = spec.family
    if family.kind == "default_corpus":
        return default_corpus(spec.seed)
    if family.kind == "random_squarefree":
        return random_corpus(n=family.n, generators=family.generators, count=family.count, seed=spec.seed)
    assert family.path is not None
    text = family.path.read_text(encoding="utf-8")
    if family.kind == "cover_ideal":
        return (cover_entry(family.path.stem, load_graph(text)),)
    ideal = load_ideal(text)
    if not is_squarefree(ideal):
        raise NotSquarefreeError(operation="experiment", ideal=ideal)
    if not ideal.is_proper:
        raise ImproperIdealError(operation="experiment", ideal=ideal)
    return (CorpusEntry(name=family.path.stem, ideal=ideal, source="ideal"),)


def _symbolic_inequality(runner: _Runner, entry: CorpusEntry) -> None:
    for mode in runner.spec.modes:
        for k, s in runner.spec.parameters:
            high = runner.value(entry, mode, f"({k * s})", pair_for(runner.symbolic(entry, k * s), mode))
            low = runner.value(entry, mode, f"({s})", pair_for(runner.symbolic(entry, s), mode))
            runner.compare(entry, mode, f"({k * s})<=({s})", "symbolic_multiple", high, low)
            instance = make_symbolic_instance(entry.ideal, s, k, mode)
            runner.transfer(entry, mode, f"({k * s})->({s})", instance, low)


def _colon_step(runner: _Runner, entry: CorpusEntry, *, k: int, t: int, variables: frozenset[int], theorem: str) -> None:
    """Check `I^(k+t) : x_A = I^(k)` exactly, then `sdepth(I^(k+t)) <= sdepth(I^(k))` per mode."""

    ring = entry.ideal.ring
    v = ring.product_of(variables)
    tag = format_monomial(v)
    high_ideal, low_ideal = runner.symbolic(entry, k + t), runner.symbolic(entry, k)
    runner.identity(entry, f"({k + t}):{tag}->({k})", "colon_identity", colon(high_ideal, v) == low_ideal)
    for mode in runner.spec.modes:
        high_pair = pair_for(high_ideal, mode)
        high = runner.value(entry, mode, f"({k + t})", high_pair)
        low = runner.value(entry, mode, f"({k})", pair_for(low_ideal, mode))
        runner.compare(entry, mode, f"({k + t})<=({k})", theorem, high, low)
        instance = make_colon_instance(high_pair.numerator, high_pair.denominator, v)
        runner.transfer(entry, mode, f"({k + t}):{tag}->({k})", instance, low)


def _unmixed_step(runner: _Runner, entry: CorpusEntry) -> None:
    spec = runner.spec
    d = runner.height(entry, theorem="unmixed_height_step")
    if d is None:
        return
    theorem = "cover_height_step" if entry.is_cover_ideal else "unmixed_height_step"
    everything = frozenset(range(1, entry.ideal.ring.n + 1))
    a_set = a_set_for(entry.ideal, 1, max_variables=spec.enumeration_limit)
    for k in spec.k_values:
        if k + d <= spec.max_power:
            _colon_step(runner, entry, k=k, t=d, variables=everything, theorem=theorem)
        if a_set is not None and k + 1 <= spec.max_power:
            _colon_step(runner, entry, k=k, t=1, variables=a_set, theorem="a_set_step")


def _monotone_prefix(runner: _Runner, entry: CorpusEntry) -> None:
    spec = runner.spec
    d = runner.height(entry, theorem="monotone_prefix")
    if d is None:
        return
    for mode in spec.modes:
        for residue in range(1, d + 1):
            exponents = range(residue, spec.max_power + 1, d)
            if len(exponents) < 2:
                continue
            values = [runner.value(entry, mode, f"({m})", pair_for(runner.symbolic(entry, m), mode)) for m in exponents]
            power = ",".join(f"({m})" for m in exponents)
            shown = ",".join("REFUSED" if v is None else str(v) for v in values)
            known = [v for v in values if v is not None]
            if len(known) != len(values):
                runner.add(ReportRow(entry.name, mode, power, shown, "monotone_prefix", "SKIPPED"))
                continue
            ordered = all(a >= b for a, b in zip(known, known[1:]))
            if not ordered:
                logger.error("monotone_prefix failed for %s (%s): %s", entry.name, mode, shown)
            runner.add(ReportRow(entry.name, mode, power, shown, "monotone_prefix", "PASS" if ordered else "FAIL"))


def _quotient_comparisons(runner: _Runner, entry: CorpusEntry) -> None:
    ring = entry.ideal.ring
    square = runner.symbolic(entry, 2)
    multipliers = [ring.variable(i) for i in range(1, ring.n + 1)] + [ring.all_variables()]
    for mode in runner.spec.modes:
        pair = pair_for(square, mode)
        base = runner.value(entry, mode, "(2)", pair)
        for v in multipliers:
            label = f"(2):{format_monomial(v)}"
            instance = make_colon_instance(pair.numerator, pair.denominator, v)
            if instance.target.is_zero_module:
                runner.add(ReportRow(entry.name, mode, f"(2)<={label}", NO_VALUE, "colon_quotient", "SKIPPED"))
                continue
            target = runner.value(entry, mode, label, instance.target)
            runner.compare(entry, mode, f"(2)<={label}", "colon_quotient", base, target)
            runner.transfer(entry, mode, f"(2)->{label}", instance, target)
        instance = make_radical_instance(pair.numerator, pair.denominator)
        target = runner.value(entry, mode, "sqrt((2))", instance.target)
        runner.compare(entry, mode, "(2)<=sqrt((2))", "radical_quotient", base, target)
        runner.transfer(entry, mode, "(2)->sqrt((2))", instance, target)


def _bipartite_powers(runner: _Runner, entry: CorpusEntry) -> None:
    if entry.graph is None or is_bipartite(entry.graph) is None:
        return
    spec = runner.spec
    powers = {k: product_power(entry.ideal, k) for k in range(1, spec.max_power + 1)}
    for k, power in powers.items():
        runner.identity(entry, f"({k})=^{k}", "bipartite_equality", runner.symbolic(entry, k) == power)
    for mode in spec.modes:
        for k in range(1, spec.max_power):
            high = runner.value(entry, mode, f"^{k + 1}", pair_for(powers[k + 1], mode))
            low = runner.value(entry, mode, f"^{k}", pair_for(powers[k], mode))
            runner.compare(entry, mode, f"^{k + 1}<=^{k}", "bipartite_power_step", high, low)


def _exact_identities(runner: _Runner, entry: CorpusEntry) -> None:
    ideal = entry.ideal
    runner.identity(entry, "(1)=I", "symbolic_first_power", runner.symbolic(entry, 1) == ideal)
    for k in range(1, EXACT_IDENTITY_MAX_K + 1):
        symbolic_k = runner.symbolic(entry, k)
        runner.identity(entry, f"^{k}<=({k})", "power_in_symbolic", is_subideal(product_power(ideal, k), symbolic_k))
        runner.identity(entry, f"sqrt(({k}))=I", "radical_of_symbolic", radical(symbolic_k) == ideal)
    d = runner.height(entry, theorem="colon_identity", skip_mixed=True)
    if d is not None:
        v = ideal.ring.all_variables()
        for k in range(1, EXACT_IDENTITY_MAX_K + 1):
            holds = colon(runner.symbolic(entry, k + d), v) == runner.symbolic(entry, k)
            runner.identity(entry, f"({k + d}):{format_monomial(v)}->({k})", "colon_identity", holds)
    if entry.graph is not None and is_bipartite(entry.graph) is not None:
        for k in range(1, EXACT_IDENTITY_MAX_K + 1):
            holds = runner.symbolic(entry, k) == product_power(ideal, k)
            runner.identity(entry, f"({k})=^{k}", "bipartite_equality", holds)


_SUITE_STEPS: Final[dict[str, Callable[[_Runner, CorpusEntry], None]]] = {
    "exact_identities": _exact_identities,
    "symbolic_inequality": _symbolic_inequality,
    "unmixed_step": _unmixed_step,
    "monotone_prefix": _monotone_prefix,
    "quotient_comparisons": _quotient_comparisons,
    "bipartite_powers": _bipartite_powers,
}


def _run_suites(spec: ExperimentSpec, suites: Iterable[str]) -> ExperimentReport:
    corpus = load_corpus(spec)
    runner = _Runner(spec)
    for suite in suites:
        logger.info("running %s on %d ideals", suite, len(corpus))
        for entry in corpus:
            _SUITE_STEPS[suite](runner, entry)
    return runner.report(corpus)


def run_experiment(spec: ExperimentSpec) -> ExperimentReport:
    """Run every suite named by the spec into one report."""

    return _run_suites(spec, spec.suites)


def run_symbolic_inequality(spec: ExperimentSpec) -> ExperimentReport:
    """Check `sdepth(I^(ks)) <= sdepth(I^(s))` for every `(k, s)` and mode, with transfers."""

    return _run_suites(spec, ("symbolic_inequality",))


def run_unmixed_step(spec: ExperimentSpec) -> ExperimentReport:
    """Check the height step (`k + d`) and, when an A-set exists, the `k + 1` step.

    Every sdepth check is preceded by the exact colon identity it relies on.

    Raises:
        MixedIdealError: For mixed ideals from file-backed families.
    """

    return _run_suites(spec, ("unmixed_step",))


def run_monotone_prefixes(spec: ExperimentSpec) -> ExperimentReport:
    """Check that `sdepth(I^(kd + l))` is nonincreasing in k for every residue l."""

    return _run_suites(spec, ("monotone_prefix",))


def run_quotient_comparisons(spec: ExperimentSpec) -> ExperimentReport:
    """Compare `I/J` with its colon and radical quotients for `(I^(2), 0)` and `(S, I^(2))`."""

    return _run_suites(spec, ("quotient_comparisons",))


def run_bipartite_powers(spec: ExperimentSpec) -> ExperimentReport:
    """For bipartite cover ideals check `J^(k) = J^k` and `sdepth(J^(k+1)) <= sdepth(J^k)`."""

    return _run_suites(spec, ("bipartite_powers",))


def run_exact_identities(spec: ExperimentSpec) -> ExperimentReport:
    """Run the search-free identity suite."""

    return _run_suites(spec, ("exact_identities",))


def run_transfer_demo(
    instance_payload: Any,
    decomposition_payload: Any,
    *,
    limits: TransferLimits | None = None,
) -> TransferReport:
    """Transfer a user-supplied decomposition along a user-supplied instance.

    Raises:
        FormatError: When either payload is malformed.
        InvalidDecompositionError: When the decomposition does not verify against the source.
        MalformedInstanceError: When the instance's membership conditions fail.
        TransferError: When no verified output is found within the limits.
    """

    instance = instance_from_dict(instance_payload)
    decomposition = decomposition_from_dict(decomposition_payload, instance.source)
    return run_transfer(instance, decomposition, limits=limits)
