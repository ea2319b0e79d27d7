"""Tests for the experiment suites and spec parsing."""

from __future__ import annotations

from pathlib import Path

import pytest

from algebra.solver import SolverLimits
from algebra.symbolic import MixedIdealError, NotSquarefreeError
from algebra.transfer import TransferLimits
from core.experiments import (
    ExperimentSpec,
    ExperimentSpecError,
    FamilySpec,
    ReportRow,
    run_bipartite_powers,
    run_exact_identities,
    run_experiment,
    run_monotone_prefixes,
    run_quotient_comparisons,
    run_symbolic_inequality,
    run_transfer_demo,
    run_unmixed_step,
    spec_from_dict,
    witness_key,
)

C3_GRAPH = "3\n1 2\n2 3\n1 3\n"
C4_GRAPH = "4\n1 2\n2 3\n3 4\n4 1\n"


def rows_for(rows: tuple[ReportRow, ...], theorem: str) -> list[ReportRow]:
    return [row for row in rows if row.theorem == theorem]


def cover_spec(path: Path, **kwargs: object) -> ExperimentSpec:
    return ExperimentSpec(family=FamilySpec(kind="cover_ideal", path=path), **kwargs)  # type: ignore[arg-type]


@pytest.mark.unit
def test_spec_validation() -> None:
    """Unknown suites, missing paths and oversized parameters are rejected."""

    with pytest.raises(ExperimentSpecError):
        ExperimentSpec(family=FamilySpec(kind="default_corpus"), suites=("nope",))
    with pytest.raises(ExperimentSpecError):
        ExperimentSpec(family=FamilySpec(kind="ideal"))
    with pytest.raises(ExperimentSpecError):
        ExperimentSpec(family=FamilySpec(kind="default_corpus"), parameters=((3, 2),), max_power=4)
    with pytest.raises(ExperimentSpecError):
        ExperimentSpec(family=FamilySpec(kind="default_corpus"), modes=("both",))  # type: ignore[arg-type]


@pytest.mark.unit
def test_spec_from_dict_resolves_paths_and_limits() -> None:
    """Relative paths resolve against the spec's directory; payload limits override settings."""

    spec = spec_from_dict(
        {
            "family": {"kind": "cover_ideal", "path": "c4.txt"},
            "suites": ["symbolic_inequality"],
            "parameters": [[2, 1]],
            "limits": {"max_poset_points": 50},
            "seed": 3,
        },
        base_dir=Path("/data"),
        limits=SolverLimits(max_poset_points=4096, time_budget_secs=5.0),
        transfer_limits=TransferLimits(max_doublings=2),
        enumeration_limit=12,
    )
    assert spec.family.path == Path("/data/c4.txt")
    assert spec.limits == SolverLimits(max_poset_points=50, time_budget_secs=5.0)
    assert spec.parameters == ((2, 1),)
    assert spec.describe_limits()["max_doublings"] == 2
    assert spec.seed == 3


@pytest.mark.unit
@pytest.mark.parametrize(
    "payload",
    [[], {"bogus": 1}, {"family": {"path": "x"}}, {"parameters": [[1]]}, {"limits": 3}],
)
def test_spec_from_dict_rejects_malformed_payloads(payload: object) -> None:
    """Structural problems in spec JSON raise ExperimentSpecError."""

    with pytest.raises(ExperimentSpecError):
        spec_from_dict(
            payload,
            base_dir=Path("."),
            limits=SolverLimits(),
            transfer_limits=TransferLimits(),
            enumeration_limit=20,
        )


@pytest.mark.unit
def test_witness_key_is_filesystem_safe() -> None:
    """Power labels collapse to underscores and `^` becomes `pow`."""

    assert witness_key("C3", "ideal", "(2)") == "C3-ideal-2"
    assert witness_key("C4", "quotient", "^2") == "C4-quotient-pow2"
    assert witness_key("K3", "ideal", "(2):x1*x2*x3") == "K3-ideal-2_x1_x2_x3"


@pytest.mark.integration
def test_symbolic_inequality_on_triangle(write_file) -> None:
    """`sdepth(J^(2)) <= sdepth(J^(1))` passes in both modes and every transfer verifies."""

    spec = cover_spec(write_file("c3.txt", C3_GRAPH), parameters=((2, 1),))
    report = run_symbolic_inequality(spec)
    values = {(row.mode, row.power): row.sdepth for row in report.rows if row.verdict == "VALUE"}
    assert values[("ideal", "(1)")] == "2"
    assert values[("quotient", "(1)")] == "1"
    checks = rows_for(report.rows, "symbolic_multiple")
    assert [(row.mode, row.power, row.verdict) for row in checks] == [
        ("ideal", "(2)<=(1)", "PASS"),
        ("quotient", "(2)<=(1)", "PASS"),
    ]
    assert {row.verdict for row in rows_for(report.rows, "transfer_soundness")} == {"PASS"}
    assert "c3-ideal-1" in report.witnesses
    assert report.metadata["corpus"] == ["c3"]


@pytest.mark.integration
def test_unmixed_step_on_square(write_file) -> None:
    """C4 has height 2 and the A-set {1, 3}: both colon identities and steps pass."""

    spec = cover_spec(write_file("c4.txt", C4_GRAPH), k_values=(1,), max_power=3, modes=("ideal",))
    report = run_unmixed_step(spec)
    identities = rows_for(report.rows, "colon_identity")
    assert sorted(row.power for row in identities) == ["(2):x1*x3->(1)", "(3):x1*x2*x3*x4->(1)"]
    assert {row.verdict for row in identities} == {"PASS"}
    assert [row.verdict for row in rows_for(report.rows, "cover_height_step")] == ["PASS"]
    assert [row.verdict for row in rows_for(report.rows, "a_set_step")] == ["PASS"]
    assert not report.failures


@pytest.mark.integration
def test_unmixed_step_with_empty_exponent_range(write_file) -> None:
    """When every `k + d` exceeds max_power the suite emits no rows."""

    spec = cover_spec(write_file("c3.txt", C3_GRAPH), k_values=(1,), max_power=1)
    assert run_unmixed_step(spec).rows == ()
    assert run_monotone_prefixes(spec).rows == ()


@pytest.mark.integration
def test_monotone_prefixes_on_triangle(write_file) -> None:
    """For J_C3 the odd and even symbolic powers up to 4 give nonincreasing sdepths in both modes."""

    spec = cover_spec(write_file("c3.txt", C3_GRAPH), max_power=4)
    rows = rows_for(run_monotone_prefixes(spec).rows, "monotone_prefix")
    assert [(row.mode, row.power, row.sdepth, row.verdict) for row in rows] == [
        ("ideal", "(1),(3)", "2,2", "PASS"),
        ("ideal", "(2),(4)", "2,2", "PASS"),
        ("quotient", "(1),(3)", "1,1", "PASS"),
        ("quotient", "(2),(4)", "1,1", "PASS"),
    ]


@pytest.mark.integration
def test_exact_identities_skip_colon_rows_for_mixed_file_ideal(write_file) -> None:
    """A mixed explicit ideal skips the colon identity but keeps the other identities."""

    spec = ExperimentSpec(
        family=FamilySpec(kind="ideal", path=write_file("mixed.txt", "x1*x2\nx1*x3\n")),
        suites=("exact_identities",),
    )
    report = run_exact_identities(spec)
    assert [(row.power, row.verdict) for row in rows_for(report.rows, "colon_identity")] == [("mixed", "SKIPPED")]
    assert [row.verdict for row in rows_for(report.rows, "symbolic_first_power")] == ["PASS"]
    assert len(rows_for(report.rows, "power_in_symbolic")) == 3
    assert len(rows_for(report.rows, "radical_of_symbolic")) == 3
    assert not report.failures


@pytest.mark.integration
def test_unmixed_step_rejects_mixed_file_ideal(write_file) -> None:
    """A mixed ideal given explicitly is an error rather than a skipped row."""

    spec = ExperimentSpec(family=FamilySpec(kind="ideal", path=write_file("mixed.txt", "x1*x2\nx1*x3\n")))
    with pytest.raises(MixedIdealError) as excinfo:
        run_unmixed_step(spec)
    assert excinfo.value.sizes == (1, 2)


@pytest.mark.integration
def test_file_ideal_must_be_squarefree(write_file) -> None:
    """Non-squarefree explicit ideals are refused when the corpus loads."""

    spec = ExperimentSpec(family=FamilySpec(kind="ideal", path=write_file("square.txt", "x1^2\n")))
    with pytest.raises(NotSquarefreeError):
        run_exact_identities(spec)


@pytest.mark.integration
def test_bipartite_powers_on_square(write_file) -> None:
    """For C4, `J^(k) = J^k` and `sdepth(J^(k+1)) <= sdepth(J^k)`."""

    spec = cover_spec(write_file("c4.txt", C4_GRAPH), max_power=2, modes=("ideal",))
    report = run_bipartite_powers(spec)
    assert [(row.power, row.verdict) for row in rows_for(report.rows, "bipartite_equality")] == [
        ("(1)=^1", "PASS"),
        ("(2)=^2", "PASS"),
    ]
    assert [(row.power, row.verdict) for row in rows_for(report.rows, "bipartite_power_step")] == [("^2<=^1", "PASS")]


@pytest.mark.integration
def test_bipartite_powers_skip_odd_cycles(write_file) -> None:
    """Non-bipartite graphs produce no rows."""

    assert run_bipartite_powers(cover_spec(write_file("c3.txt", C3_GRAPH))).rows == ()


@pytest.mark.integration
def test_quotient_comparisons_on_path(write_file) -> None:
    """Colon and radical comparisons on P3 pass, with transfers verified."""

    spec = cover_spec(write_file("p3.txt", "3\n1 2\n2 3\n"), modes=("ideal",))
    report = run_quotient_comparisons(spec)
    assert not report.failures
    colon_rows = rows_for(report.rows, "colon_quotient")
    assert {row.power for row in colon_rows} == {
        "(2)<=(2):x1",
        "(2)<=(2):x2",
        "(2)<=(2):x3",
        "(2)<=(2):x1*x2*x3",
    }
    assert [row.verdict for row in rows_for(report.rows, "radical_quotient")] == ["PASS"]


@pytest.mark.integration
def test_refused_values_skip_dependent_checks(write_file) -> None:
    """A tiny poset limit turns values into REFUSED rows and checks into SKIPPED rows."""

    spec = cover_spec(
        write_file("c3.txt", C3_GRAPH), parameters=((2, 1),), modes=("ideal",), limits=SolverLimits(max_poset_points=1)
    )
    report = run_symbolic_inequality(spec)
    assert report.counts() == {"REFUSED": 2, "SKIPPED": 2}
    assert not report.failures


@pytest.mark.unit
@pytest.mark.regression
def test_default_corpus_exact_identities_are_deterministic() -> None:
    """The search-free suite passes on the default corpus and repeats exactly."""

    spec = ExperimentSpec(family=FamilySpec(kind="default_corpus"), suites=("exact_identities",), seed=5)
    first = run_experiment(spec)
    assert first.rows == run_exact_identities(spec).rows
    assert {row.verdict for row in first.rows} <= {"PASS", "SKIPPED"}
    assert "PASS" in first.counts()
    bipartite = {row.ideal for row in rows_for(first.rows, "bipartite_equality")}
    assert bipartite == {"P3", "P4", "P5", "C4", "C6"}
    assert first.metadata["seed"] == 5
    assert list(first.rows) == sorted(first.rows, key=ReportRow.as_tuple)


@pytest.mark.unit
def test_random_family_is_reproducible() -> None:
    """Random families depend only on the seed."""

    spec = ExperimentSpec(
        family=FamilySpec(kind="random_squarefree", n=3, generators=2, count=2),
        suites=("exact_identities",),
        seed=9,
    )
    assert run_experiment(spec).rows == run_experiment(spec).rows


@pytest.mark.unit
def test_transfer_demo_on_colon_instance() -> None:
    """`(x1^2) = x1^2 K[x1, x2]` transfers along u ↦ x1·u to `x1 K[x1, x2]`."""

    report = run_transfer_demo(
        {"kind": "colon", "n": 2, "I": [[2, 0]], "J": [], "v": [1, 0]},
        {"n": 2, "spaces": [{"root": [2, 0], "vars": [1, 2]}]},
    )
    assert report.as_dict() == {"input_sdepth": 2, "output_sdepth": 2, "verified": True}
    assert report.decomposition.spaces[0].root.exponents == (1, 0)
