"""Integration tests for the management commands."""

from __future__ import annotations

import json
from io import StringIO
from pathlib import Path

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from core.experiments import ExperimentReport, ReportRow

pytestmark = pytest.mark.integration

C3_TEXT = "x1*x2\nx1*x3\nx2*x3\n"


def run(name: str, *args: str) -> str:
    out = StringIO()
    call_command(name, *args, stdout=out)
    return out.getvalue()


def test_ideal_command_minimalizes(write_file) -> None:
    """`ideal` prints canonical minimal generators, or JSON with --json."""

    path = write_file("i.txt", "x1^2\nx1^3*x2\nx2\n")
    assert run("ideal", str(path)) == "x2\nx1^2\n"
    assert json.loads(run("ideal", str(path), "--json")) == {"n": 2, "generators": [[0, 1], [2, 0]]}


def test_ideal_command_rejects_variable_exponent(write_file) -> None:
    """Text sympy cannot read as a polynomial is a CommandError, not a traceback."""

    with pytest.raises(CommandError):
        run("ideal", str(write_file("bad.txt", "x1^x2\n")))


def test_power_and_symbolic_commands(write_file) -> None:
    """`power` and `symbolic` print ordinary and symbolic powers."""

    assert run("power", str(write_file("m.txt", "x1\nx2\n")), "--k", "2") == "x2^2\nx1*x2\nx1^2\n"
    assert run("symbolic", str(write_file("c3.txt", C3_TEXT)), "--k", "2") == (
        "x2^2*x3^2\nx1*x2*x3\nx1^2*x3^2\nx1^2*x2^2\n"
    )


def test_colon_and_radical_commands(write_file) -> None:
    """`colon` divides by a monomial; `radical` takes squarefree parts."""

    assert run("colon", str(write_file("sq.txt", "x1^2\n")), "--n", "2", "--v", "x1") == "x1\n"
    assert run("radical", str(write_file("r.txt", "x1^2*x2\nx3^3\n"))) == "x3\nx1*x2\n"


def test_primes_command(write_file) -> None:
    """`primes` prints the minimal primes as a JSON list."""

    assert json.loads(run("primes", str(write_file("mixed.txt", "x1*x2\nx1*x3\n")))) == [[1], [2, 3]]


def test_primes_command_rejects_non_squarefree(write_file) -> None:
    """Domain errors become CommandError."""

    with pytest.raises(CommandError):
        run("primes", str(write_file("sq.txt", "x1^2\n")))


def test_cover_ideal_command(write_file) -> None:
    """`cover_ideal` prints `J_G`; with --json it adds the bipartition."""

    path = write_file("c4.txt", "4\n1 2\n2 3\n3 4\n4 1\n")
    assert run("cover_ideal", str(path)) == "x2*x4\nx1*x3\n"
    payload = json.loads(run("cover_ideal", str(path), "--json"))
    assert payload["bipartition"] == [[1, 3], [2, 4]]
    assert json.loads(run("cover_ideal", str(write_file("c3.txt", "3\n1 2\n2 3\n1 3\n")), "--json"))[
        "bipartition"
    ] is None


def test_sdepth_command_variants(write_file, tmp_path: Path) -> None:
    """`sdepth` computes ideal, quotient and pair depths and writes a witness."""

    c3 = write_file("c3.txt", C3_TEXT)
    witness = tmp_path / "witness.json"
    assert run("sdepth", str(c3), "--witness", str(witness)) == "2\n"
    assert json.loads(witness.read_text(encoding="utf-8"))["n"] == 3
    assert run("sdepth", str(c3), "--quotient") == "1\n"
    payload = json.loads(run("sdepth", str(write_file("m.txt", "x1\nx2\n")), "--json"))
    assert payload["sdepth"] == 1
    assert payload["poset_points"] == 3
    denominator = write_file("d.txt", "x1*x2*x3\n")
    assert run("sdepth", str(c3), "--denominator", str(denominator)) == "2\n"


def test_sdepth_command_refusal_and_bad_input(write_file) -> None:
    """Refusals and malformed files exit nonzero."""

    c3 = write_file("c3.txt", C3_TEXT)
    with pytest.raises(CommandError, match="REFUSED"):
        run("sdepth", str(c3), "--max-poset-points", "1")
    with pytest.raises(CommandError):
        run("sdepth", str(write_file("bad.txt", "2*x1\n")))
    with pytest.raises(CommandError):
        run("sdepth", str(c3), "--quotient", "--denominator", str(c3))
    with pytest.raises(CommandError):
        run("sdepth", str(c3), "--n", "2")


def test_transfer_command(write_file, tmp_path: Path) -> None:
    """`transfer` prints the target decomposition and the depth report."""

    instance = write_file("instance.json", '{"kind": "colon", "n": 2, "I": [[2, 0]], "J": [], "v": [1, 0]}')
    decomposition = write_file("decomposition.json", '{"n": 2, "spaces": [{"root": [2, 0], "vars": [1, 2]}]}')
    payload = json.loads(run("transfer", "--instance", str(instance), "--decomposition", str(decomposition)))
    assert payload == {
        "decomposition": {"n": 2, "spaces": [{"root": [1, 0], "vars": [1, 2]}]},
        "report": {"input_sdepth": 2, "output_sdepth": 2, "verified": True},
    }

    output = tmp_path / "out.json"
    message = run("transfer", "--instance", str(instance), "--decomposition", str(decomposition), "--output", str(output))
    assert "sdepth 2 -> 2" in message
    assert json.loads(output.read_text(encoding="utf-8"))["report"]["verified"] is True


def test_transfer_command_rejects_invalid_decomposition(write_file) -> None:
    """A decomposition that does not cover the source is an error."""

    instance = write_file("instance.json", '{"kind": "colon", "n": 2, "I": [[2, 0]], "v": [1, 0]}')
    decomposition = write_file("decomposition.json", '{"spaces": [{"root": [2, 0], "vars": [1]}]}')
    with pytest.raises(CommandError, match="uncovered"):
        run("transfer", "--instance", str(instance), "--decomposition", str(decomposition))


def test_experiment_command_writes_outputs(write_file, tmp_path: Path) -> None:
    """`experiment` writes CSV, metadata and witness files."""

    write_file("c4.txt", "4\n1 2\n2 3\n3 4\n4 1\n")
    spec = write_file(
        "spec.json",
        json.dumps(
            {
                "family": {"kind": "cover_ideal", "path": "c4.txt"},
                "suites": ["symbolic_inequality"],
                "parameters": [[2, 1]],
                "modes": ["ideal"],
                "seed": 1,
            }
        ),
    )
    csv_path, report_path, witness_dir = tmp_path / "out.csv", tmp_path / "meta.json", tmp_path / "w"
    message = run(
        "experiment",
        str(spec),
        "--output",
        str(csv_path),
        "--report",
        str(report_path),
        "--witness-dir",
        str(witness_dir),
    )
    assert "wrote" in message
    lines = csv_path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "ideal,mode,power,sdepth,theorem,verdict"
    checks = [line for line in lines if line.startswith("c4,ideal,(2)<=(1),")]
    assert len(checks) == 1 and checks[0].endswith(",symbolic_multiple,PASS")
    metadata = json.loads(report_path.read_text(encoding="utf-8"))
    assert metadata["seed"] == 1
    assert set(metadata["versions"]) == {"python", "django", "sympy", "networkx", "package"}
    assert (witness_dir / "c4-ideal-1.json").exists()


def test_experiment_command_prints_csv_without_output(write_file) -> None:
    """Without --output the CSV goes to stdout."""

    spec = write_file("spec.json", '{"family": {"kind": "random_squarefree", "n": 3, "count": 1}, "suites": ["exact_identities"]}')
    assert run("experiment", str(spec)).startswith("ideal,mode,power,sdepth,theorem,verdict\n")


def test_experiment_command_fails_on_fail_verdict(write_file, monkeypatch: pytest.MonkeyPatch) -> None:
    """Any FAIL row makes the command exit nonzero after printing the CSV."""

    report = ExperimentReport(rows=(ReportRow("X", "ideal", "(2)<=(1)", "3<=2", "symbolic_multiple", "FAIL"),))
    monkeypatch.setattr("core.management.commands.experiment.run_experiment", lambda spec: report)
    spec = write_file("spec.json", '{"suites": ["exact_identities"]}')
    with pytest.raises(CommandError, match="1 FAIL"):
        run("experiment", str(spec))


def test_experiment_command_rejects_bad_spec(write_file) -> None:
    """Malformed spec JSON is reported as a CommandError."""

    with pytest.raises(CommandError):
        run("experiment", str(write_file("spec.json", "{not json")))
    with pytest.raises(CommandError):
        run("experiment", str(write_file("spec2.json", '{"suites": ["nope"]}')))
