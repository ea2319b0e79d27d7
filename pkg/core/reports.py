"""Serialization of experiment reports: CSV rows, metadata JSON and witness files."""

from __future__ import annotations

import csv
import io
import platform
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Any, Final

import algebra
from algebra.formats import decomposition_to_dict, dumps
from core.experiments import ExperimentReport

CSV_HEADER: Final[tuple[str, ...]] = ("ideal", "mode", "power", "sdepth", "theorem", "verdict")


def render_csv(report: ExperimentReport) -> str:
    """Render report rows as CSV with `\\n` line endings.

    Rows are already canonically sorted, so equal reports render to identical bytes.
    """

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in report.rows:
        writer.writerow(row.as_tuple())
    return buffer.getvalue()


def _package_version(name: str) -> str | None:
    try:
        return version(name)
    except PackageNotFoundError:
        return None


def library_versions() -> dict[str, str | None]:
    return {
        "python": platform.python_version(),
        "django": _package_version("Django"),
        "sympy": _package_version("sympy"),
        "networkx": _package_version("networkx"),
        "package": algebra.__version__,
    }


def write_witnesses(report: ExperimentReport, directory: Path) -> dict[str, str]:
    """Write each witness decomposition as `<key>.json` under `directory`.

    Returns:
        `{witness key: file name}` in key order.
    """

    directory.mkdir(parents=True, exist_ok=True)
    written: dict[str, str] = {}
    for key, decomposition in report.witnesses.items():
        path = directory / f"{key}.json"
        path.write_text(dumps(decomposition_to_dict(decomposition)), encoding="utf-8")
        written[key] = path.name
    return written


def build_metadata(report: ExperimentReport, *, witness_files: dict[str, str] | None = None) -> dict[str, Any]:
    """Combine run metadata, library versions, verdict counts and witness file names."""

    return {
        **report.metadata,
        "counts": report.counts(),
        "versions": library_versions(),
        "witnesses": witness_files or {},
    }
