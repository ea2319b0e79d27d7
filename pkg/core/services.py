"""Service-layer helpers shared by the management commands.

Services in `core` connect Django settings and file IO with the pure `algebra`
package: they build limit objects from settings and load input files.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from django.conf import settings

from algebra.formats import FormatError, load_graph, load_ideal
from algebra.graphs import Graph
from algebra.monomials import MonomialIdeal
from algebra.solver import SolverLimits
from algebra.transfer import TransferLimits

# Errors a command turns into CommandError: every domain error subclasses ValueError.
INPUT_ERRORS = (ValueError, OSError)


def solver_limits(*, max_poset_points: int | None = None, time_budget_secs: float | None = None) -> SolverLimits:
    """Return solver limits from settings, with optional per-invocation overrides."""

    return SolverLimits(
        max_poset_points=settings.SDEPTH_MAX_POSET_POINTS if max_poset_points is None else max_poset_points,
        time_budget_secs=settings.SDEPTH_TIME_BUDGET_SECS if time_budget_secs is None else time_budget_secs,
    )


def transfer_limits() -> TransferLimits:
    return TransferLimits(max_doublings=settings.SDEPTH_TRANSFER_MAX_DOUBLINGS)


def enumeration_limit() -> int:
    return int(settings.SDEPTH_ENUMERATION_LIMIT)


def read_text(path: str | Path) -> str:
    """Read a UTF-8 input file."""

    return Path(path).read_text(encoding="utf-8")


def read_json(path: str | Path) -> Any:
    """Read and decode a JSON input file.

    Raises:
        FormatError: When the file is not valid JSON.
    """

    try:
        return json.loads(read_text(path))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc}).") from exc


def load_ideal_file(path: str | Path, *, n: int | None = None) -> MonomialIdeal:
    """Load an ideal from a text or JSON file (format detected from the content)."""

    return load_ideal(read_text(path), n=n)


def load_graph_file(path: str | Path) -> Graph:
    """Load a graph from an edge-list or JSON file."""

    return load_graph(read_text(path))
