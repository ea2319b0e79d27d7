"""Pytest fixtures shared across the algebra and command tests."""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path

import pytest

from algebra.monomials import MonomialIdeal, Ring


def ideal_of(n: int, *vectors: Sequence[int]) -> MonomialIdeal:
    """Build a minimalized ideal of `K[x1..xn]` from exponent vectors."""

    return MonomialIdeal.from_exponents(Ring.standard(n), vectors)


@pytest.fixture
def c3_cover() -> MonomialIdeal:
    """Return the cover ideal of the triangle, `(x1x2, x1x3, x2x3)`."""

    return ideal_of(3, (1, 1, 0), (1, 0, 1), (0, 1, 1))


@pytest.fixture
def maximal_ideal_3() -> MonomialIdeal:
    """Return `(x1, x2, x3)`."""

    return ideal_of(3, (1, 0, 0), (0, 1, 0), (0, 0, 1))


@pytest.fixture
def write_file(tmp_path: Path):
    """Return a helper writing `content` to `tmp_path/name` and returning the path."""

    def _write(name: str, content: str) -> Path:
        path = tmp_path / name
        path.write_text(content, encoding="utf-8")
        return path

    return _write


def pytest_collection_modifyitems(items: Sequence[pytest.Item]) -> None:
    """Enforce that every test has exactly one speed marker.

    - `unit`: pure, deterministic tests over the `algebra` package.
    - `integration`: tests touching Django, management commands, or file IO.

    Each test must have exactly one of these markers.
    """

    invalid: list[str] = []
    for item in items:
        has_unit = item.get_closest_marker("unit") is not None
        has_integration = item.get_closest_marker("integration") is not None
        if has_unit == has_integration:
            markers = []
            if has_unit:
                markers.append("unit")
            if has_integration:
                markers.append("integration")
            invalid.append(f"{item.nodeid} (markers={markers or 'none'})")

    if invalid:
        joined = "\n".join(f"- {nodeid}" for nodeid in invalid)
        raise pytest.UsageError(
            "Each test must have exactly one speed marker: `@pytest.mark.unit` or "
            "`@pytest.mark.integration`.\n"
            f"Offending tests:\n{joined}"
        )
