"""Text and JSON codecs for monomials, ideals, decompositions, graphs and instances.

Formats:
- monomial text: `x1^2*x3` (caret powers, `*` separators, exponent 1 implicit,
  `1` for the unit monomial);
- ideal text: one monomial per line, `1` alone for the unit ideal, no lines
  for the zero ideal;
- ideal JSON: `{"n": 3, "generators": [[2, 0, 1], ...]}`;
- decomposition JSON: `{"n": 2, "spaces": [{"root": [1, 0], "vars": [1, 2]}]}`;
- primary decomposition JSON: `[[1, 2], [3]]`;
- graph text: first line `n`, then one `i j` pair per line; graph JSON:
  `{"n": 4, "edges": [[1, 2], ...]}`;
- transfer instance JSON: `{"kind": "colon", "n": 2, "I": [[2, 0]], "J": [], "v": [1, 0]}`.

Serializers emit canonical text, so parsing their output returns equal values.
"""

from __future__ import annotations

import json
import re
from collections.abc import Mapping, Sequence
from tokenize import TokenError
from typing import Any

from sympy import Poly
from sympy.core.sympify import SympifyError
from sympy.polys.polyerrors import PolynomialError
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from .graphs import Graph, GraphError
from .monomials import Exponents, Monomial, MonomialIdeal, Ring, minimalize
from .stanley import QuotientPair, StanleyDecomposition, decomposition_of
from .symbolic import PrimaryDecomposition
from .transfer import (
    TransferInstance,
    make_colon_instance,
    make_identity_instance,
    make_radical_instance,
    make_symbolic_instance,
    make_symbolic_pair_instance,
)

_MONOMIAL_CHARS = re.compile(r"^[x0-9^*\s]+$")
_FACTOR = re.compile(r"^x[1-9][0-9]*(\^[0-9]+)?$")
_VARIABLE_NAME = re.compile(r"^x([1-9][0-9]*)$")
_TRANSFORMATIONS = standard_transformations + (convert_xor,)
INSTANCE_KINDS = ("colon", "identity", "radical", "symbolic")


class FormatError(ValueError):
    """Raised for structurally invalid text or JSON input."""


class MonomialParseError(FormatError):
    """Raised when a monomial string cannot be parsed."""

    def __init__(self, *, text: str, detail: str) -> None:
        """Initialize the error.

        Args:
            text: The offending input.
            detail: What was wrong with it.
        """

        super().__init__(f"Cannot parse monomial {text!r}: {detail}.")
        self.text = text
        self.detail = detail


def _parse_powers(text: str) -> dict[int, int]:
    """Parse monomial text into `{variable index: exponent}` using sympy."""

    stripped = text.strip()
    if not stripped:
        raise MonomialParseError(text=text, detail="empty input")
    if stripped == "1":
        return {}
    if not _MONOMIAL_CHARS.match(stripped):
        raise MonomialParseError(text=text, detail="only x<i>, '^', '*' and digits are allowed")
    for factor in stripped.split("*"):
        if not _FACTOR.match(factor.strip()):
            raise MonomialParseError(text=text, detail=f"factor {factor.strip()!r} is not of the form x<i> or x<i>^<e>")
    try:
        expr = parse_expr(stripped, transformations=_TRANSFORMATIONS, evaluate=True)
    except (SympifyError, SyntaxError, TokenError, TypeError) as exc:
        raise MonomialParseError(text=text, detail=str(exc) or "syntax error") from exc

    symbols = sorted(expr.free_symbols, key=lambda s: s.name)
    indices: list[int] = []
    for symbol in symbols:
        match = _VARIABLE_NAME.match(symbol.name)
        if match is None:
            raise MonomialParseError(text=text, detail=f"unknown variable {symbol.name!r}")
        indices.append(int(match.group(1)))
    if not symbols:
        if expr == 1:
            return {}
        raise MonomialParseError(text=text, detail="constants other than 1 are not monomials")

    try:
        poly = Poly(expr, *symbols)
    except PolynomialError as exc:
        raise MonomialParseError(text=text, detail=str(exc)) from exc
    terms = poly.terms()
    if len(terms) != 1 or terms[0][1] != 1:
        raise MonomialParseError(text=text, detail="expected a single term with coefficient 1")
    return {index: int(e) for index, e in zip(indices, terms[0][0]) if e}


def parse_monomial(text: str, ring: Ring) -> Monomial:
    """Parse `x1^2*x3` style text into a monomial of `ring`.

    Raises:
        MonomialParseError: For malformed text or indices outside the ring.
    """

    powers = _parse_powers(text)
    if powers and max(powers) > ring.n:
        raise MonomialParseError(text=text, detail=f"variable index {max(powers)} exceeds n={ring.n}")
    return ring.monomial(powers.get(j, 0) for j in range(1, ring.n + 1))


def format_monomial(u: Monomial) -> str:
    """Render a monomial in the canonical `x1^2*x3` form (`1` for the unit)."""

    parts = []
    for name, e in zip(u.ring.names, u.exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def parse_ideal_text(text: str, *, n: int | None = None) -> MonomialIdeal:
    """Parse one monomial per line (blank lines ignored) into a minimalized ideal.

    Args:
        text: File contents.
        n: Ring size. Defaults to the largest variable index seen, or 1 when
            the text holds no variables.
    """

    parsed = [_parse_powers(line) for line in text.splitlines() if line.strip()]
    seen = max((max(powers) for powers in parsed if powers), default=1)
    size = seen if n is None else n
    if seen > size:
        raise FormatError(f"Variable index {seen} exceeds n={size}.")
    ring = Ring.standard(size)
    return minimalize(ring, (ring.monomial(p.get(j, 0) for j in range(1, size + 1)) for p in parsed))


def format_ideal_text(ideal: MonomialIdeal) -> str:
    """One canonical monomial per line, newline-terminated; empty for the zero ideal.

    The ring size is not written. Parsing the output back yields the same ideal
    only when `n` is passed to `parse_ideal_text`; `ideal_to_dict` keeps it.
    """

    return "".join(f"{format_monomial(g)}\n" for g in ideal.generators)


def _vectors(raw: Any, *, n: int, field: str) -> list[Exponents]:
    if not isinstance(raw, list):
        raise FormatError(f"{field!r} must be a list of exponent vectors.")
    vectors = []
    for item in raw:
        if not isinstance(item, list) or len(item) != n or not all(isinstance(e, int) and e >= 0 for e in item):
            raise FormatError(f"{field!r} entries must be lists of {n} nonnegative integers; got {item!r}.")
        vectors.append(tuple(item))
    return vectors


def _ring_size(payload: Mapping[str, Any]) -> int:
    n = payload.get("n")
    if not isinstance(n, int) or n < 1:
        raise FormatError(f"'n' must be a positive integer; got {n!r}.")
    return n


def ideal_from_dict(payload: Any) -> MonomialIdeal:
    """Build an ideal from `{"n": 3, "generators": [...]}` or a bare nonempty vector list."""

    if isinstance(payload, list):
        if not payload or not isinstance(payload[0], list):
            raise FormatError("A bare generator list must be nonempty; use {'n': ..., 'generators': []} for zero.")
        payload = {"n": len(payload[0]), "generators": payload}
    if not isinstance(payload, Mapping):
        raise FormatError("Ideal JSON must be an object with 'n' and 'generators'.")
    n = _ring_size(payload)
    return MonomialIdeal.from_exponents(Ring.standard(n), _vectors(payload.get("generators", []), n=n, field="generators"))


def ideal_to_dict(ideal: MonomialIdeal) -> dict[str, Any]:
    return {"n": ideal.ring.n, "generators": [list(v) for v in ideal.exponent_vectors()]}


def load_ideal(text: str, *, n: int | None = None) -> MonomialIdeal:
    """Parse ideal file contents, detecting JSON by a leading `{` or `[`."""

    stripped = text.lstrip()
    if stripped.startswith(("{", "[")):
        try:
            payload = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise FormatError(f"Invalid ideal JSON: {exc}") from exc
        ideal = ideal_from_dict(payload)
        if n is not None and n != ideal.ring.n:
            raise FormatError(f"JSON ideal has n={ideal.ring.n} but n={n} was requested.")
        return ideal
    return parse_ideal_text(text, n=n)


def decomposition_to_dict(decomposition: StanleyDecomposition) -> dict[str, Any]:
    return {
        "n": decomposition.ring.n,
        "spaces": [
            {"root": list(space.root.exponents), "vars": list(space.sorted_vars)} for space in decomposition.spaces
        ],
    }


def decomposition_from_dict(payload: Any, quotient: QuotientPair) -> StanleyDecomposition:
    """Attach `{"spaces": [...]}` to `quotient`; the optional `n` must match its ring."""

    if not isinstance(payload, Mapping) or not isinstance(payload.get("spaces"), list):
        raise FormatError("Decomposition JSON must be an object with a 'spaces' list.")
    n = quotient.ring.n
    if "n" in payload and payload["n"] != n:
        raise FormatError(f"Decomposition has n={payload['n']} but the quotient lives in n={n}.")
    pairs = []
    for entry in payload["spaces"]:
        if not isinstance(entry, Mapping) or "root" not in entry or "vars" not in entry:
            raise FormatError(f"Each space needs 'root' and 'vars'; got {entry!r}.")
        (root,) = _vectors([entry["root"]], n=n, field="root")
        members = entry["vars"]
        if not isinstance(members, list) or not all(isinstance(j, int) for j in members):
            raise FormatError(f"'vars' must be a list of variable indices; got {members!r}.")
        pairs.append((root, members))
    return decomposition_of(quotient, pairs)


def primary_decomposition_to_list(decomposition: PrimaryDecomposition) -> list[list[int]]:
    return [list(support) for support in decomposition.supports()]


def parse_graph_text(text: str) -> Graph:
    """Parse the edge-list format: first line `n`, then `i j` per line."""

    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines or len(lines[0]) != 1:
        raise GraphError("Graph text must start with a line holding the vertex count.")
    try:
        n = int(lines[0][0])
        edges = [tuple(int(v) for v in fields) for fields in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"Graph text holds a non-integer token: {exc}") from exc
    return Graph.build(n, edges)


def graph_from_dict(payload: Any) -> Graph:
    if not isinstance(payload, Mapping):
        raise GraphError("Graph JSON must be an object with 'n' and 'edges'.")
    n = payload.get("n")
    if not isinstance(n, int):
        raise GraphError(f"'n' must be an integer; got {n!r}.")
    edges = payload.get("edges", [])
    if not isinstance(edges, list):
        raise GraphError("'edges' must be a list of pairs.")
    return Graph.build(n, edges)


def graph_to_dict(graph: Graph) -> dict[str, Any]:
    return {"n": graph.vertex_count, "edges": [list(edge) for edge in graph.edges]}


def load_graph(text: str) -> Graph:
    """Parse graph file contents, detecting JSON by a leading `{`."""

    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            return graph_from_dict(json.loads(stripped))
        except json.JSONDecodeError as exc:
            raise GraphError(f"Invalid graph JSON: {exc}") from exc
    return parse_graph_text(text)


def _ideal_field(payload: Mapping[str, Any], key: str, ring: Ring, *, default: Sequence[Any] | None = None) -> MonomialIdeal:
    if key not in payload:
        if default is None:
            raise FormatError(f"Instance JSON is missing {key!r}.")
        raw: Any = list(default)
    else:
        raw = payload[key]
    return MonomialIdeal.from_exponents(ring, _vectors(raw, n=ring.n, field=key))


def _positive_int(payload: Mapping[str, Any], key: str) -> int:
    value = payload.get(key)
    if not isinstance(value, int) or value < 1:
        raise FormatError(f"{key!r} must be a positive integer; got {value!r}.")
    return value


def instance_from_dict(payload: Any) -> TransferInstance:
    """Build a transfer instance from its constructor arguments.

    Kinds:
        `colon`: `I`, `J` (default zero) and `v`.
        `radical`: `I` and `J` (default zero).
        `identity`: `I` and `J` (default zero); source and target are `I/J`.
        `symbolic`: `I`, `s`, `k` and `mode` (`ideal`/`quotient`); when `J` is
            present the quotient form `I^(s)/J^(s)` is used and `mode` is ignored.
    """

    if not isinstance(payload, Mapping):
        raise FormatError("Instance JSON must be an object.")
    kind = payload.get("kind")
    if kind not in INSTANCE_KINDS:
        raise FormatError(f"'kind' must be one of {INSTANCE_KINDS}; got {kind!r}.")
    ring = Ring.standard(_ring_size(payload))
    numerator = _ideal_field(payload, "I", ring)

    if kind == "symbolic":
        s, k = _positive_int(payload, "s"), _positive_int(payload, "k")
        if "J" in payload:
            return make_symbolic_pair_instance(numerator, _ideal_field(payload, "J", ring), s, k)
        mode = payload.get("mode", "quotient")
        if mode not in ("ideal", "quotient"):
            raise FormatError(f"'mode' must be 'ideal' or 'quotient'; got {mode!r}.")
        return make_symbolic_instance(numerator, s, k, mode)

    denominator = _ideal_field(payload, "J", ring, default=())
    if kind == "colon":
        (v,) = _vectors([payload.get("v")], n=ring.n, field="v")
        return make_colon_instance(numerator, denominator, ring.monomial(v))
    if kind == "radical":
        return make_radical_instance(numerator, denominator)
    return make_identity_instance(QuotientPair(numerator=numerator, denominator=denominator))


def dumps(payload: Any) -> str:
    """Serialize a JSON payload deterministically."""

    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


__all__ = [
    "FormatError",
    "INSTANCE_KINDS",
    "MonomialParseError",
    "decomposition_from_dict",
    "decomposition_to_dict",
    "dumps",
    "format_ideal_text",
    "format_monomial",
    "graph_from_dict",
    "graph_to_dict",
    "ideal_from_dict",
    "ideal_to_dict",
    "instance_from_dict",
    "load_graph",
    "load_ideal",
    "parse_graph_text",
    "parse_ideal_text",
    "parse_monomial",
    "primary_decomposition_to_list",
]
