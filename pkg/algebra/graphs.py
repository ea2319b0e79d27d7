"""Graphs, cover ideals, bipartitions and A-set searches.

Vertices are numbered `1..vertex_count` and vertex i corresponds to the ring
variable `x_i`. Graph algorithms (coloring, components, named families) come
from networkx; the ideal side is built with `algebra.monomials`.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

import networkx as nx
from networkx.algorithms import bipartite

from .monomials import MonomialIdeal, Ring, VariableSet, intersect_all, minimalize
from .symbolic import DEFAULT_ENUMERATION_LIMIT, minimal_primes


class GraphError(ValueError):
    """Raised for malformed graph input."""


class EdgelessGraphError(GraphError):
    """Raised when a cover ideal is requested for a graph without edges."""

    def __init__(self, *, vertex_count: int) -> None:
        """Initialize the error.

        Args:
            vertex_count: Number of vertices of the edgeless graph.
        """

        super().__init__(f"Cover ideals need at least one edge (graph has {vertex_count} isolated vertices).")
        self.vertex_count = vertex_count


@dataclass(frozen=True, slots=True)
class Graph:
    """A finite simple graph on vertices `1..vertex_count`.

    Attributes:
        vertex_count: Number of vertices (isolated vertices allowed).
        edges: Edges as sorted pairs `(i, j)` with `i < j`.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise GraphError(f"A graph needs at least one vertex, got {self.vertex_count}.")
        seen: set[tuple[int, int]] = set()
        for i, j in self.edges:
            if i == j:
                raise GraphError(f"Loops are not allowed: ({i}, {j}).")
            if not (1 <= i <= self.vertex_count and 1 <= j <= self.vertex_count):
                raise GraphError(f"Edge ({i}, {j}) has an endpoint outside 1..{self.vertex_count}.")
            if i > j:
                raise GraphError(f"Edges must be stored as sorted pairs; got ({i}, {j}). Use Graph.build().")
            if (i, j) in seen:
                raise GraphError(f"Duplicate edge ({i}, {j}).")
            seen.add((i, j))

    @classmethod
    def build(cls, vertex_count: int, edges: Iterable[Iterable[int]]) -> Graph:
        """Normalize endpoints to sorted pairs, sort the edge list and validate.

        Raises:
            GraphError: For loops, out-of-range endpoints or duplicate edges.
        """

        normalized = []
        for edge in edges:
            pair = tuple(int(v) for v in edge)
            if len(pair) != 2:
                raise GraphError(f"Edges need exactly two endpoints, got {pair!r}.")
            normalized.append((min(pair), max(pair)))
        if len(set(normalized)) != len(normalized):
            raise GraphError("Duplicate edges in input.")
        return cls(vertex_count=vertex_count, edges=tuple(sorted(normalized)))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> Graph:
        """Convert a networkx graph on nodes `1..n`."""

        nodes = sorted(graph.nodes)
        if nodes != list(range(1, len(nodes) + 1)):
            raise GraphError(f"Expected nodes 1..{len(nodes)}, got {nodes!r}.")
        return cls.build(len(nodes), graph.edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.vertex_count + 1))
        graph.add_edges_from(self.edges)
        return graph

    @property
    def ring(self) -> Ring:
        return Ring.standard(self.vertex_count)


def path_graph(n: int) -> Graph:
    """Return the path `P_n` on vertices `1..n`."""

    return Graph.from_networkx(nx.convert_node_labels_to_integers(nx.path_graph(n), first_label=1))


def cycle_graph(n: int) -> Graph:
    """Return the cycle `C_n` on vertices `1..n`."""

    return Graph.from_networkx(nx.convert_node_labels_to_integers(nx.cycle_graph(n), first_label=1))


def complete_graph(n: int) -> Graph:
    """Return the complete graph `K_n` on vertices `1..n`."""

    return Graph.from_networkx(nx.convert_node_labels_to_integers(nx.complete_graph(n), first_label=1))


def cover_ideal(graph: Graph) -> MonomialIdeal:
    """Return `J_G`, the intersection of the edge primes `⟨x_i, x_j⟩`.

    Its minimal generators are the products over minimal vertex covers.

    Raises:
        EdgelessGraphError: For graphs without edges.
    """

    if not graph.edges:
        raise EdgelessGraphError(vertex_count=graph.vertex_count)
    ring = graph.ring
    return intersect_all(ring, (minimalize(ring, (ring.variable(i), ring.variable(j))) for i, j in graph.edges))


def minimal_vertex_covers(graph: Graph) -> tuple[VariableSet, ...]:
    """Enumerate minimal vertex covers by brute force over vertex subsets.

    Isolated vertices never appear in a minimal cover.
    """

    vertices = range(1, graph.vertex_count + 1)
    covers: list[VariableSet] = []
    for size in range(graph.vertex_count + 1):
        for subset in combinations(vertices, size):
            candidate = frozenset(subset)
            if any(known <= candidate for known in covers):
                continue
            if all(i in candidate or j in candidate for i, j in graph.edges):
                covers.append(candidate)
    return tuple(sorted(covers, key=lambda c: tuple(sorted(c))))


def is_bipartite(graph: Graph) -> tuple[VariableSet, VariableSet] | None:
    """Two-color the graph component by component.

    Returns:
        `(U, W)` with every edge joining U and W, or None when an odd cycle
        exists. Within each component the smallest vertex is placed in U, and
        isolated vertices go to U.
    """

    nx_graph = graph.to_networkx()
    try:
        coloring = bipartite.color(nx_graph)
    except nx.NetworkXError:
        return None
    left: set[int] = set()
    for component in nx.connected_components(nx_graph):
        anchor = coloring[min(component)]
        left.update(v for v in component if coloring[v] == anchor)
    right = set(range(1, graph.vertex_count + 1)) - left
    return frozenset(left), frozenset(right)


def a_set_for(
    ideal: MonomialIdeal,
    t: int = 1,
    *,
    max_variables: int = DEFAULT_ENUMERATION_LIMIT,
) -> VariableSet | None:
    """Search for variables A meeting every minimal prime in exactly t variables.

    Subsets of the variables occurring in the minimal primes are tried by
    increasing size, then lexicographically, so the answer is deterministic.

    Args:
        ideal: Squarefree, nonzero, proper monomial ideal.
        t: Required intersection size with each minimal prime.
        max_variables: Refuse searches over more variables than this.

    Returns:
        The first qualifying A, or None when no subset qualifies.
    """

    if t < 1:
        raise ValueError(f"t must be positive, got {t}.")
    supports = [p.support for p in minimal_primes(ideal, max_variables=max_variables).primes]
    variables = sorted(set().union(*supports))
    if len(variables) > max_variables:
        raise ValueError(f"a_set_for searches at most {max_variables} variables; got {len(variables)}.")
    for size in range(t, len(variables) + 1):
        for subset in combinations(variables, size):
            candidate = frozenset(subset)
            if all(len(support & candidate) == t for support in supports):
                return candidate
    return None
