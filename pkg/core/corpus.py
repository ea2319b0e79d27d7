"""Experiment corpora: named graph families and seeded random squarefree ideals."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from random import Random
from typing import Final, Literal

from algebra.graphs import Graph, complete_graph, cover_ideal, cycle_graph, path_graph
from algebra.monomials import MonomialIdeal, Ring, minimalize

CorpusSource = Literal["cover_ideal", "ideal", "random_squarefree"]

DEFAULT_RANDOM_COUNT: Final[int] = 10
DEFAULT_RANDOM_MAX_N: Final[int] = 5


@dataclass(frozen=True, slots=True)
class CorpusEntry:
    """One ideal of an experiment corpus.

    Attributes:
        name: Identifier used in report rows (e.g. `C4`, `R03`).
        ideal: The ideal under test.
        source: How the ideal was obtained.
        graph: The graph for cover ideals, else None.
    """

    name: str
    ideal: MonomialIdeal
    source: CorpusSource
    graph: Graph | None = None

    @property
    def is_cover_ideal(self) -> bool:
        return self.graph is not None


def cover_entry(name: str, graph: Graph) -> CorpusEntry:
    return CorpusEntry(name=name, ideal=cover_ideal(graph), source="cover_ideal", graph=graph)


def random_squarefree_ideal(n: int, generators: int, rng: Random) -> MonomialIdeal:
    """Draw `generators` random nonempty variable subsets and minimalize their products.

    Args:
        n: Number of variables.
        generators: Number of subsets drawn (duplicates and multiples collapse).
        rng: Seeded generator; it alone determines the result.
    """

    if n < 1 or generators < 1:
        raise ValueError(f"random_squarefree_ideal needs n >= 1 and generators >= 1; got n={n}, generators={generators}.")
    ring = Ring.standard(n)
    pool = [c for size in range(1, n + 1) for c in combinations(range(1, n + 1), size)]
    subsets = [rng.choice(pool) for _ in range(generators)]
    return minimalize(ring, (ring.product_of(s) for s in subsets))


def random_corpus(*, n: int, generators: int, count: int, seed: int) -> tuple[CorpusEntry, ...]:
    """Return `count` random squarefree ideals in n variables, named `R01`, `R02`, ..."""

    rng = Random(seed)
    return tuple(
        CorpusEntry(name=f"R{i:02d}", ideal=random_squarefree_ideal(n, generators, rng), source="random_squarefree")
        for i in range(1, count + 1)
    )


def default_corpus(seed: int) -> tuple[CorpusEntry, ...]:
    """Paths P3-P5, cycles C3-C6, complete graphs K3-K4 and ten random ideals with n <= 5."""

    entries = [cover_entry(f"P{n}", path_graph(n)) for n in range(3, 6)]
    entries += [cover_entry(f"C{n}", cycle_graph(n)) for n in range(3, 7)]
    entries += [cover_entry(f"K{n}", complete_graph(n)) for n in range(3, 5)]

    rng = Random(seed)
    for i in range(1, DEFAULT_RANDOM_COUNT + 1):
        n = rng.randint(3, DEFAULT_RANDOM_MAX_N)
        ideal = random_squarefree_ideal(n, rng.randint(2, n), rng)
        entries.append(CorpusEntry(name=f"R{i:02d}", ideal=ideal, source="random_squarefree"))
    return tuple(entries)
