"""Seeded instance generators.

Random kinds draw from :class:`~bicliq._rng.SplitMix64`, so a given
:class:`GenSpec` yields the same graph on every platform.

The chordal generator grows the graph one simplicial vertex at a time,
which covers many chordal graphs but does not sample them uniformly.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._rng import SplitMix64
from .graph import Graph, complement

KINDS = ("chordal", "split", "complete", "cycle", "path", "star", "empty", "erdos-renyi")
RANDOM_KINDS = ("chordal", "split", "erdos-renyi")


@dataclass(frozen=True)
class GenSpec:
    """Parameters for :func:`gen`.

    ``clique_size`` is only read by the split kind (clique side size; the
    remaining ``n - clique_size`` vertices are independent). It defaults to
    ``n // 2``.
    """

    kind: str
    n: int
    density: float = 0.5
    seed: int | None = None
    clique_size: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError("density must lie in [0, 1]")
        if self.kind in RANDOM_KINDS:
            if self.seed is None:
                raise ValueError(f"kind {self.kind!r} needs a seed")
            if not 0 <= self.seed < 1 << 64:
                raise ValueError("seed must be a 64-bit unsigned integer")
        if self.kind == "cycle" and self.n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if self.clique_size is not None and not 0 <= self.clique_size <= self.n:
            raise ValueError("clique_size must lie in [0, n]")


def _random_chordal(n: int, density: float, rng: SplitMix64) -> Graph:
    # Each new vertex attaches to a random subset of a random maximal clique,
    # keeping each member with probability ``density``. The new vertex is
    # simplicial when added, so insertion order reversed is a PEO.
    edges = []
    cliques: list[list[int]] = []
    for v in range(n):
        if not cliques:
            cliques.append([v])
            continue
        k = rng.below(len(cliques))
        base = cliques[k]
        chosen = [u for u in base if rng.random() < density]
        edges.extend((u, v) for u in chosen)
        if len(chosen) == len(base):
            base.append(v)
        else:
            cliques.append(chosen + [v])
    return Graph(n, edges)


def _random_split(n: int, clique_size: int, density: float, rng: SplitMix64) -> Graph:
    edges = [(u, v) for u in range(clique_size) for v in range(u + 1, clique_size)]
    for u in range(clique_size):
        for v in range(clique_size, n):
            if rng.random() < density:
                edges.append((u, v))
    return Graph(n, edges)


def gen(spec: GenSpec) -> Graph:
    n = spec.n
    if spec.kind == "complete":
        return Graph.complete(n)
    if spec.kind == "empty":
        return Graph(n)
    if spec.kind == "path":
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if spec.kind == "cycle":
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    if spec.kind == "star":
        return Graph(n, [(0, i) for i in range(1, n)])

    rng = SplitMix64(spec.seed)
    if spec.kind == "chordal":
        return _random_chordal(n, spec.density, rng)
    if spec.kind == "split":
        size = n // 2 if spec.clique_size is None else spec.clique_size
        return _random_split(n, size, spec.density, rng)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < spec.density]
    return Graph(n, edges)


def gen_co_chordal(spec: GenSpec) -> Graph:
    """Complement of a generated chordal graph."""
    if spec.kind != "chordal":
        raise ValueError("gen_co_chordal needs a chordal spec")
    return complement(gen(spec))
