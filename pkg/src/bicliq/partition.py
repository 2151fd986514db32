"""Bicliques, biclique partitions and their verification."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .graph import Graph, check_vertex_set, is_independent_set

Edge = tuple[int, int]


def _side_key(side: tuple[int, ...]) -> tuple[int, int]:
    # Empty sides sort last so the non-empty one becomes ``left``.
    return (0, side[0]) if side else (1, 0)


@dataclass(frozen=True, init=False)
class Biclique:
    """Complete bipartite subgraph ``{L, R}`` with edge set ``L x R``.

    The pair is unordered: sides are stored sorted, and ``left`` is the side
    holding the smallest vertex. Either side may be empty here; a
    :class:`BicliquePartition` refuses such parts.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]

    def __init__(self, left: Iterable[int], right: Iterable[int]):
        a, b = tuple(sorted(set(left))), tuple(sorted(set(right)))
        if not set(a).isdisjoint(b):
            raise ValueError(f"biclique sides overlap: {a} / {b}")
        if _side_key(b) < _side_key(a):
            a, b = b, a
        object.__setattr__(self, "left", a)
        object.__setattr__(self, "right", b)

    def edges(self) -> Iterator[Edge]:
        for u in self.left:
            for v in self.right:
                yield (u, v) if u < v else (v, u)

    @property
    def size(self) -> int:
        return len(self.left) * len(self.right)

    def __repr__(self) -> str:
        return f"Biclique({list(self.left)}x{list(self.right)})"


@dataclass(frozen=True)
class BicliquePartition:
    """Ordered collection of bicliques with non-empty sides."""

    parts: tuple[Biclique, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        for i, b in enumerate(self.parts):
            if not b.left or not b.right:
                raise ValueError(f"part {i} has an empty side")

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[Biclique]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> Biclique:
        return self.parts[i]


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`verify_partition`; truthy on success."""

    ok: bool
    message: str = "PASS"
    part: int | None = None
    edge: Edge | None = None

    def __bool__(self) -> bool:
        return self.ok


def _check_biclique(g: Graph, b: Biclique) -> None:
    check_vertex_set(g, b.left)
    check_vertex_set(g, b.right)


def is_biclique_subgraph(g: Graph, b: Biclique) -> bool:
    _check_biclique(g, b)
    return all(g.adj(u).issuperset(b.right) for u in b.left)


def is_partitioned_biclique(g: Graph, b: Biclique) -> bool:
    """Biclique whose leftover vertices ``V \\ (L u R)`` are independent.

    Exactly then the edges of ``{L, R}``, ``G(V \\ L)`` and ``G(V \\ R)``
    partition the edges of ``g``.
    """
    if not is_biclique_subgraph(g, b):
        return False
    used = set(b.left) | set(b.right)
    return is_independent_set(g, (v for v in range(g.n) if v not in used))


def _induced_edges(g: Graph, keep: set[int]) -> frozenset[Edge]:
    return frozenset((u, v) for u, v in g.edges() if u in keep and v in keep)


def decomposition_edges(
    g: Graph, b: Biclique
) -> tuple[frozenset[Edge], frozenset[Edge], frozenset[Edge]]:
    """Split the edges of ``g`` along a biclique subgraph.

    Returns ``(cross, without_left, without_right)``: the biclique's own
    edges, the edges of ``G(V \\ L)`` and the edges of ``G(V \\ R)``.
    """
    if not is_biclique_subgraph(g, b):
        raise ValueError(f"{b} is not a biclique subgraph")
    everything = set(range(g.n))
    return (
        frozenset(b.edges()),
        _induced_edges(g, everything - set(b.left)),
        _induced_edges(g, everything - set(b.right)),
    )


def verify_partition(g: Graph, p: BicliquePartition | Iterable[Biclique]) -> Verdict:
    """Check that the parts are bicliques of ``g`` covering each edge exactly once.

    Parts are scanned in order, so the reported violation is the first
    non-biclique part or the first repeated edge; missing edges are
    reported afterwards, smallest first.
    """
    seen: set[Edge] = set()
    for i, b in enumerate(p):
        if any(not 0 <= v < g.n for v in (*b.left, *b.right)):
            return Verdict(False, f"part {i} has a vertex out of range", part=i)
        if not b.left or not b.right:
            return Verdict(False, f"part {i} has an empty side", part=i)
        for e in sorted(b.edges()):
            if not g.has_edge(*e):
                return Verdict(False, f"part {i} uses non-edge {e[0]} {e[1]}", part=i, edge=e)
            if e in seen:
                return Verdict(False, f"duplicate edge {e[0]} {e[1]}", part=i, edge=e)
            seen.add(e)
    for e in g.edges():
        if e not in seen:
            return Verdict(False, f"uncovered edge {e[0]} {e[1]}", edge=e)
    return Verdict(True)
