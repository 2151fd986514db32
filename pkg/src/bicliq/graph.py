"""Immutable simple graphs over dense integer vertex ids.

Vertices are ``0..n-1``. Each vertex keeps its neighbours both as a
``frozenset`` (membership tests) and as a sorted tuple (canonical iteration).
Nothing here mutates a graph after construction; operations such as
:func:`complement` and :func:`induced_subgraph` return new values.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of (int, int)
        Edge list. Order of the endpoints does not matter; duplicates are
        collapsed. Self-loops and out-of-range endpoints raise ``ValueError``.
    """

    __slots__ = ("n", "m", "_adj", "_nbrs", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self._init(n, [frozenset(a) for a in adj])

    def _init(self, n: int, adj: list[frozenset[int]]) -> None:
        self.n = n
        self._adj = tuple(adj)
        self._nbrs = tuple(tuple(sorted(a)) for a in adj)
        self.m = sum(len(a) for a in adj) // 2
        self._hash = None

    @classmethod
    def _from_adjacency(cls, adj: list[frozenset[int]]) -> Graph:
        # Trusted constructor: caller guarantees symmetry and no self-loops.
        g = cls.__new__(cls)
        g._init(len(adj), adj)
        return g

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = frozenset(range(n))
        return cls._from_adjacency([full - {v} for v in range(n)])

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbours of ``v``."""
        return self._nbrs[v]

    def adj(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u in range(self.n):
            for v in self._nbrs[u]:
                if v > u:
                    yield (u, v)

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._nbrs == other._nbrs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self._nbrs))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def check_vertex_set(g: Graph, s: Iterable[int]) -> tuple[int, ...]:
    """Return ``s`` as a sorted, duplicate-free tuple of vertices of ``g``."""
    out = tuple(sorted(set(s)))
    for v in out:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return out


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of ``g``."""
    full = frozenset(range(g.n))
    return Graph._from_adjacency([full - g.adj(v) - {v} for v in range(g.n)])


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``s``, relabelled to ``0..|s|-1``.

    Returns the subgraph and a tuple mapping each new id to its original id.
    New ids follow the increasing order of the original ids.
    """
    keep = check_vertex_set(g, s)
    new_id = {v: i for i, v in enumerate(keep)}
    adj = [frozenset(new_id[u] for u in g.adj(v) if u in new_id) for v in keep]
    return Graph._from_adjacency(adj), keep


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    members = check_vertex_set(g, s)
    inside = set(members)
    return all(g.adj(v).isdisjoint(inside) for v in members)


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    members = check_vertex_set(g, s)
    inside = set(members)
    return all(inside - {v} <= g.adj(v) for v in members)
