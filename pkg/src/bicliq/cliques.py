"""Maximal cliques, clique trees and related tests for chordal graphs."""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass

from .graph import Graph, check_vertex_set, is_clique, is_independent_set
from .ordering import NotChordalError, VertexOrdering, is_chordal, is_peo, peo_or_raise

logger = logging.getLogger(__name__)

VertexSet = tuple[int, ...]


@dataclass(frozen=True)
class CliqueTree:
    """Tree whose nodes are the maximal cliques of a chordal graph.

    ``edges`` holds ``(a, b, mid)`` triples where ``a`` and ``b`` index into
    ``nodes`` and ``mid`` is the intersection of the two cliques.
    """

    nodes: tuple[VertexSet, ...]
    edges: tuple[tuple[int, int, VertexSet], ...]

    def vertices(self) -> VertexSet:
        return tuple(sorted(set().union(*self.nodes)))


def _require_peo(g: Graph, sigma: VertexOrdering) -> None:
    if not is_peo(g, sigma):
        raise NotChordalError("ordering is not a perfect elimination ordering of the graph")


def maximal_cliques_chordal(g: Graph, sigma: VertexOrdering) -> list[VertexSet]:
    """Maximal cliques of a chordal graph given one of its PEOs.

    Each maximal clique is ``{v}`` plus the later neighbours of ``v`` for a
    unique ``v``. The candidate of ``v`` is dropped when some ``u`` whose
    earliest later neighbour is ``v`` has exactly one more later neighbour
    than ``v``: then the candidate of ``u`` strictly contains it.
    Cliques are returned in the PEO order of their first vertex.
    """
    _require_peo(g, sigma)
    pos = sigma.inverse
    later_count = [0] * g.n
    parent = [-1] * g.n
    for v in range(g.n):
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        later_count[v] = len(later)
        if later:
            parent[v] = min(later, key=pos.__getitem__)
    absorbed = [False] * g.n
    for u in range(g.n):
        p = parent[u]
        if p >= 0 and later_count[u] == later_count[p] + 1:
            absorbed[p] = True
    cliques = []
    for v in sigma.order:
        if not absorbed[v]:
            cliques.append(tuple(sorted([v, *(u for u in g.neighbors(v) if pos[u] > pos[v])])))
    return cliques


def mc(g: Graph) -> int:
    """Number of maximal cliques of a chordal graph."""
    return len(maximal_cliques_chordal(g, peo_or_raise(g)))


class _DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def clique_tree_from_cliques(cliques: list[VertexSet]) -> CliqueTree:
    """Maximum-weight spanning tree of the clique intersection graph.

    Weights are intersection sizes; ties go to the lexicographically
    smaller ``(i, j)`` pair. Only overlapping pairs are enumerated, the
    zero-weight edges needed for disconnected graphs are added afterwards
    from node 0, which is what Kruskal would pick for them.
    """
    k = len(cliques)
    containing: dict[int, list[int]] = defaultdict(list)
    for i, c in enumerate(cliques):
        for v in c:
            containing[v].append(i)
    weight: dict[tuple[int, int], int] = defaultdict(int)
    for idx in containing.values():
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                weight[idx[a], idx[b]] += 1

    dsu = _DisjointSet(k)
    chosen: list[tuple[int, int]] = []
    for (i, j), _ in sorted(weight.items(), key=lambda kv: (-kv[1], kv[0])):
        if dsu.union(i, j):
            chosen.append((i, j))
    for j in range(1, k):
        if dsu.union(0, j):
            chosen.append((0, j))
    chosen.sort()
    sets = [set(c) for c in cliques]
    edges = tuple((i, j, tuple(sorted(sets[i] & sets[j]))) for i, j in chosen)
    return CliqueTree(tuple(cliques), edges)


def build_clique_tree(g: Graph) -> CliqueTree:
    """A clique tree of the chordal graph ``g``."""
    if g.n == 0:
        raise ValueError("clique tree needs at least one vertex")
    return clique_tree_from_cliques(maximal_cliques_chordal(g, peo_or_raise(g)))


def clique_tree_defect(g: Graph, t: CliqueTree) -> str | None:
    """Describe the first way ``t`` fails to be a clique tree of ``g``, or None."""
    for node in t.nodes:
        if any(not 0 <= v < g.n for v in node):
            return f"node {node} has vertices outside 0..{g.n - 1}"
    if g.n == 0:
        return "graph has no vertices"
    chordal, sigma = is_chordal(g)
    if not chordal:
        return "graph is not chordal"
    expected = set(maximal_cliques_chordal(g, sigma))
    nodes = [tuple(sorted(c)) for c in t.nodes]
    if len(set(nodes)) != len(nodes) or set(nodes) != expected:
        return "nodes are not exactly the maximal cliques of the graph"

    k = len(nodes)
    if len(t.edges) != k - 1:
        return f"{len(t.edges)} edges for {k} nodes"
    dsu = _DisjointSet(k)
    tree_adj: list[list[int]] = [[] for _ in range(k)]
    for a, b, mid in t.edges:
        if not (0 <= a < k and 0 <= b < k) or a == b:
            return f"bad edge ({a}, {b})"
        if tuple(sorted(mid)) != tuple(sorted(set(nodes[a]) & set(nodes[b]))):
            return f"edge ({a}, {b}) has wrong middle set {mid}"
        if not dsu.union(a, b):
            return f"edge ({a}, {b}) closes a cycle"
        tree_adj[a].append(b)
        tree_adj[b].append(a)

    # Clique-intersection property, per vertex: its nodes form a subtree.
    holders: dict[int, set[int]] = defaultdict(set)
    for i, c in enumerate(nodes):
        for v in c:
            holders[v].add(i)
    for v, hs in holders.items():
        first = next(iter(hs))
        seen = {first}
        stack = [first]
        while stack:
            x = stack.pop()
            for y in tree_adj[x]:
                if y in hs and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != hs:
            return f"nodes containing vertex {v} are not connected in the tree"
    return None


def verify_clique_tree(g: Graph, t: CliqueTree) -> bool:
    defect = clique_tree_defect(g, t)
    if defect is not None:
        logger.debug("clique tree rejected: %s", defect)
    return defect is None


def is_clique_vertex_irreducible(g: Graph) -> bool:
    """Whether every maximal clique owns a vertex found in no other maximal clique."""
    cliques = maximal_cliques_chordal(g, peo_or_raise(g))
    count = [0] * g.n
    for c in cliques:
        for v in c:
            count[v] += 1
    return all(any(count[v] == 1 for v in c) for c in cliques)


def is_split(g: Graph) -> tuple[bool, tuple[VertexSet, VertexSet] | None]:
    """Split-graph test with a (clique, independent set) witness.

    Uses the degree-sequence characterisation: with degrees sorted in
    decreasing order and ``k`` the largest index with ``d_k >= k - 1``,
    ``g`` is split iff ``sum(d[:k]) == k(k-1) + sum(d[k:])``. The top
    ``k`` vertices then form the clique side.
    """
    by_degree = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    d = [g.degree(v) for v in by_degree]
    k = 0
    for i, di in enumerate(d, start=1):
        if di >= i - 1:
            k = i
    if sum(d[:k]) != k * (k - 1) + sum(d[k:]):
        return False, None
    clique_side = tuple(sorted(by_degree[:k]))
    indep_side = tuple(sorted(by_degree[k:]))
    if not (is_clique(g, clique_side) and is_independent_set(g, indep_side)):
        raise AssertionError("degree-sequence witness failed verification")
    return True, (clique_side, indep_side)


def max_independent_set_chordal(g: Graph, sigma: VertexOrdering) -> VertexSet:
    """Maximum independent set of a chordal graph by a greedy PEO scan."""
    _require_peo(g, sigma)
    taken: set[int] = set()
    for v in sigma.order:
        if g.adj(v).isdisjoint(taken):
            taken.add(v)
    return check_vertex_set(g, taken)
