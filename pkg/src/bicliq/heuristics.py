"""Biclique partitions of co-chordal graphs.

Two constructions, both producing ``mc(G^c) - 1`` parts:

* :func:`partition_via_clique_tree` cuts an edge of a clique tree of the
  complement, emits the biclique formed by the two sides minus the middle
  set, and recurses on both subtrees.
* :func:`partition_via_lexbfs` sweeps a perfect elimination ordering of the
  complement and peels off one biclique per maximal clique.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations
from typing import Literal, NamedTuple

from ._rng import SplitMix64
from .cliques import CliqueTree, clique_tree_from_cliques, maximal_cliques_chordal
from .graph import Graph, complement
from .ordering import VertexOrdering, is_chordal, lexbfs
from .partition import Biclique, BicliquePartition

Method = Literal["clique-tree", "lexbfs"]
METHODS: tuple[str, ...] = ("clique-tree", "lexbfs")


class NotCoChordalError(ValueError):
    """The complement of the input graph is not chordal.

    ``cycle`` holds a chordless cycle of length >= 4 in the complement when
    one was searched for (small graphs), and ``ordering`` the reversed LexBFS
    order that failed the perfect-elimination check.
    """

    def __init__(self, cycle: list[int] | None, ordering: VertexOrdering | None):
        self.cycle = cycle
        self.ordering = ordering
        if cycle is not None:
            detail = "chordless cycle in complement: " + " ".join(map(str, cycle))
        elif ordering is not None:
            detail = "reversed LexBFS order is not a PEO: " + " ".join(map(str, ordering.order))
        else:
            detail = "complement is not chordal"
        super().__init__(f"not co-chordal ({detail})")


@dataclass(frozen=True)
class EdgeChoiceStrategy:
    """How the clique-tree heuristic picks the edge to cut.

    ``first`` takes the lowest-index edge of the current subtree; ``random``
    draws uniformly among them from a SplitMix64 stream seeded by ``seed``.
    """

    kind: Literal["first", "random"] = "first"
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in ("first", "random"):
            raise ValueError(f"unknown edge choice strategy {self.kind!r}")
        if self.kind == "random" and self.seed is None:
            raise ValueError("random strategy needs an explicit seed")

    @classmethod
    def parse(cls, text: str) -> EdgeChoiceStrategy:
        """Parse ``first`` or ``random:<seed>``."""
        if text == "first":
            return cls()
        kind, _, seed = text.partition(":")
        if kind == "random" and seed:
            return cls("random", int(seed))
        raise ValueError(f"bad strategy {text!r}, expected 'first' or 'random:<seed>'")

    def __str__(self) -> str:
        return "first" if self.kind == "first" else f"random:{self.seed}"


class Step(NamedTuple):
    """One emitted part together with the vertex set of the residual graph it splits."""

    biclique: Biclique
    residual: tuple[int, ...]


def _check_tree_shape(t: CliqueTree) -> None:
    k = len(t.nodes)
    if k == 0:
        raise ValueError("clique tree has no nodes")
    if len(t.edges) != k - 1:
        raise ValueError(f"clique tree has {len(t.edges)} edges for {k} nodes")
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, mid in t.edges:
        if not (0 <= a < k and 0 <= b < k):
            raise ValueError(f"clique tree edge ({a}, {b}) out of range")
        if set(mid) != set(t.nodes[a]) & set(t.nodes[b]):
            raise ValueError(f"middle set of edge ({a}, {b}) is not the clique intersection")
        ra, rb = find(a), find(b)
        if ra == rb:
            raise ValueError("clique tree edges contain a cycle")
        parent[rb] = ra


def clique_tree_steps(
    t: CliqueTree, strategy: EdgeChoiceStrategy = EdgeChoiceStrategy()
) -> Iterator[Step]:
    """Yield the parts of the clique-tree heuristic in preorder.

    Subtrees are handled as node/edge index lists into ``t``; nothing is
    copied. The residual of a step is the union of the cliques in the
    subtree being cut.
    """
    _check_tree_shape(t)
    rng = SplitMix64(strategy.seed) if strategy.kind == "random" else None
    stack = [(list(range(len(t.nodes))), list(range(len(t.edges))))]
    while stack:
        nodes, edges = stack.pop()
        if len(nodes) <= 1:
            continue
        pick = edges[rng.below(len(edges))] if rng is not None else edges[0]
        a, _, mid = t.edges[pick]

        adj: dict[int, list[tuple[int, int]]] = {x: [] for x in nodes}
        for e in edges:
            if e != pick:
                x, y, _ = t.edges[e]
                adj[x].append((y, e))
                adj[y].append((x, e))
        side = {a}
        todo = [a]
        while todo:
            x = todo.pop()
            for y, _ in adj[x]:
                if y not in side:
                    side.add(y)
                    todo.append(y)

        nodes1 = [x for x in nodes if x in side]
        nodes2 = [x for x in nodes if x not in side]
        edges1 = [e for e in edges if e != pick and t.edges[e][0] in side]
        edges2 = [e for e in edges if e != pick and t.edges[e][0] not in side]
        mid_set = set(mid)
        left = set().union(*(t.nodes[x] for x in nodes1)) - mid_set
        right = set().union(*(t.nodes[x] for x in nodes2)) - mid_set
        residual = tuple(sorted(left | right | mid_set))
        yield Step(Biclique(left, right), residual)
        stack.append((nodes2, edges2))
        stack.append((nodes1, edges1))


def partition_via_clique_tree(
    t: CliqueTree, strategy: EdgeChoiceStrategy = EdgeChoiceStrategy()
) -> BicliquePartition:
    """Biclique partition of the complement of the graph ``t`` is a clique tree of."""
    return BicliquePartition(tuple(step.biclique for step in clique_tree_steps(t, strategy)))


def _lexbfs_steps(gc: Graph, sigma: VertexOrdering) -> Iterator[Step]:
    n = gc.n
    alive = [True] * n
    in_left = [False] * n
    for v in sigma.order:
        if not alive[v]:
            continue
        residual = tuple(w for w in range(n) if alive[w])
        nbrs = [u for u in gc.neighbors(v) if alive[u]]
        closed = set(nbrs)
        closed.add(v)
        left = [w for w in residual if w not in closed]
        for w in left:
            in_left[w] = True
        right = [v]
        for u in nbrs:
            if not any(in_left[w] for w in gc.neighbors(u)):
                right.append(u)
        for w in left:
            in_left[w] = False
        for r in right:
            alive[r] = False
        if left:
            yield Step(Biclique(left, right), residual)


def _complement_peo(g: Graph) -> tuple[Graph, VertexOrdering]:
    if g.n == 0:
        raise ValueError("graph has no vertices")
    gc = complement(g)
    ok, sigma = is_chordal(gc)
    if not ok:
        raise NotCoChordalError(find_chordless_cycle(gc) if gc.n <= 12 else None,
                                lexbfs(gc, 0).reversed())
    return gc, sigma


def lexbfs_steps(g: Graph) -> Iterator[Step]:
    """Yield the parts of the PEO sweep with the residual vertex set each splits."""
    gc, sigma = _complement_peo(g)
    return _lexbfs_steps(gc, sigma)


def partition_via_lexbfs(g: Graph) -> BicliquePartition:
    """Biclique partition of a co-chordal graph by the PEO sweep.

    Runs in O(n (n + m_c)) where ``m_c`` is the complement's edge count.
    """
    return BicliquePartition(tuple(step.biclique for step in lexbfs_steps(g)))


def partition_auto(
    g: Graph,
    method: Method = "lexbfs",
    strategy: EdgeChoiceStrategy = EdgeChoiceStrategy(),
) -> tuple[BicliquePartition, int]:
    """Partition a co-chordal graph and report ``mc`` of its complement.

    Raises :class:`NotCoChordalError` when the complement is not chordal.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}, expected one of {METHODS}")
    gc, sigma = _complement_peo(g)
    cliques = maximal_cliques_chordal(gc, sigma)
    if method == "lexbfs":
        parts = tuple(step.biclique for step in _lexbfs_steps(gc, sigma))
    else:
        tree = clique_tree_from_cliques(cliques)
        parts = tuple(step.biclique for step in clique_tree_steps(tree, strategy))
    return BicliquePartition(parts), len(cliques)


def find_chordless_cycle(g: Graph) -> list[int] | None:
    """Brute-force search for an induced cycle of length >= 4.

    Tries vertex subsets in increasing size; meant for small graphs only.
    Returns the cycle as a vertex sequence, or None if ``g`` is chordal.
    """
    for size in range(4, g.n + 1):
        for subset in combinations(range(g.n), size):
            inside = set(subset)
            if any(len(g.adj(v) & inside) != 2 for v in subset):
                continue
            cycle = [subset[0]]
            prev = None
            while True:
                cur = cycle[-1]
                nxt = [u for u in g.neighbors(cur) if u in inside and u != prev]
                step = nxt[0]
                if step == cycle[0]:
                    break
                prev = cur
                cycle.append(step)
            if len(cycle) == size:
                return cycle
    return None
