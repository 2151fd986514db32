"""Lexicographic breadth-first search and perfect elimination orderings."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .graph import Graph


class NotChordalError(ValueError):
    """Raised when an operation that needs a chordal graph receives another."""


@dataclass(frozen=True)
class VertexOrdering:
    """A bijection between positions ``0..n-1`` and vertices.

    ``order[i]`` is the vertex at position ``i`` and ``inverse[v]`` is the
    position of vertex ``v``.
    """

    order: tuple[int, ...]
    inverse: tuple[int, ...]

    @classmethod
    def from_sequence(cls, order: Sequence[int]) -> VertexOrdering:
        order = tuple(order)
        n = len(order)
        inverse = [-1] * n
        for i, v in enumerate(order):
            if not 0 <= v < n or inverse[v] != -1:
                raise ValueError(f"not a permutation of 0..{n - 1}: {order}")
            inverse[v] = i
        return cls(order, tuple(inverse))

    def reversed(self) -> VertexOrdering:
        return VertexOrdering.from_sequence(self.order[::-1])

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __getitem__(self, i: int) -> int:
        return self.order[i]


class _Cell:
    # One class of the refinement: vertices sharing the same label so far.
    # ``members`` is a dict used as an insertion-ordered set kept in
    # increasing vertex id, so its first key is the tie-break choice.
    __slots__ = ("members", "prev", "next", "split", "stamp")

    def __init__(self, members: dict[int, None]):
        self.members = members
        self.prev: _Cell | None = None
        self.next: _Cell | None = None
        self.split: _Cell | None = None
        self.stamp = -1


def lexbfs(g: Graph, start: int) -> VertexOrdering:
    """Lexicographic breadth-first search from ``start``.

    Among vertices with the lexicographically largest label the one with
    the smallest id is numbered next. Runs in O(n + m) using partition
    refinement: the cell list is ordered by decreasing label, and numbering
    a vertex moves its unnumbered neighbours into a new cell in front of
    their current one.
    """
    n = g.n
    if n == 0:
        raise ValueError("lexbfs needs at least one vertex")
    if not 0 <= start < n:
        raise ValueError(f"start vertex {start} out of range for n={n}")

    head = _Cell({start: None})
    rest = _Cell({v: None for v in range(n) if v != start})
    if rest.members:
        head.next, rest.prev = rest, head
    cell_of: list[_Cell] = [rest] * n
    cell_of[start] = head
    numbered = [False] * n
    order: list[int] = []

    def unlink(c: _Cell) -> None:
        nonlocal head
        if c.prev is not None:
            c.prev.next = c.next
        else:
            head = c.next
        if c.next is not None:
            c.next.prev = c.prev

    for step in range(n):
        u = next(iter(head.members))
        del head.members[u]
        if not head.members:
            unlink(head)
        numbered[u] = True
        order.append(u)

        touched: list[_Cell] = []
        for w in g.neighbors(u):
            if numbered[w]:
                continue
            old = cell_of[w]
            if old.stamp != step:
                old.stamp = step
                new = _Cell({})
                new.prev, new.next = old.prev, old
                if old.prev is not None:
                    old.prev.next = new
                else:
                    head = new
                old.prev = new
                old.split = new
                touched.append(old)
            del old.members[w]
            old.split.members[w] = None
            cell_of[w] = old.split
        for old in touched:
            if not old.members:
                unlink(old)

    return VertexOrdering.from_sequence(order)


def _check_ordering(g: Graph, sigma: VertexOrdering) -> None:
    if len(sigma.order) != g.n:
        raise ValueError(f"ordering has {len(sigma.order)} vertices, graph has {g.n}")


def later_neighbors(g: Graph, sigma: VertexOrdering, v: int) -> list[int]:
    """Neighbours of ``v`` placed after it, in ordering position."""
    pos = sigma.inverse
    return sorted((u for u in g.neighbors(v) if pos[u] > pos[v]), key=pos.__getitem__)


def is_peo(g: Graph, sigma: VertexOrdering) -> bool:
    """Whether ``sigma`` is a perfect elimination ordering of ``g``.

    For each vertex, let ``p`` be its earliest later neighbour; the
    remaining later neighbours must all be adjacent to ``p``.
    """
    _check_ordering(g, sigma)
    pos = sigma.inverse
    for v in sigma.order:
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        if len(later) < 2:
            continue
        p = min(later, key=pos.__getitem__)
        adj_p = g.adj(p)
        if any(u != p and u not in adj_p for u in later):
            return False
    return True


def is_chordal(g: Graph) -> tuple[bool, VertexOrdering | None]:
    """Chordality test by reversed LexBFS from vertex 0.

    Returns ``(True, peo)`` or ``(False, None)``.
    """
    sigma = lexbfs(g, 0).reversed()
    if is_peo(g, sigma):
        return True, sigma
    return False, None


def peo_or_raise(g: Graph) -> VertexOrdering:
    ok, sigma = is_chordal(g)
    if not ok:
        raise NotChordalError("graph is not chordal")
    return sigma
