"""Text formats for graphs and partitions.

Graph file::

    # comment
    p <n> <m>
    u v          (one line per edge, 0 <= u < v < n)

Partition file, one part per line::

    L: 0 2 | R: 1 3
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph
from .partition import Biclique, BicliquePartition


class FormatError(ValueError):
    """Malformed graph or partition file."""


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_graph(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in _content_lines(text):
        fields = line.split()
        if header is None:
            if len(fields) != 3 or fields[0] != "p":
                raise FormatError(f"line {lineno}: expected header 'p <n> <m>'")
            try:
                header = (int(fields[1]), int(fields[2]))
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer header") from None
            if header[0] < 0 or header[1] < 0:
                raise FormatError(f"line {lineno}: negative count in header")
            continue
        if len(fields) != 2:
            raise FormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex") from None
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop at {u}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise FormatError(f"line {lineno}: duplicate edge {e[0]} {e[1]}")
        seen.add(e)
        edges.append(e)
    if header is None:
        raise FormatError("missing header 'p <n> <m>'")
    if len(edges) != header[1]:
        raise FormatError(f"header says {header[1]} edges, found {len(edges)}")
    return Graph(header[0], edges)


def format_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _parse_side(text: str, tag: str, lineno: int) -> list[int]:
    text = text.strip()
    if not text.startswith(tag + ":"):
        raise FormatError(f"line {lineno}: expected '{tag}:'")
    try:
        side = [int(x) for x in text[len(tag) + 1:].split()]
    except ValueError:
        raise FormatError(f"line {lineno}: non-integer vertex") from None
    if not side:
        raise FormatError(f"line {lineno}: empty {tag} side")
    if any(x < 0 for x in side) or len(set(side)) != len(side):
        raise FormatError(f"line {lineno}: bad {tag} side")
    return side


def parse_partition(text: str) -> BicliquePartition:
    parts = []
    for lineno, line in _content_lines(text):
        left_text, bar, right_text = line.partition("|")
        if not bar:
            raise FormatError(f"line {lineno}: expected 'L: ... | R: ...'")
        left = _parse_side(left_text, "L", lineno)
        right = _parse_side(right_text, "R", lineno)
        try:
            parts.append(Biclique(left, right))
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    return BicliquePartition(tuple(parts))


def format_partition(p: BicliquePartition) -> str:
    return "".join(
        f"L: {' '.join(map(str, b.left))} | R: {' '.join(map(str, b.right))}\n" for b in p
    )


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g), encoding="utf-8", newline="\n")


def read_partition(path: str | Path) -> BicliquePartition:
    return parse_partition(Path(path).read_text(encoding="utf-8"))


def write_partition(p: BicliquePartition, path: str | Path) -> None:
    Path(path).write_text(format_partition(p), encoding="utf-8", newline="\n")
