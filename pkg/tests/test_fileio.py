import pytest
from hypothesis import given

from bicliq import Biclique, BicliquePartition, Graph
from bicliq.fileio import (
    FormatError,
    format_graph,
    format_partition,
    parse_graph,
    parse_partition,
    read_graph,
    read_partition,
    write_graph,
    write_partition,
)
from conftest import C4, graphs


def test_parse_graph_with_comments():
    text = "# square\np 4 4\n0 1\n1 2  # inline\n\n2 3\n3 0\n"
    assert parse_graph(text) == C4


def test_format_graph_is_canonical():
    assert format_graph(C4) == "p 4 4\n0 1\n0 3\n1 2\n2 3\n"
    assert format_graph(Graph(0)) == "p 0 0\n"


@given(graphs(max_n=10))
def test_graph_round_trip(g):
    assert parse_graph(format_graph(g)) == g


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "missing header"),
        ("0 1\n", "header"),
        ("p 3\n", "header"),
        ("p x 1\n", "non-integer"),
        ("p 3 1\n0 3\n", "out of range"),
        ("p 3 1\n1 1\n", "self-loop"),
        ("p 3 2\n0 1\n1 0\n", "duplicate edge 0 1"),
        ("p 3 2\n0 1\n", "header says 2"),
        ("p 3 1\n0 1 2\n", "expected 'u v'"),
        ("p -1 0\n", "negative"),
    ],
)
def test_parse_graph_errors(text, fragment):
    with pytest.raises(FormatError, match=fragment):
        parse_graph(text)


def test_partition_round_trip():
    p = BicliquePartition((Biclique([0, 2], [1, 3]), Biclique([4], [5, 6])))
    text = format_partition(p)
    assert text == "L: 0 2 | R: 1 3\nL: 4 | R: 5 6\n"
    assert parse_partition(text) == p
    assert parse_partition("# nothing\n") == BicliquePartition()


@pytest.mark.parametrize(
    "text",
    ["L: 0 R: 1\n", "L: | R: 1\n", "L: 0 | X: 1\n", "L: 0 a | R: 1\n",
     "L: 0 0 | R: 1\n", "L: 0 1 | R: 1\n", "L: -1 | R: 1\n"],
)
def test_parse_partition_errors(text):
    with pytest.raises(FormatError):
        parse_partition(text)


def test_file_helpers(tmp_path):
    gpath, ppath = tmp_path / "g.txt", tmp_path / "p.txt"
    write_graph(C4, gpath)
    assert read_graph(gpath) == C4
    p = BicliquePartition((Biclique([0, 2], [1, 3]),))
    write_partition(p, ppath)
    assert read_partition(ppath) == p
    assert b"\r" not in gpath.read_bytes()
