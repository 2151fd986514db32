import pytest
from hypothesis import given, settings, strategies as st

from bicliq import GenSpec, Graph, complement, gen, gen_co_chordal, is_chordal, is_split, partition_auto
from bicliq._rng import SplitMix64
from bicliq.fileio import format_graph


def test_splitmix64_reference_stream():
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_splitmix64_helpers():
    rng = SplitMix64(123)
    xs = [rng.random() for _ in range(1000)]
    assert all(0.0 <= x < 1.0 for x in xs)
    assert all(0 <= rng.below(7) < 7 for _ in range(1000))
    with pytest.raises(ValueError):
        rng.below(0)


def test_named_kinds():
    assert gen(GenSpec("complete", 4)) == Graph.complete(4)
    assert gen(GenSpec("empty", 3)) == Graph(3)
    assert gen(GenSpec("path", 4)) == Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert gen(GenSpec("cycle", 4)) == Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert gen(GenSpec("star", 4)) == Graph(4, [(0, 1), (0, 2), (0, 3)])


def test_examples():
    assert is_chordal(gen(GenSpec("chordal", 30, 0.5, 7)))[0]
    assert is_split(gen(GenSpec("split", 8, 0.3, 1, clique_size=4)))[0]
    g = gen_co_chordal(GenSpec("chordal", 10, 0.5, 3))
    p, count = partition_auto(g)
    assert len(p) == count - 1
    assert complement(gen(GenSpec("complete", 5))) == Graph(5)


def test_determinism_byte_for_byte():
    spec = GenSpec("chordal", 25, 0.4, 99)
    assert format_graph(gen_co_chordal(spec)) == format_graph(gen_co_chordal(spec))
    assert format_graph(gen(GenSpec("split", 12, 0.5, 5))) == format_graph(
        gen(GenSpec("split", 12, 0.5, 5)))
    assert gen(GenSpec("chordal", 25, 0.4, 98)) != gen(spec)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(kind="tree", n=3),
        dict(kind="chordal", n=3),  # missing seed
        dict(kind="chordal", n=3, seed=-1),
        dict(kind="chordal", n=3, seed=1 << 64),
        dict(kind="path", n=-1),
        dict(kind="erdos-renyi", n=3, density=1.5, seed=1),
        dict(kind="cycle", n=2),
        dict(kind="split", n=4, seed=1, clique_size=5),
    ],
)
def test_invalid_specs(kwargs):
    with pytest.raises(ValueError):
        GenSpec(**kwargs)


def test_gen_co_chordal_needs_chordal_kind():
    with pytest.raises(ValueError):
        gen_co_chordal(GenSpec("complete", 3))


@settings(max_examples=60)
@given(st.integers(0, 60), st.floats(0.0, 1.0), st.integers(0, 2**64 - 1))
def test_chordal_kind_always_chordal(n, density, seed):
    g = gen(GenSpec("chordal", n, density, seed))
    assert g.n == n
    if n:
        assert is_chordal(g)[0]


@given(st.integers(0, 30), st.data(), st.floats(0.0, 1.0), st.integers(0, 2**64 - 1))
def test_split_kind_always_split(n, data, density, seed):
    size = data.draw(st.integers(0, n))
    g = gen(GenSpec("split", n, density, seed, clique_size=size))
    assert is_split(g)[0]
