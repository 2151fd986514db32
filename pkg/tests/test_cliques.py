import pytest
from hypothesis import given, settings, strategies as st

from bicliq import (
    CliqueTree,
    GenSpec,
    Graph,
    NotChordalError,
    VertexOrdering,
    build_clique_tree,
    gen,
    is_clique,
    is_independent_set,
    is_chordal,
    is_clique_vertex_irreducible,
    is_split,
    max_independent_set_chordal,
    maximal_cliques_chordal,
    mc,
    verify_clique_tree,
)
from bicliq.cliques import clique_tree_defect
from conftest import C4, K3, K4, K5, P3, P4, STAR3, TWO_K2, graphs
from oracles import all_graphs, brute_alpha, brute_is_split, brute_maximal_cliques

def order(*vs):
    return VertexOrdering.from_sequence(vs)


def peo(g):
    ok, sigma = is_chordal(g)
    assert ok
    return sigma


def test_maximal_cliques_examples():
    assert maximal_cliques_chordal(P3, order(0, 2, 1)) == [(0, 1), (1, 2)]
    assert maximal_cliques_chordal(K4, peo(K4)) == [(0, 1, 2, 3)]
    assert sorted(maximal_cliques_chordal(Graph(3), order(0, 1, 2))) == [(0,), (1,), (2,)]


def test_maximal_cliques_rejects_non_peo():
    with pytest.raises(NotChordalError):
        maximal_cliques_chordal(P3, order(1, 0, 2))


def test_mc_examples():
    assert mc(P4) == 3
    assert mc(K5) == 1
    assert mc(TWO_K2) == 2
    with pytest.raises(NotChordalError):
        mc(C4)


def test_build_clique_tree_examples():
    t = build_clique_tree(P3)
    assert sorted(t.nodes) == [(0, 1), (1, 2)]
    assert [e[2] for e in t.edges] == [(1,)]

    t = build_clique_tree(K4)
    assert t.nodes == ((0, 1, 2, 3),) and t.edges == ()

    t = build_clique_tree(Graph(3))
    assert sorted(t.nodes) == [(0,), (1,), (2,)]
    assert len(t.edges) == 2 and all(mid == () for *_, mid in t.edges)
    assert verify_clique_tree(Graph(3), t)


def test_build_clique_tree_errors():
    with pytest.raises(NotChordalError):
        build_clique_tree(C4)
    with pytest.raises(ValueError):
        build_clique_tree(Graph(0))


def test_verify_clique_tree_examples():
    assert verify_clique_tree(P3, build_clique_tree(P3))
    bad = CliqueTree(((0, 1), (1, 2), (2, 3)), ((0, 2, ()), (2, 1, (2,))))
    assert not verify_clique_tree(P4, bad)
    assert "vertex 1" in clique_tree_defect(P4, bad)
    assert verify_clique_tree(K3, CliqueTree(((0, 1, 2),), ()))


@pytest.mark.parametrize(
    "tree",
    [
        CliqueTree(((0, 1), (1, 2)), ()),  # too few edges
        CliqueTree(((0, 1), (1, 2)), ((0, 1, ()),)),  # wrong mid
        CliqueTree(((0, 1),), ()),  # missing clique
        CliqueTree(((0, 1), (1, 2)), ((0, 0, (1,)),)),  # loop edge
    ],
)
def test_verify_clique_tree_rejects_malformed(tree):
    assert not verify_clique_tree(P3, tree)


def test_verify_clique_tree_non_chordal_graph():
    assert not verify_clique_tree(C4, CliqueTree(((0, 1),), ()))


def test_clique_vertex_irreducible_examples():
    assert is_clique_vertex_irreducible(P3)
    assert is_clique_vertex_irreducible(K4)
    # two triangles {0,1,3}, {0,2,3} sharing edge 03: 1 and 2 are private
    assert is_clique_vertex_irreducible(Graph(4, [(0, 1), (1, 3), (0, 3), (0, 2), (2, 3)]))
    # cliques {0,1,2}, {1,2,3}, {2,3,4}: the middle one has no private vertex
    g = Graph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
    assert brute_maximal_cliques(g) == [(0, 1, 2), (1, 2, 3), (2, 3, 4)]
    assert not is_clique_vertex_irreducible(g)
    with pytest.raises(NotChordalError):
        is_clique_vertex_irreducible(C4)


def test_is_split_examples():
    ok, (v1, v2) = is_split(STAR3)
    # witness side is a maximum clique: the centre plus one leaf
    assert ok and 0 in v1 and len(v1) == 2 and len(v2) == 2
    assert is_split(C4) == (False, None)
    assert is_split(K4) == (True, ((0, 1, 2, 3), ()))
    assert is_split(Graph(0)) == (True, ((), ()))


def test_max_independent_set_examples():
    assert max_independent_set_chordal(P3, order(0, 2, 1)) == (0, 2)
    assert len(max_independent_set_chordal(K5, peo(K5))) == 1
    s = max_independent_set_chordal(TWO_K2, peo(TWO_K2))
    assert len(s) == 2 and brute_alpha(TWO_K2) == 2
    assert len({v // 2 for v in s}) == 2  # one endpoint per edge


@pytest.mark.parametrize("n", range(1, 7))
def test_cliques_match_brute_force_on_all_chordal_graphs(n):
    for g in all_graphs(n):
        ok, sigma = is_chordal(g)
        if not ok:
            continue
        found = maximal_cliques_chordal(g, sigma)
        assert sorted(found) == brute_maximal_cliques(g)
        # distinct maximal cliques have distinct first vertices in the PEO
        firsts = [min(c, key=sigma.inverse.__getitem__) for c in found]
        assert len(set(firsts)) == len(firsts)
        assert len(max_independent_set_chordal(g, sigma)) == brute_alpha(g)


@given(st.builds(GenSpec, st.just("chordal"), st.integers(7, 8), st.floats(0.0, 1.0),
                 st.integers(0, 2**64 - 1)))
def test_cliques_match_brute_force_n8(spec):
    g = gen(spec)
    sigma = peo(g)
    assert sorted(maximal_cliques_chordal(g, sigma)) == brute_maximal_cliques(g)
    assert len(max_independent_set_chordal(g, sigma)) == brute_alpha(g)


@settings(max_examples=60)
@given(st.integers(1, 64), st.floats(0.0, 1.0), st.integers(0, 2**64 - 1))
def test_built_clique_tree_verifies(n, density, seed):
    g = gen(GenSpec("chordal", n, density, seed))
    t = build_clique_tree(g)
    assert verify_clique_tree(g, t)
    assert len(t.nodes) == mc(g)


@given(graphs(max_n=7))
def test_is_split_matches_brute_force(g):
    ok, witness = is_split(g)
    assert ok == brute_is_split(g)
    if ok:
        v1, v2 = witness
        assert sorted(v1 + v2) == list(range(g.n))
        assert is_clique(g, v1) and is_independent_set(g, v2)


@given(st.integers(0, 8), st.integers(0, 8), st.floats(0.0, 1.0), st.integers(0, 2**64 - 1))
def test_split_graph_clique_count_bound(a, b, density, seed):
    g = gen(GenSpec("split", a + b, density, seed, clique_size=a))
    ok, (v1, v2) = is_split(g)
    assert ok
    if g.n:
        assert mc(g) <= len(v2) + 1
        assert mc(g) <= b + 1  # the generator's own split
