import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from bicliq import BicliquePartitioner, EdgeChoiceStrategy, GenSpec, NotCoChordalError, gen_co_chordal
from bicliq.validation import check_graph, to_adjacency
from conftest import C4, C5, K4


def test_params_and_clone():
    est = BicliquePartitioner(method="clique-tree", strategy="random:3")
    assert est.get_params() == {"method": "clique-tree", "strategy": "random:3"}
    other = clone(est).set_params(method="lexbfs")
    assert other.method == "lexbfs" and est.method == "clique-tree"


@pytest.mark.parametrize("method", ["lexbfs", "clique-tree"])
def test_fit_transform_reconstructs_adjacency(method):
    g = gen_co_chordal(GenSpec("chordal", 30, 0.5, 11))
    A = to_adjacency(g)
    est = BicliquePartitioner(method=method)
    Z = est.fit_transform(A)
    assert Z.shape == (30, est.n_parts_)
    assert est.n_parts_ == est.mc_complement_ - 1
    assert np.array_equal(est.inverse_transform(Z), A)
    # every part has both sides
    assert ((Z > 0).any(axis=0) & (Z < 0).any(axis=0)).all()


def test_accepts_graph_and_strategy_object():
    est = BicliquePartitioner(method="clique-tree", strategy=EdgeChoiceStrategy("random", 5))
    Z = est.fit(K4).transform(K4)
    assert Z.shape == (4, 3)


def test_not_fitted():
    with pytest.raises(NotFittedError):
        BicliquePartitioner().transform(to_adjacency(C4))


def test_transform_rejects_other_graph():
    est = BicliquePartitioner().fit(C4)
    with pytest.raises(ValueError):
        est.transform(K4)


def test_fit_errors():
    with pytest.raises(ValueError):
        BicliquePartitioner(method="greedy").fit(C4)
    with pytest.raises(NotCoChordalError):
        BicliquePartitioner().fit(to_adjacency(C5))


class _Sparse:
    def __init__(self, A):
        self.A = A

    def toarray(self):
        return self.A


def test_check_graph():
    A = to_adjacency(C4)
    assert check_graph(A) == C4
    assert check_graph(_Sparse(A)) == C4
    assert check_graph(C4) is C4
    with pytest.raises(ValueError, match="square"):
        check_graph(np.zeros((2, 3)))
    with pytest.raises(ValueError, match="0 or 1"):
        check_graph(2 * A)
    with pytest.raises(ValueError, match="self-loops"):
        check_graph(np.eye(2, dtype=int))
    with pytest.raises(ValueError, match="symmetric"):
        check_graph(np.array([[0, 1], [0, 0]]))
