"""scikit-learn style wrapper around the partition heuristics."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .heuristics import METHODS, EdgeChoiceStrategy, partition_auto
from .partition import verify_partition
from .validation import check_graph


class BicliquePartitioner(TransformerMixin, BaseEstimator):
    """Find a biclique partition of a co-chordal graph.

    Parameters
    ----------
    method : {"lexbfs", "clique-tree"}
        Which heuristic to run.
    strategy : str or EdgeChoiceStrategy
        Edge choice for the clique-tree heuristic, ``"first"`` or
        ``"random:<seed>"``. Ignored by ``lexbfs``.

    Attributes
    ----------
    partition_ : BicliquePartition
    n_parts_ : int
    mc_complement_ : int
        Number of maximal cliques of the complement; ``n_parts_`` is
        always ``mc_complement_ - 1``.
    n_vertices_ : int

    ``transform`` returns the signed incidence matrix ``Z`` of shape
    ``(n_vertices, n_parts)``: ``+1`` on the left side of a part, ``-1`` on
    the right, ``0`` elsewhere. ``inverse_transform`` rebuilds the
    adjacency matrix from ``Z``.
    """

    def __init__(self, method="lexbfs", strategy="first"):
        self.method = method
        self.strategy = strategy

    def _strategy(self) -> EdgeChoiceStrategy:
        if isinstance(self.strategy, EdgeChoiceStrategy):
            return self.strategy
        return EdgeChoiceStrategy.parse(self.strategy)

    def fit(self, X, y=None):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        g = check_graph(X)
        self.partition_, self.mc_complement_ = partition_auto(g, self.method, self._strategy())
        self.n_parts_ = len(self.partition_)
        self.n_vertices_ = g.n
        return self

    def transform(self, X):
        if not hasattr(self, "partition_"):
            raise NotFittedError("BicliquePartitioner is not fitted yet")
        g = check_graph(X)
        if g.n != self.n_vertices_ or not verify_partition(g, self.partition_):
            raise ValueError("X is not the graph this partitioner was fitted on")
        Z = np.zeros((g.n, self.n_parts_), dtype=np.int8)
        for j, b in enumerate(self.partition_):
            Z[list(b.left), j] = 1
            Z[list(b.right), j] = -1
        return Z

    def inverse_transform(self, Z):
        Z = np.asarray(Z)
        left = (Z > 0).astype(np.int64)
        right = (Z < 0).astype(np.int64)
        A = left @ right.T
        return (A + A.T).astype(np.int8)
