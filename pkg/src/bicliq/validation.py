"""Input coercion for the estimator API."""

from __future__ import annotations

import numpy as np

from .graph import Graph


def check_graph(X) -> Graph:
    """Return ``X`` as a :class:`Graph`.

    Accepts a ``Graph`` or a square, symmetric 0/1 adjacency matrix with a
    zero diagonal (dense array-like or anything with ``toarray()``).
    """
    if isinstance(X, Graph):
        return X
    if hasattr(X, "toarray"):
        X = X.toarray()
    A = np.asarray(X)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {A.shape}")
    if A.size and not np.isin(A, (0, 1)).all():
        raise ValueError("adjacency matrix entries must be 0 or 1")
    A = A.astype(bool)
    if np.diagonal(A).any():
        raise ValueError("adjacency matrix has self-loops")
    if not (A == A.T).all():
        raise ValueError("adjacency matrix is not symmetric")
    rows, cols = np.nonzero(np.triu(A, 1))
    return Graph(A.shape[0], zip(rows.tolist(), cols.tolist()))


def to_adjacency(g: Graph) -> np.ndarray:
    A = np.zeros((g.n, g.n), dtype=np.int8)
    for u, v in g.edges():
        A[u, v] = A[v, u] = 1
    return A
