"""Scikit-learn style estimator facade over the ensemble solver.

Coloring assigns a label per vertex such that adjacent vertices differ, so
the solver wears the clusterer API: ``fit(X)`` on an adjacency structure
sets ``labels_`` and ``n_colors_``. ``X`` may be a Graph, a dense or sparse
symmetric adjacency matrix, or an iterable of (u, v) edge pairs.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin

from .engine import EnsembleConfig, solve
from .graph import Graph
from .tabucol import TabuParams

__all__ = ["EnsembleGraphColoring", "coerce_graph"]


def coerce_graph(X) -> Graph:
    """Validate and convert estimator input into a Graph.

    Accepts a Graph (returned as-is), an (n, n) symmetric 0/1 dense array,
    a scipy sparse matrix, or an (m, 2) array of (u, v) edge pairs with
    non-negative integer vertex ids. A square array is always read as an
    adjacency matrix, so a 2x2 input cannot be an edge list.
    """
    if isinstance(X, Graph):
        return X
    if hasattr(X, "tocoo"):  # scipy sparse without a hard scipy dependency
        coo = X.tocoo()
        if coo.shape[0] != coo.shape[1]:
            raise ValueError(f"adjacency matrix must be square, got {coo.shape}")
        edges = [
            (int(u), int(v))
            for u, v, w in zip(coo.row, coo.col, coo.data)
            if u < v and w
        ]
        return Graph(coo.shape[0], edges)
    arr = np.asarray(X)
    if arr.ndim == 2 and arr.shape[0] == arr.shape[1] and arr.shape[0] > 0:
        if not np.array_equal(arr, arr.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.any(np.diagonal(arr)):
            raise ValueError("adjacency matrix must have an empty diagonal")
        u, v = np.nonzero(np.triu(arr, k=1))
        return Graph(arr.shape[0], list(zip(u.tolist(), v.tolist())))
    if arr.ndim == 2 and arr.shape[1] == 2:
        edges = [(int(a), int(b)) for a, b in arr]
        n = max(max(a, b) for a, b in edges) + 1 if edges else 1
        return Graph(n, edges)
    raise ValueError(
        "X must be a Graph, a square symmetric adjacency matrix, "
        "a sparse adjacency matrix, or an (m, 2) edge array"
    )


class EnsembleGraphColoring(ClusterMixin, BaseEstimator):
    """Graph coloring as a clusterer: labels are colors, clusters color classes.

    Parameters mirror the ensemble configuration. With ``k=None`` the solver
    descends from the greedy bound to the smallest k it can certify; with a
    fixed ``k`` it only attempts that budget and raises if it fails.

    Attributes after fit: ``labels_`` (per-vertex colors), ``n_colors_``,
    ``result_`` (the full solve history), ``graph_``.
    """

    def __init__(
        self,
        n_islands: int = 4,
        generations: int = 1000,
        population_size: int = 20,
        tabu_tenure: int = 7,
        tabu_depth: int = 100_000,
        k: int | None = None,
        base_seed: int = 0,
        time_limit: float | None = None,
        eval_budget: int | None = None,
        parallel: bool = True,
    ):
        self.n_islands = n_islands
        self.generations = generations
        self.population_size = population_size
        self.tabu_tenure = tabu_tenure
        self.tabu_depth = tabu_depth
        self.k = k
        self.base_seed = base_seed
        self.time_limit = time_limit
        self.eval_budget = eval_budget
        self.parallel = parallel

    def _config(self) -> EnsembleConfig:
        return EnsembleConfig(
            island_count=self.n_islands,
            generations=self.generations,
            population_size=self.population_size,
            base_seed=self.base_seed,
            tabu=TabuParams(tenure=self.tabu_tenure, nbmax=self.tabu_depth),
            time_limit=self.time_limit,
            fitness_eval_budget=self.eval_budget,
            parallel=self.parallel,
        )

    def fit(self, X, y=None):
        del y
        graph = coerce_graph(X)
        result = solve(graph, self._config(), target_k=self.k)
        if result.witness is None:
            raise RuntimeError(
                f"no proper coloring found at k={self.k} within the budget"
            )
        self.graph_ = graph
        self.result_ = result
        self.labels_ = result.witness.colors.copy()
        self.n_colors_ = result.smallest_legal_k
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X, y).labels_
