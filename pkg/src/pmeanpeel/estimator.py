"""Scikit-learn style front end for the peeling algorithms.

The estimator treats densest-subgraph discovery as a one-cluster selection:
``fit(X)`` accepts an adjacency matrix (dense, scipy sparse, or a Graph)
and exposes binary membership through ``labels_``, so the peelers compose
with pipelines, ``clone``, and grid-search machinery.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils.validation import check_array

from .graph import Graph
from .peel import PeelConfig, run


class PMeanDensestSubgraph(ClusterMixin, BaseEstimator):
    """Select the subgraph maximizing the mean p-th-power degree.

    Parameters
    ----------
    p : float, default=1.0
        Degree exponent; p=1 recovers the standard average-degree density.
        Ignored when ``algorithm="maxcore"``.
    algorithm : {'simpeel', 'genpeel', 'genpeelpp', 'maxcore'}, default='genpeelpp'
        Peeling strategy.
    removal_fraction : float, default=0.5
        Fraction of surviving nodes removed per round (genpeelpp only).
    allow_small_p : bool, default=False
        Permit genpeel/genpeelpp with 0 < p < 1, outside their guarantee.

    Attributes
    ----------
    labels_ : ndarray of shape (n_nodes,)
        1 for nodes in the selected subgraph, 0 otherwise.
    best_set_ : ndarray
        Sorted node indices of the selected subgraph.
    best_value_ : float
        Objective of the selection (minimum induced degree for maxcore).
    trace_ : PeelTrace
        Full removal order and per-prefix values.

    Examples
    --------
    >>> import numpy as np
    >>> adj = np.zeros((4, 4)); adj[:3, :3] = 1 - np.eye(3); adj[2, 3] = adj[3, 2] = 1
    >>> PMeanDensestSubgraph(p=1.0, algorithm="simpeel").fit_predict(adj)
    array([1, 1, 1, 0])
    """

    def __init__(self, p: float = 1.0, algorithm: str = "genpeelpp",
                 removal_fraction: float = 0.5, allow_small_p: bool = False):
        self.p = p
        self.algorithm = algorithm
        self.removal_fraction = removal_fraction
        self.allow_small_p = allow_small_p

    def fit(self, X, y=None):
        """Run the configured peeler on an adjacency matrix or Graph."""
        graph = self._validate_graph(X)
        config = PeelConfig(algorithm=self.algorithm, p=self.p,
                            removal_fraction=self.removal_fraction,
                            allow_small_p=self.allow_small_p)
        config.validate()
        trace = run(graph, config)
        labels = np.zeros(graph.node_count, dtype=np.int64)
        labels[trace.best_set] = 1
        self.graph_ = graph
        self.trace_ = trace
        self.best_set_ = trace.best_set
        self.best_value_ = trace.best_value
        self.labels_ = labels
        self.n_features_in_ = graph.node_count
        return self

    def _validate_graph(self, X) -> Graph:
        if isinstance(X, Graph):
            return X
        X = check_array(X, accept_sparse=("csr", "csc", "coo"), dtype=None,
                        ensure_2d=True, allow_nd=False)
        return Graph.from_adjacency(X)
