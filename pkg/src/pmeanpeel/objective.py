"""Mean p-th-power degree bookkeeping over a shrinking node set.

The objective value of a node set S is the average of d_v(S) ** p over its
members (0 for the empty set); its p-th root is the p-mean degree density.
Degrees are integers, so every power is served from a precomputed table,
which keeps the common integer exponents exact and the rest consistent
across all code paths.
"""

from __future__ import annotations

import math

import numpy as np

from . import _kernels
from .errors import ConfigurationError
from .graph import Graph, _as_mask


def validate_exponent(p) -> float:
    """Check that p is a finite positive real and return it as float."""
    p = float(p)
    if not math.isfinite(p) or p <= 0.0:
        raise ConfigurationError(f"exponent p must be a finite positive real, got {p!r}")
    return p


def power_table(max_degree: int, p: float) -> np.ndarray:
    """Table t with t[d] = d ** p for every degree 0..max_degree.

    Integer exponents up to 4 use repeated multiplication, so the values
    (and their sums, within float64 range) stay exact.  Other exponents go
    through scalar pow rather than numpy's vectorized power, whose
    special-cased exponents (0.5, 2, ...) can differ in the last ulp;
    0 ** p is 0 for all supported p.
    """
    p = validate_exponent(p)
    if p.is_integer() and 1 <= p <= 4:
        d = np.arange(max_degree + 1, dtype=np.float64)
        out = np.ones(max_degree + 1, dtype=np.float64)
        for _ in range(int(p)):
            out *= d
        return out
    return np.array([float(d) ** p for d in range(max_degree + 1)],
                    dtype=np.float64)


def subset_objective(graph: Graph, members, p: float) -> float:
    """Scratch evaluation of the objective on an arbitrary node subset."""
    mask = _as_mask(graph.node_count, members)
    size = int(mask.sum())
    if size == 0:
        return 0.0
    ptab = power_table(graph.max_degree, p)
    deg = _kernels.induced_degrees(graph.indptr, graph.indices,
                                   mask.astype(np.uint8))
    return float(ptab[deg[mask]].sum() / size)


def subset_p_mean(graph: Graph, members, p: float) -> float:
    """Scratch p-mean degree density of an arbitrary node subset."""
    value = subset_objective(graph, members, p)
    return value ** (1.0 / p) if value > 0.0 else 0.0


class PeelState:
    """Mutable view of the surviving node set during a peel.

    Tracks alive flags, live degrees, the live count, and the running power
    sum (the objective numerator).  One peel run owns one state; several
    states may share the same immutable Graph.
    """

    def __init__(self, graph: Graph, p: float, members=None):
        self.graph = graph
        self.p = validate_exponent(p)
        self._ptab = power_table(graph.max_degree, self.p)
        if members is None:
            self.alive = np.ones(graph.node_count, dtype=np.uint8)
        else:
            self.alive = _as_mask(graph.node_count, members).astype(np.uint8)
        self.live_degree = np.zeros(graph.node_count, dtype=np.int64)
        self.live_count = 0
        self.power_sum = 0.0
        self.recompute()

    def recompute(self) -> None:
        """Rebuild live degrees and the power sum from the alive flags."""
        self.live_degree = _kernels.induced_degrees(
            self.graph.indptr, self.graph.indices, self.alive)
        self.live_count = int(self.alive.sum())
        live = self.alive.astype(bool)
        self.power_sum = float(self._ptab[self.live_degree[live]].sum())

    def objective(self) -> float:
        """Average p-th-power live degree; 0 on the empty set."""
        if self.live_count == 0:
            return 0.0
        return max(self.power_sum, 0.0) / self.live_count

    def p_mean(self) -> float:
        """p-th root of the objective; 0 on the empty set."""
        value = self.objective()
        return value ** (1.0 / self.p) if value > 0.0 else 0.0

    def removal_loss(self, v: int) -> float:
        """Drop in live_count * objective caused by removing live node v.

        The node contributes its own power term plus the decrease of each
        live neighbor's term.
        """
        self._require_alive(v)
        ptab = self._ptab
        loss = ptab[self.live_degree[v]]
        for u in self.graph.neighbors(v):
            if self.alive[u]:
                du = self.live_degree[u]
                loss += ptab[du] - ptab[du - 1]
        return float(loss)

    def remove(self, v: int) -> None:
        """Remove live node v, updating degrees and the power sum in place."""
        self._require_alive(v)
        ptab = self._ptab
        self.power_sum -= ptab[self.live_degree[v]]
        self.alive[v] = 0
        self.live_count -= 1
        for u in self.graph.neighbors(v):
            if self.alive[u]:
                du = self.live_degree[u]
                self.power_sum += ptab[du - 1] - ptab[du]
                self.live_degree[u] = du - 1

    def _require_alive(self, v: int) -> None:
        if not 0 <= v < self.graph.node_count:
            raise IndexError(f"node index {v} out of range")
        if not self.alive[v]:
            raise ValueError(f"node {v} is not in the live set")
