"""The peeling strategies and best-prefix selection.

Every peeler removes nodes one at a time, producing the nested family
S_0 = V ⊃ S_1 ⊃ ... ⊃ S_n = ∅ and recording a quality value for each
prefix; the answer is the best prefix.  Ties in any removal key resolve to
the smallest node index, everywhere, so runs are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import ConfigurationError
from .graph import Graph
from .objective import power_table, validate_exponent

ALGORITHMS = ("simpeel", "genpeel", "genpeelpp", "maxcore")


@dataclass(frozen=True)
class PeelConfig:
    """Configuration for one peel run.

    ``removal_fraction`` is the fraction of surviving nodes removed per
    round (genpeelpp only).  ``allow_small_p`` lets genpeel/genpeelpp run
    with 0 < p < 1, where their approximation guarantees do not hold.
    """

    algorithm: str = "genpeelpp"
    p: float = 1.0
    removal_fraction: float = 0.5
    tie_break: str = "min-index"
    allow_small_p: bool = False

    def validate(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise ConfigurationError(
                f"unknown algorithm {self.algorithm!r}; expected one of {ALGORITHMS}")
        if self.tie_break != "min-index":
            raise ConfigurationError("the only supported tie_break policy is 'min-index'")
        if self.algorithm != "maxcore":
            validate_exponent(self.p)
        if self.algorithm == "genpeelpp":
            if not 0.0 < self.removal_fraction < 1.0:
                raise ConfigurationError(
                    f"removal_fraction must lie in (0, 1), got {self.removal_fraction}")
        if self.algorithm in ("genpeel", "genpeelpp"):
            if self.p < 1.0 and not self.allow_small_p:
                raise ConfigurationError(
                    f"{self.algorithm} requires p >= 1 (got p={self.p}); "
                    "pass allow_small_p/--override-p-range to run it anyway")


@dataclass
class PeelTrace:
    """Full removal order plus the per-prefix quality values.

    ``prefix_value[i]`` scores the set after i removals: the mean
    p-th-power degree for the p-based peelers, the minimum induced degree
    for maxcore.  ``best_index`` is the argmax (smallest index on ties) and
    ``best_set`` the surviving nodes of that prefix, sorted.
    """

    removal_order: np.ndarray
    prefix_value: np.ndarray
    best_index: int
    best_set: np.ndarray
    rounds: int
    algorithm: str
    p: float | None = None
    removal_fraction: float | None = None
    max_key_error: float | None = None

    @property
    def best_value(self) -> float:
        return float(self.prefix_value[self.best_index])

    def prefix_set(self, i: int) -> np.ndarray:
        """Sorted surviving node indices after i removals."""
        return np.sort(self.removal_order[i:])


def _finish_trace(order: np.ndarray, prefix_value: np.ndarray, rounds: int,
                  algorithm: str, p: float | None,
                  removal_fraction: float | None) -> PeelTrace:
    best_index = int(np.argmax(prefix_value))
    return PeelTrace(
        removal_order=order,
        prefix_value=prefix_value,
        best_index=best_index,
        best_set=np.sort(order[best_index:]),
        rounds=rounds,
        algorithm=algorithm,
        p=p,
        removal_fraction=removal_fraction,
    )


def _prefix_values(prefix_power: np.ndarray, n: int) -> np.ndarray:
    sizes = n - np.arange(n + 1, dtype=np.float64)
    out = np.zeros(n + 1, dtype=np.float64)
    np.divide(prefix_power, sizes, out=out, where=sizes > 0)
    return np.maximum(out, 0.0)


def simpeel(graph: Graph, p: float) -> PeelTrace:
    """Peel by minimum induced degree, scoring prefixes at exponent p."""
    p = validate_exponent(p)
    n = graph.node_count
    ptab = power_table(graph.max_degree, p)
    order, _, prefix_power = _kernels.simpeel_peel(graph.indptr, graph.indices, ptab)
    return _finish_trace(order, _prefix_values(prefix_power, n), rounds=n,
                         algorithm="simpeel", p=p, removal_fraction=None)


def genpeel(graph: Graph, p: float, *, allow_small_p: bool = False,
            audit: bool = False) -> PeelTrace:
    """Peel by minimum removal loss with exact key maintenance.

    After each removal the loss keys of the removed node's live one- and
    two-hop neighborhood are rebuilt from current degrees.  With ``audit``
    the trace gains a ``max_key_error`` attribute: the worst relative gap
    between maintained keys and scratch recomputation over the whole peel.
    """
    p = validate_exponent(p)
    if p < 1.0 and not allow_small_p:
        raise ConfigurationError(
            f"genpeel requires p >= 1 (got p={p}); pass allow_small_p to override")
    n = graph.node_count
    ptab = power_table(graph.max_degree, p)
    order, prefix_power, max_err = _kernels.genpeel_peel(
        graph.indptr, graph.indices, ptab, audit)
    trace = _finish_trace(order, _prefix_values(prefix_power, n), rounds=n,
                          algorithm="genpeel", p=p, removal_fraction=None)
    if audit:
        trace.max_key_error = float(max_err)
    return trace


def genpeelpp(graph: Graph, p: float, removal_fraction: float = 0.5, *,
              allow_small_p: bool = False) -> PeelTrace:
    """Batched loss peeling: O(log n) rounds instead of one per removal.

    Each round recomputes every surviving node's removal loss from scratch,
    sorts ascending (index breaks ties), and deletes the first
    max(1, floor(removal_fraction * |S|)) nodes in that order without
    refreshing the keys, while still recording the objective after every
    individual removal.  The power sum is rebuilt at each round boundary,
    so drift cannot accumulate across rounds.
    """
    p = validate_exponent(p)
    if p < 1.0 and not allow_small_p:
        raise ConfigurationError(
            f"genpeelpp requires p >= 1 (got p={p}); pass allow_small_p to override")
    if not 0.0 < removal_fraction < 1.0:
        raise ConfigurationError(
            f"removal_fraction must lie in (0, 1), got {removal_fraction}")

    n = graph.node_count
    ptab = power_table(graph.max_degree, p)
    alive = np.ones(n, dtype=np.uint8)
    deg = graph.degrees.astype(np.int64)
    order = np.empty(n, dtype=np.int64)
    prefix_power = np.zeros(n + 1, dtype=np.float64)
    nodes_buf = np.empty(n, dtype=np.int64)
    loss_buf = np.empty(n, dtype=np.float64)

    live = n
    offset = 0
    rounds = 0
    while live > 0:
        rounds += 1
        cnt, power = _kernels.batch_round_losses(
            graph.indptr, graph.indices, alive, deg, ptab, nodes_buf, loss_buf)
        if rounds == 1:
            prefix_power[0] = power
        rank = np.argsort(loss_buf[:cnt], kind="stable")
        batch = max(1, int(removal_fraction * cnt))
        victims = nodes_buf[:cnt][rank[:batch]].copy()
        order[offset:offset + batch] = victims
        _kernels.batch_remove(graph.indptr, graph.indices, alive, deg, ptab,
                              victims, power, prefix_power, offset)
        offset += batch
        live -= batch
    if n > 0:
        prefix_power[n] = 0.0
    return _finish_trace(order, _prefix_values(prefix_power, n), rounds=rounds,
                         algorithm="genpeelpp", p=p,
                         removal_fraction=removal_fraction)


def maxcore(graph: Graph) -> PeelTrace:
    """Min-degree peeling scored by minimum induced degree per prefix.

    The best prefix is the maximum k-core: the largest suffix set whose
    minimum induced degree equals the graph degeneracy.
    """
    n = graph.node_count
    ptab = power_table(graph.max_degree, 1.0)
    order, removal_degree, _ = _kernels.simpeel_peel(graph.indptr, graph.indices, ptab)
    # the degree at which step i+1's node is removed is the min degree of S_i
    prefix_value = np.zeros(n + 1, dtype=np.float64)
    prefix_value[:n] = removal_degree
    return _finish_trace(order, prefix_value, rounds=n,
                         algorithm="maxcore", p=None, removal_fraction=None)


def run(graph: Graph, config: PeelConfig) -> PeelTrace:
    """Dispatch to the configured peeler."""
    config.validate()
    if config.algorithm == "simpeel":
        return simpeel(graph, config.p)
    if config.algorithm == "genpeel":
        return genpeel(graph, config.p, allow_small_p=config.allow_small_p)
    if config.algorithm == "genpeelpp":
        return genpeelpp(graph, config.p, config.removal_fraction,
                         allow_small_p=config.allow_small_p)
    return maxcore(graph)


def round_bound(n: int, removal_fraction: float) -> int:
    """Upper bound on genpeelpp rounds: ceil(log n / log(1/(1-c))) + 1."""
    if n <= 1:
        return n
    return math.ceil(math.log(n) / math.log(1.0 / (1.0 - removal_fraction))) + 1
