"""Shared fixtures: the random-instance battery and naive reference math.

The naive helpers recompute everything from explicit Python sets so that
the package's table-based fast paths are checked against an independent
route.
"""

from __future__ import annotations

import numpy as np
import pytest

import pmeanpeel as pp


# -- independent reference implementations -------------------------------------

def adjacency_sets(graph: pp.Graph) -> list[set[int]]:
    return [set(map(int, graph.neighbors(v))) for v in range(graph.node_count)]


def naive_objective(graph: pp.Graph, members, p: float) -> float:
    inside = {int(v) for v in members}
    if not inside:
        return 0.0
    adj = adjacency_sets(graph)
    return sum(float(len(adj[v] & inside)) ** p for v in inside) / len(inside)


def naive_removal_loss(graph: pp.Graph, members, p: float, v: int) -> float:
    inside = {int(u) for u in members}
    adj = adjacency_sets(graph)
    loss = float(len(adj[v] & inside)) ** p
    for u in adj[v] & inside:
        du = len(adj[u] & inside)
        loss += float(du) ** p - float(du - 1) ** p
    return loss


def rel_close(a: float, b: float, rel: float = 1e-6, floor: float = 1e-9) -> bool:
    return abs(a - b) <= max(rel * max(abs(a), abs(b)), floor)


# -- graph zoo ------------------------------------------------------------------

def triangle() -> pp.Graph:
    return pp.Graph.from_edges([(0, 1), (1, 2), (0, 2)])


def k4_pendant() -> pp.Graph:
    edges = [(a, b) for a in range(4) for b in range(a + 1, 4)] + [(0, 4)]
    return pp.Graph.from_edges(edges)


def path3() -> pp.Graph:
    return pp.Graph.from_edges([(0, 1), (1, 2)])


def star(leaves: int) -> pp.Graph:
    return pp.Graph.from_edges([(0, i) for i in range(1, leaves + 1)])


def random_graphs(count: int, n_range=(4, 14), seed: int = 0) -> list[pp.Graph]:
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        prob = float(rng.uniform(0.15, 0.8))
        out.append(pp.erdos_renyi(n, prob, seed=rng))
    return out


# -- shared instance battery ----------------------------------------------------

class Battery:
    """300 small random graphs (half G(n,p), half preferential attachment)
    with memoized exact optima."""

    def __init__(self, count: int = 300, seed: int = 20250809):
        rng = np.random.default_rng(seed)
        self.graphs: list[pp.Graph] = []
        for i in range(count):
            n = int(rng.integers(6, 17))
            if i % 2 == 0:
                g = pp.erdos_renyi(n, float(rng.uniform(0.2, 0.7)), seed=rng)
            else:
                k = int(rng.integers(1, min(4, n)))
                g = pp.barabasi_albert(n, k, seed=rng)
            self.graphs.append(g)
        self._optima: dict[tuple[int, float], pp.OracleResult] = {}

    def optimum(self, index: int, p: float) -> pp.OracleResult:
        key = (index, float(p))
        if key not in self._optima:
            self._optima[key] = pp.exact_optimum(self.graphs[index], p)
        return self._optima[key]

    def cached_optima(self):
        return [(i, p, result) for (i, p), result in self._optima.items()]


@pytest.fixture(scope="session")
def battery() -> Battery:
    # first calls also warm the compiled kernels so timed tests stay honest
    b = Battery()
    g = b.graphs[0]
    pp.simpeel(g, 1.0)
    pp.genpeel(g, 1.0)
    pp.genpeelpp(g, 1.0)
    pp.maxcore(g)
    b.optimum(0, 1.0)
    return b
