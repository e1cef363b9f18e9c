"""Deterministic synthetic graphs for benchmarks and tests."""

from __future__ import annotations

import numpy as np

from .graph import Graph


def erdos_renyi(n: int, edge_prob: float, seed: int | np.random.Generator = 0) -> Graph:
    """G(n, p): each node pair is an edge independently with edge_prob.

    Row-chunked sampling keeps memory at O(n) per step; use random_gnm for
    graphs where n**2 trials would be wasteful.
    """
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError(f"edge_prob must lie in [0, 1], got {edge_prob}")
    rng = np.random.default_rng(seed) if not isinstance(seed, np.random.Generator) else seed
    rows = []
    for u in range(n - 1):
        hits = np.flatnonzero(rng.random(n - u - 1) < edge_prob) + u + 1
        if hits.size:
            rows.append(np.column_stack([np.full(hits.size, u, dtype=np.int64), hits]))
    pairs = np.concatenate(rows) if rows else np.empty((0, 2), dtype=np.int64)
    return Graph.from_edge_array(pairs, n=n)


def random_gnm(n: int, m: int, seed: int | np.random.Generator = 0) -> Graph:
    """G(n, m)-style graph: about m distinct edges sampled uniformly.

    Self-loops and duplicates from the raw draw are discarded rather than
    redrawn, so the realized edge count is slightly below m on dense draws.
    """
    rng = np.random.default_rng(seed) if not isinstance(seed, np.random.Generator) else seed
    u = rng.integers(0, n, size=m, dtype=np.int64)
    v = rng.integers(0, n, size=m, dtype=np.int64)
    return Graph.from_edge_array(np.column_stack([u, v]), n=n)


def barabasi_albert(n: int, k: int, seed: int | np.random.Generator = 0) -> Graph:
    """Preferential attachment: each new node links to k existing nodes.

    Degree distribution develops the usual heavy tail; the first k + 1
    nodes start as a star so every attachment target exists.
    """
    if k < 1 or k >= n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    rng = np.random.default_rng(seed) if not isinstance(seed, np.random.Generator) else seed
    edges = [(0, i) for i in range(1, k + 1)]
    # one endpoint slot per edge end; sampling from it is degree-proportional
    targets = [0] * k + list(range(1, k + 1))
    for new in range(k + 1, n):
        chosen: set[int] = set()
        while len(chosen) < k:
            chosen.add(targets[rng.integers(0, len(targets))])
        for t in chosen:
            edges.append((new, t))
            targets.append(new)
            targets.append(t)
    return Graph.from_edge_array(np.asarray(edges, dtype=np.int64), n=n)


def _k4_pendant() -> list[tuple[int, int]]:
    edges = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    edges.append((0, 4))
    return edges


def _petersen() -> list[tuple[int, int]]:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return outer + inner + spokes


def _grid(rows: int, cols: int) -> list[tuple[int, int]]:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return edges


def _wheel(spokes: int) -> list[tuple[int, int]]:
    rim = [(1 + i, 1 + (i + 1) % spokes) for i in range(spokes)]
    return rim + [(0, 1 + i) for i in range(spokes)]


def _cube() -> list[tuple[int, int]]:
    return [(a, a ^ (1 << b)) for a in range(8) for b in range(3) if a < a ^ (1 << b)]


def named_small_graphs() -> dict[str, Graph]:
    """Bundled named graphs, all small enough for the exhaustive oracle."""
    recipes = {
        "triangle": [(0, 1), (1, 2), (0, 2)],
        "k4_pendant": _k4_pendant(),
        "cube": _cube(),
        "wheel_8": _wheel(8),
        "petersen": _petersen(),
        "grid_3x4": _grid(3, 4),
    }
    return {name: Graph.from_edge_array(np.asarray(edges, dtype=np.int64))
            for name, edges in recipes.items()}
