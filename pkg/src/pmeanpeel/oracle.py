"""Exact optimum by exhaustive subset enumeration on small graphs.

Ground truth for the approximation-ratio and structural tests: every one of
the 2^n subsets is scored with the same arithmetic as the objective module.
Subset degrees come from per-node neighbor bitmasks and population counts,
which keeps enumeration feasible up to the hard size cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _kernels
from .errors import OracleSizeError
from .graph import Graph
from .objective import power_table, validate_exponent

MAX_ORACLE_NODES = 24

_POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)


@dataclass(frozen=True)
class OracleResult:
    """The optimal node set with its objective and p-mean density values."""

    best_set: tuple[int, ...]
    fp_value: float
    mp_value: float

    @property
    def size(self) -> int:
        return len(self.best_set)


def exact_optimum(graph: Graph, p: float, *,
                  max_nodes: int = MAX_ORACLE_NODES) -> OracleResult:
    """Maximize the mean p-th-power degree over all node subsets.

    Ties resolve to the smaller set, then to lexicographic node order.

    Raises:
        OracleSizeError: the graph exceeds the enumeration budget (the limit
            is never silently truncated).
    """
    p = validate_exponent(p)
    n = graph.node_count
    if n > max_nodes:
        raise OracleSizeError(
            f"exhaustive enumeration is capped at {max_nodes} nodes; "
            f"this graph has {n}")
    if n == 0:
        return OracleResult(best_set=(), fp_value=0.0, mp_value=0.0)

    nbr_mask = np.zeros(n, dtype=np.int64)
    for v in range(n):
        for u in graph.neighbors(v):
            nbr_mask[v] |= np.int64(1) << np.int64(u)
    ptab = power_table(graph.max_degree, p)
    mask, fp, _ = _kernels.enumerate_best_subset(nbr_mask, ptab, _POP16, n)
    best = tuple(v for v in range(n) if (int(mask) >> v) & 1)
    fp = float(fp)
    mp = fp ** (1.0 / p) if fp > 0.0 else 0.0
    return OracleResult(best_set=best, fp_value=fp, mp_value=mp)


def naive_optimum(graph: Graph, p: float, *, max_nodes: int = 12) -> OracleResult:
    """Slow reference enumeration with explicit subsets and degree counts.

    Cross-checks the bitmask path: same objective, same tie-breaking, but
    no shared machinery beyond the graph itself.
    """
    p = validate_exponent(p)
    n = graph.node_count
    if n > max_nodes:
        raise OracleSizeError(
            f"naive enumeration is capped at {max_nodes} nodes; this graph has {n}")
    adjacency = [set(map(int, graph.neighbors(v))) for v in range(n)]
    best_fp = 0.0
    best: tuple[int, ...] = ()
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            inside = set(combo)
            total = 0.0
            for v in combo:
                total += float(len(adjacency[v] & inside)) ** p
            fp = total / size
            if fp > best_fp:
                best_fp = fp
                best = combo
    mp = best_fp ** (1.0 / p) if best_fp > 0.0 else 0.0
    return OracleResult(best_set=best, fp_value=best_fp, mp_value=mp)
