"""Density metrics, benchmark grids, and machine-readable reports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import PmeanPeelError
from .graph import Graph, _as_mask
from .objective import power_table
from .oracle import exact_optimum
from .peel import PeelConfig, genpeel, genpeelpp, run

REPORT_FIELDS = ("dataset", "algorithm", "p", "c", "size", "edge_density",
                 "avg_degree", "avg_sq_degree", "max_degree", "fp", "mp",
                 "runtime_seconds", "error")


@dataclass(frozen=True)
class DensityReport:
    """Evaluation metrics of one result set (degenerate sets score 0)."""

    set_size: int
    edge_density: float
    avg_degree: float
    avg_sq_degree: float
    max_degree: int
    fp_value: float
    mp_value: float
    runtime_seconds: float


def report(graph: Graph, members, p: float,
           runtime_seconds: float = 0.0) -> DensityReport:
    """Compute all density metrics on the subgraph induced by the member set."""
    mask = _as_mask(graph.node_count, members)
    size = int(mask.sum())
    if size == 0:
        return DensityReport(0, 0.0, 0.0, 0.0, 0, 0.0, 0.0, runtime_seconds)
    deg = _kernels.induced_degrees(graph.indptr, graph.indices,
                                   mask.astype(np.uint8))[mask]
    edges = int(deg.sum()) // 2
    pairs = size * (size - 1) // 2
    ptab = power_table(graph.max_degree, p)
    fp = float(ptab[deg].sum() / size)
    return DensityReport(
        set_size=size,
        edge_density=edges / pairs if pairs else 0.0,
        avg_degree=float(deg.mean()),
        avg_sq_degree=float((deg.astype(np.float64) ** 2).mean()),
        max_degree=int(deg.max()),
        fp_value=fp,
        mp_value=fp ** (1.0 / p) if fp > 0.0 else 0.0,
        runtime_seconds=runtime_seconds,
    )


@dataclass(frozen=True)
class GridRow:
    """One benchmark grid cell; ``error`` is set instead of aborting the grid."""

    dataset: str
    algorithm: str
    p: float | None
    removal_fraction: float | None
    result: DensityReport | None
    error: str | None = None

    def as_dict(self) -> dict:
        r = self.result
        return {
            "dataset": self.dataset,
            "algorithm": self.algorithm,
            "p": self.p,
            "c": self.removal_fraction,
            "size": r.set_size if r else None,
            "edge_density": r.edge_density if r else None,
            "avg_degree": r.avg_degree if r else None,
            "avg_sq_degree": r.avg_sq_degree if r else None,
            "max_degree": r.max_degree if r else None,
            "fp": r.fp_value if r else None,
            "mp": r.mp_value if r else None,
            "runtime_seconds": r.runtime_seconds if r else None,
            "error": self.error,
        }


def _timed_run(graph: Graph, config: PeelConfig, repetitions: int):
    trace = None
    best = float("inf")
    for _ in range(max(1, repetitions)):
        t0 = time.perf_counter()
        result = run(graph, config)
        best = min(best, time.perf_counter() - t0)
        trace = result
    return trace, best


def run_grid(graph: Graph, algorithms: Sequence[str], p_values: Sequence[float],
             removal_fraction: float = 0.5, repetitions: int = 3, *,
             dataset: str = "", allow_small_p: bool = False) -> list[GridRow]:
    """One report per (algorithm, p) cell, timed as the minimum over repetitions.

    maxcore is p-independent and contributes a single row.  Configuration
    errors (e.g. p < 1 without the override) are recorded in the row.
    """
    rows: list[GridRow] = []
    for algorithm in algorithms:
        cell_ps: Iterable[float | None] = [None] if algorithm == "maxcore" else p_values
        for p in cell_ps:
            fraction = removal_fraction if algorithm == "genpeelpp" else None
            config = PeelConfig(algorithm=algorithm,
                                p=1.0 if p is None else p,
                                removal_fraction=removal_fraction,
                                allow_small_p=allow_small_p)
            try:
                config.validate()
                trace, seconds = _timed_run(graph, config, repetitions)
                metrics = report(graph, trace.best_set, 1.0 if p is None else p,
                                 runtime_seconds=seconds)
                rows.append(GridRow(dataset, algorithm, p, fraction, metrics))
            except PmeanPeelError as exc:
                rows.append(GridRow(dataset, algorithm, p, fraction, None, str(exc)))
    return rows


@dataclass(frozen=True)
class SpeedupRow:
    p: float
    genpeel_seconds: float
    genpeelpp_seconds: float
    ratio: float


def speedup_report(graph: Graph, p_values: Sequence[float],
                   removal_fraction: float = 0.5, repetitions: int = 3, *,
                   allow_small_p: bool = False) -> list[SpeedupRow]:
    """Paired single-process timings of genpeel vs genpeelpp per exponent."""
    rows = []
    for p in p_values:
        slow = float("inf")
        fast = float("inf")
        for _ in range(max(1, repetitions)):
            t0 = time.perf_counter()
            genpeel(graph, p, allow_small_p=allow_small_p)
            slow = min(slow, time.perf_counter() - t0)
            t0 = time.perf_counter()
            genpeelpp(graph, p, removal_fraction, allow_small_p=allow_small_p)
            fast = min(fast, time.perf_counter() - t0)
        rows.append(SpeedupRow(p, slow, fast, slow / fast if fast > 0 else float("inf")))
    return rows


def ratio_curve(graph: Graph, p_values: Sequence[float],
                removal_fraction: float = 0.5, *, max_nodes: int = 24,
                allow_small_p: bool = False) -> list[tuple[float, float]]:
    """Heuristic-to-optimal p-mean density ratios over a grid of exponents.

    Plot data for quality-versus-exponent curves; requires the graph to fit
    the exhaustive oracle's budget.
    """
    rows = []
    for p in p_values:
        opt = exact_optimum(graph, p, max_nodes=max_nodes)
        trace = genpeelpp(graph, p, removal_fraction, allow_small_p=allow_small_p)
        fp = trace.best_value
        mp = fp ** (1.0 / p) if fp > 0.0 else 0.0
        ratio = mp / opt.mp_value if opt.mp_value > 0.0 else 1.0
        rows.append((float(p), float(ratio)))
    return rows


# -- writers ------------------------------------------------------------------

def _open_target(target: str | Path | IO[str]):
    if isinstance(target, (str, Path)):
        return open(target, "w"), True
    return target, False


def write_jsonl(rows: Sequence[GridRow], target: str | Path | IO[str]) -> None:
    """One JSON object per grid cell, keys in the documented column order."""
    fh, owned = _open_target(target)
    try:
        for row in rows:
            fh.write(json.dumps(row.as_dict()) + "\n")
    finally:
        if owned:
            fh.close()


def write_csv(rows: Sequence[GridRow], target: str | Path | IO[str]) -> None:
    """CSV mirror of the JSON-lines report with identical column order."""
    fh, owned = _open_target(target)
    try:
        fh.write(",".join(REPORT_FIELDS) + "\n")
        for row in rows:
            record = row.as_dict()
            fh.write(",".join("" if record[k] is None else str(record[k])
                              for k in REPORT_FIELDS) + "\n")
    finally:
        if owned:
            fh.close()


def write_ratio_file(rows: Sequence[tuple[float, float]],
                     target: str | Path | IO[str]) -> None:
    """Two-column whitespace-separated "p ratio" plot data."""
    fh, owned = _open_target(target)
    try:
        for p, ratio in rows:
            fh.write(f"{p:.6g} {ratio:.10g}\n")
    finally:
        if owned:
            fh.close()
