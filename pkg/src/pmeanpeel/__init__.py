"""Peeling algorithms for the p-mean densest subgraph problem.

A library and CLI around four peelers (simpeel, genpeel, genpeelpp,
maxcore), an exhaustive exact oracle for small graphs, density reporting,
and a scikit-learn style estimator facade.
"""

from .errors import (ConfigurationError, EdgeListParseError, OracleSizeError,
                     PmeanPeelError)
from .estimator import PMeanDensestSubgraph
from .graph import Graph, load_edge_list
from .objective import (PeelState, power_table, subset_objective,
                        subset_p_mean, validate_exponent)
from .oracle import MAX_ORACLE_NODES, OracleResult, exact_optimum, naive_optimum
from .peel import (ALGORITHMS, PeelConfig, PeelTrace, genpeel, genpeelpp,
                   maxcore, round_bound, run, simpeel)
from .report import (DensityReport, GridRow, SpeedupRow, ratio_curve, report,
                     run_grid, speedup_report, write_csv, write_jsonl,
                     write_ratio_file)
from .synth import barabasi_albert, erdos_renyi, named_small_graphs, random_gnm

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "ConfigurationError",
    "DensityReport",
    "EdgeListParseError",
    "Graph",
    "GridRow",
    "MAX_ORACLE_NODES",
    "OracleResult",
    "OracleSizeError",
    "PMeanDensestSubgraph",
    "PeelConfig",
    "PeelState",
    "PeelTrace",
    "PmeanPeelError",
    "SpeedupRow",
    "barabasi_albert",
    "erdos_renyi",
    "exact_optimum",
    "genpeel",
    "genpeelpp",
    "load_edge_list",
    "maxcore",
    "named_small_graphs",
    "naive_optimum",
    "power_table",
    "ratio_curve",
    "report",
    "round_bound",
    "run",
    "run_grid",
    "simpeel",
    "speedup_report",
    "subset_objective",
    "subset_p_mean",
    "validate_exponent",
    "write_csv",
    "write_jsonl",
    "write_ratio_file",
    "__version__",
]
