"""The four peelers: examples, trace invariants, and maintenance audits."""

import math

import numpy as np
import pytest

import pmeanpeel as pp
from pmeanpeel import _kernels
from pmeanpeel.errors import ConfigurationError

from conftest import k4_pendant, rel_close, triangle


def scratch_min_degree(graph, members):
    if not members:
        return 0
    return min(graph.induced_degree(set(members), v) for v in members)


def test_simpeel_examples():
    trace = pp.simpeel(triangle(), 0.5)
    assert list(trace.best_set) == [0, 1, 2]
    assert math.isclose(trace.best_value, math.sqrt(2.0), rel_tol=1e-12)

    trace = pp.simpeel(k4_pendant(), 1.0)
    assert list(trace.best_set) == [0, 1, 2, 3]
    assert trace.best_value == 3.0
    assert trace.removal_order[0] == 4      # the pendant goes first


def test_simpeel_tie_break_smallest_index():
    trace = pp.simpeel(pp.Graph.from_edges([(0, 1), (1, 2)]), 1.0)
    assert trace.removal_order[0] == 0


def test_genpeel_examples():
    trace = pp.genpeel(triangle(), 2.0)
    assert list(trace.best_set) == [0, 1, 2]
    assert trace.best_value == 4.0
    assert trace.rounds == 3


def test_genpeel_maintenance_audit_is_exact():
    for seed in range(5):
        g = pp.erdos_renyi(12, 0.4, seed=seed)
        for p in (1.0, 1.5, 2.0):
            trace = pp.genpeel(g, p, audit=True)
            assert trace.max_key_error <= 1e-9


def test_genpeelpp_examples():
    trace = pp.genpeelpp(triangle(), 2.0, 0.5)
    assert list(trace.best_set) == [0, 1, 2]
    assert trace.best_value == 4.0


def test_genpeelpp_round_bound_small():
    rng = np.random.default_rng(4)
    for n in (1, 2, 3, 7, 23, 100, 500):
        g = pp.random_gnm(n, 3 * n, seed=rng)
        for c in (0.25, 0.5, 0.75, 0.9):
            trace = pp.genpeelpp(g, 1.5, c)
            assert trace.rounds <= pp.round_bound(n, c)
            assert sorted(trace.removal_order) == list(range(n))


def test_genpeelpp_strict_progress():
    # one node per round even when the floor of the batch size is zero
    g = pp.Graph.from_edges([(0, 1), (1, 2), (0, 2)])
    trace = pp.genpeelpp(g, 2.0, 0.25)
    assert trace.rounds == 3


def test_maxcore_examples():
    trace = pp.maxcore(triangle())
    assert list(trace.best_set) == [0, 1, 2]
    assert trace.best_value == 2.0

    trace = pp.maxcore(k4_pendant())
    assert list(trace.best_set) == [0, 1, 2, 3]
    assert trace.best_value == 3.0


def test_maxcore_prefix_metric_is_min_degree():
    g = pp.erdos_renyi(40, 0.2, seed=3)
    trace = pp.maxcore(g)
    n = g.node_count
    for i in range(0, n + 1, 7):
        members = set(map(int, trace.removal_order[i:]))
        assert trace.prefix_value[i] == scratch_min_degree(g, members)


def test_removal_order_is_permutation():
    rng = np.random.default_rng(8)
    for _ in range(10):
        g = pp.erdos_renyi(int(rng.integers(2, 40)), float(rng.uniform(0.1, 0.7)),
                           seed=rng)
        for trace in (pp.simpeel(g, 1.5), pp.genpeel(g, 1.5),
                      pp.genpeelpp(g, 1.5, 0.5), pp.maxcore(g)):
            assert sorted(trace.removal_order) == list(range(g.node_count))


def test_prefix_values_match_scratch():
    rng = np.random.default_rng(15)
    for _ in range(6):
        n = int(rng.integers(5, 200))
        g = pp.random_gnm(n, 4 * n, seed=rng)
        for p in (0.5, 1.0, 2.0):
            for trace in (pp.simpeel(g, p),
                          pp.genpeel(g, p, allow_small_p=True),
                          pp.genpeelpp(g, p, 0.5, allow_small_p=True)):
                table = pp.power_table(g.max_degree, p)
                scratch = _kernels.replay_power(g.indptr, g.indices,
                                                trace.removal_order, table)
                for i in (0, 1, n // 2, n - 1, n):
                    live = n - i
                    expect = scratch[i] / live if live else 0.0
                    assert rel_close(trace.prefix_value[i], expect, rel=1e-6)


def test_trace_endpoints_and_best_recomputes():
    g = pp.erdos_renyi(25, 0.35, seed=5)
    for p in (1.0, 2.0):
        for trace in (pp.simpeel(g, p), pp.genpeel(g, p), pp.genpeelpp(g, p, 0.5)):
            assert rel_close(trace.prefix_value[0], pp.subset_objective(
                g, range(g.node_count), p), rel=1e-9)
            assert trace.prefix_value[g.node_count] == 0.0
            assert rel_close(trace.best_value,
                             pp.subset_objective(g, trace.best_set, p), rel=1e-6)


def test_determinism():
    g = pp.erdos_renyi(60, 0.2, seed=17)
    for build in (lambda: pp.simpeel(g, 1.5), lambda: pp.genpeel(g, 1.5),
                  lambda: pp.genpeelpp(g, 1.5, 0.5), lambda: pp.maxcore(g)):
        a, b = build(), build()
        assert np.array_equal(a.removal_order, b.removal_order)
        assert np.array_equal(a.prefix_value, b.prefix_value)
        assert a.best_index == b.best_index


def test_empty_graph():
    g = pp.Graph.from_edges([])
    for trace in (pp.simpeel(g, 1.0), pp.genpeel(g, 1.0),
                  pp.genpeelpp(g, 1.0, 0.5), pp.maxcore(g)):
        assert trace.removal_order.size == 0
        assert trace.best_set.size == 0
        assert trace.prefix_value[0] == 0.0
        assert trace.rounds == 0


def test_configuration_errors():
    g = triangle()
    with pytest.raises(ConfigurationError):
        pp.genpeel(g, 0.5)
    with pytest.raises(ConfigurationError):
        pp.genpeelpp(g, 0.5, 0.5)
    with pytest.raises(ConfigurationError):
        pp.genpeelpp(g, 2.0, 0.0)
    with pytest.raises(ConfigurationError):
        pp.genpeelpp(g, 2.0, 1.0)
    with pytest.raises(ConfigurationError):
        pp.simpeel(g, 0.0)
    with pytest.raises(ConfigurationError):
        pp.PeelConfig(algorithm="nope").validate()
    with pytest.raises(ConfigurationError):
        pp.PeelConfig(algorithm="simpeel", tie_break="random").validate()
    # the override unlocks small exponents for the generalized peelers
    assert pp.genpeelpp(g, 0.5, 0.5, allow_small_p=True).best_set.size == 3
    assert pp.genpeel(g, 0.5, allow_small_p=True).best_set.size == 3


def test_run_dispatch_matches_direct_calls():
    g = pp.erdos_renyi(30, 0.3, seed=9)
    pairs = [
        (pp.PeelConfig("simpeel", p=1.0), pp.simpeel(g, 1.0)),
        (pp.PeelConfig("genpeel", p=2.0), pp.genpeel(g, 2.0)),
        (pp.PeelConfig("genpeelpp", p=2.0, removal_fraction=0.25),
         pp.genpeelpp(g, 2.0, 0.25)),
        (pp.PeelConfig("maxcore"), pp.maxcore(g)),
    ]
    for config, direct in pairs:
        via_run = pp.run(g, config)
        assert np.array_equal(via_run.removal_order, direct.removal_order)
        assert np.array_equal(via_run.prefix_value, direct.prefix_value)
        assert via_run.algorithm == direct.algorithm
    with pytest.raises(ConfigurationError):
        pp.run(g, pp.PeelConfig("genpeelpp", p=0.5))


def test_genpeelpp_round_counter_for_quarter_fraction():
    g = pp.random_gnm(200, 600, seed=2)
    trace = pp.genpeelpp(g, 2.0, 0.25)
    assert trace.rounds <= math.ceil(math.log(200) / math.log(4 / 3)) + 1
