import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from randic.connector import CannotConnect, connect_by_two_switches, percent_difference
from randic.graph_core import SimpleGraph, connected_components, degree_sequence, is_connected, randic_index
from randic.randic_opt import minimize_randic


def cycles(sizes):
    edges, base = [], 0
    for k in sizes:
        edges += [(base + i, base + (i + 1) % k) for i in range(k)]
        base += k
    return SimpleGraph(base, edges)


def test_two_triangles():
    G = cycles([3, 3])
    rep = connect_by_two_switches(G, np.random.default_rng(0))
    assert is_connected(rep.graph)
    assert len(rep.switches) == 1
    assert rep.r_before == rep.r_after == 24
    assert rep.line() == "switches=1 R_before=24 R_after=24 pct=0.00"


def test_already_connected_is_noop():
    G = cycles([5])
    rep = connect_by_two_switches(G, np.random.default_rng(0))
    assert rep.graph == G and rep.switches == []


@given(st.lists(st.integers(3, 6), min_size=2, max_size=6), st.integers(0, 2**32 - 1))
def test_cycle_unions_connect_with_exact_switch_count(sizes, seed):
    G = cycles(sizes)
    rep = connect_by_two_switches(G, np.random.default_rng(seed))
    assert is_connected(rep.graph)
    assert degree_sequence(rep.graph) == degree_sequence(G)
    assert len(rep.switches) == len(sizes) - 1


def test_tree_components_need_a_cycle_somewhere():
    # K4 plus two single edges: degree sum 16 >= 2 * 7
    k4 = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    G = SimpleGraph(8, k4 + [(4, 5), (6, 7)])
    rep = connect_by_two_switches(G, np.random.default_rng(1))
    assert is_connected(rep.graph) and len(rep.switches) == 2


def test_rejects_sequences_without_connected_realization():
    with pytest.raises(CannotConnect):
        connect_by_two_switches(SimpleGraph(4, [(0, 1), (2, 3)]), np.random.default_rng(0))
    with pytest.raises(CannotConnect):
        connect_by_two_switches(SimpleGraph(3, [(0, 1)]), np.random.default_rng(0))


def test_disconnected_minimum_is_repaired():
    # min realization of this sequence splits into components
    d = [3, 3, 3, 3, 1, 1, 1, 1, 2, 2]
    best = minimize_randic(d)
    assert not best.connected
    rep = connect_by_two_switches(best.realization, np.random.default_rng(5))
    assert is_connected(rep.graph)
    assert rep.r_after >= best.index_value
    assert len(rep.switches) == len(connected_components(best.realization)) - 1
    assert randic_index(rep.graph) == rep.r_after


def test_percent_difference():
    assert percent_difference(110, 100) == pytest.approx(10)
    assert percent_difference(100, 100) == 0
    with pytest.raises(ValueError):
        percent_difference(1, 0)
