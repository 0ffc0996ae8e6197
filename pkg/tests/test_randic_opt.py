import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from randic.bmatching import Infeasible
from randic.graph_core import degree_sequence, directed_randic, is_connected, randic_index
from randic.graphic import havel_hakimi, random_two_switch
from randic.oracle import brute_directed_optimum, brute_max_randic, brute_min_randic
from randic.randic_opt import (
    NotGraphicError,
    build_instance,
    format_percent,
    maximize_randic,
    minimize_directed_randic,
    minimize_randic,
    normalization_report,
    normalized_randic,
)

from .strategies import graphic_sequences


def test_worked_example():
    res = minimize_randic([3, 2, 2, 2, 2, 1])
    assert res.index_value == 27
    assert degree_sequence(res.realization) == [3, 2, 2, 2, 2, 1]
    assert randic_index(res.realization) == 27
    assert maximize_randic([3, 2, 2, 2, 2, 1]).index_value == 28


@settings(max_examples=60)
@given(graphic_sequences(max_n=7).filter(lambda d: sum(d) <= 24))
def test_min_max_match_oracle(d):
    lo, hi = minimize_randic(d), maximize_randic(d)
    assert lo.index_value == brute_min_randic(d)[0]
    assert hi.index_value == brute_max_randic(d)[0]
    for res in (lo, hi):
        assert degree_sequence(res.realization) == d
        assert randic_index(res.realization) == res.index_value
        assert res.connected == is_connected(res.realization)


@settings(max_examples=25)
@given(graphic_sequences(min_n=2, max_n=16), st.integers(0, 2**32 - 1))
def test_random_realizations_are_bracketed(d, seed):
    rng = np.random.default_rng(seed)
    lo = minimize_randic(d).index_value
    hi = maximize_randic(d).index_value
    G = havel_hakimi(d)
    for _ in range(100):
        G = random_two_switch(G, rng)
        assert lo <= randic_index(G) <= hi


@settings(max_examples=25)
@given(graphic_sequences(min_n=2, max_n=14), st.randoms(use_true_random=False))
def test_permutation_invariance(d, r):
    perm = list(range(len(d)))
    r.shuffle(perm)
    e = [d[perm[i]] for i in range(len(d))]
    assert minimize_randic(e).index_value == minimize_randic(d).index_value
    assert maximize_randic(e).index_value == maximize_randic(d).index_value


def test_larger_sequence_uses_pricing_and_agrees_with_full_solve():
    rng = np.random.default_rng(11)
    while True:
        d = [int(x) for x in rng.integers(1, 6, size=20)]
        if sum(d) % 2 == 0 and havel_hakimi(d) is not None:
            break
    from randic.bmatching import solve_min_bmatching

    full = solve_min_bmatching(build_instance(d))
    assert minimize_randic(d).index_value == full.weight


def test_zero_degrees_become_isolated_nodes():
    res = minimize_randic([0, 1, 1, 0])
    assert res.realization.edges == ((1, 2),)
    assert res.index_value == 1
    assert not res.connected
    empty = minimize_randic([0, 0])
    assert empty.index_value == 0 and empty.realization.m == 0


def test_not_graphic_rejected():
    with pytest.raises(NotGraphicError):
        minimize_randic([3, 1])
    with pytest.raises(ValueError):
        minimize_randic([1, -1])


def test_general_alpha_is_close_to_brute():
    d = [3, 2, 2, 2, 2, 1]
    res = minimize_randic(d, alpha=-0.5)
    from randic.oracle import enumerate_realizations

    best = min(randic_index(G, -0.5) for G in enumerate_realizations(d))
    assert res.index_value == pytest.approx(best, abs=1e-5)
    with pytest.raises(ValueError):
        minimize_randic(d, alpha=0)


SMALL_PAIRS = [(2, 1), (2, 1), (1, 2), (1, 2)]


@pytest.mark.parametrize("pq", ["++", "+-", "-+", "--"])
@pytest.mark.parametrize("objective", ["min", "max"])
def test_directed_small_sequence(pq, objective):
    res = minimize_directed_randic(SMALL_PAIRS, pq[0], pq[1], objective)
    want, _ = brute_directed_optimum(SMALL_PAIRS, pq[0], pq[1], objective)
    assert res.index_value == want
    assert res.realization.degree_pairs() == SMALL_PAIRS
    assert directed_randic(res.realization, pq[0], pq[1]) == want


@st.composite
def pair_sequences(draw):
    from randic.graph_core import DiGraph

    n = draw(st.integers(1, 5))
    arcs = [(i, j) for i in range(n) for j in range(n) if i != j]
    mask = draw(st.lists(st.booleans(), min_size=len(arcs), max_size=len(arcs)))
    return DiGraph(n, [a for a, k in zip(arcs, mask) if k]).degree_pairs()


@settings(max_examples=40)
@given(pair_sequences(), st.sampled_from(["++", "+-", "-+", "--"]))
def test_directed_matches_oracle(pairs, pq):
    assert minimize_directed_randic(pairs, pq[0], pq[1]).index_value == brute_directed_optimum(pairs, pq[0], pq[1])[0]


@settings(max_examples=30)
@given(pair_sequences(), st.sampled_from(["++", "+-", "-+", "--"]))
def test_directed_reversal_symmetry(pairs, pq):
    p, q = pq
    flip = {"+": "-", "-": "+"}
    swapped = [(i, o) for o, i in pairs]
    a = minimize_directed_randic(pairs, p, q).index_value
    b = minimize_directed_randic(swapped, flip[q], flip[p]).index_value
    assert a == b


def test_directed_infeasible():
    with pytest.raises(Infeasible):
        minimize_directed_randic([(1, 0), (1, 0)], "+", "-")
    with pytest.raises(Infeasible):
        minimize_directed_randic([(2, 0), (0, 1), (0, 1)][:2], "+", "-")


def test_normalized_randic_in_unit_interval(rng):
    G = havel_hakimi([3, 3, 2, 2, 2, 2])
    for _ in range(20):
        G = random_two_switch(G, rng)
        r = normalized_randic(G)
        assert 0 < r <= 1
    star = havel_hakimi([3, 1, 1, 1])
    assert normalized_randic(star) == 1


def test_normalization_report_format():
    ratio, text = normalization_report(172910.5, 182773.6)
    assert text == "94.6%"
    assert ratio == pytest.approx(0.946, abs=5e-4)
    assert normalization_report(210683, 226302)[1] == "93.1%"
    assert format_percent(1.0) == "100%"
    assert format_percent(0.12345) == "12.35%"
    with pytest.raises(ValueError):
        normalization_report(1, 0)
