import math

import numpy as np
import pytest

from randic.generators import er_probability, erdos_renyi, geometric, geometric_radius, scale_free
from randic.graph_core import degree_sequence, is_connected


def test_er_extremes():
    rng = np.random.default_rng(0)
    assert erdos_renyi(10, 0.0, rng).m == 0
    assert erdos_renyi(10, 1.0, rng).m == 45


def test_er_density_close_to_p():
    rng = np.random.default_rng(1)
    m = [erdos_renyi(60, 0.1, rng).m for _ in range(30)]
    assert abs(np.mean(m) / 1770 - 0.1) < 0.01


def test_er_seed_determinism():
    a = erdos_renyi(30, 0.2, np.random.default_rng(42))
    b = erdos_renyi(30, 0.2, np.random.default_rng(42))
    assert a == b


def test_geometric_radius_bounds():
    rng = np.random.default_rng(2)
    assert geometric(12, 0.0, rng).m == 0
    assert geometric(12, math.sqrt(2), rng).m == 66


def test_geometric_matches_distances():
    rng = np.random.default_rng(3)
    G = geometric(40, 0.25, np.random.default_rng(3))
    pts = rng.random((40, 2))
    want = {(i, j) for i in range(40) for j in range(i + 1, 40) if ((pts[i] - pts[j]) ** 2).sum() <= 0.0625}
    assert G.edge_set() == want


def test_scale_free_shape():
    for seed in range(5):
        G = scale_free(50, 2, np.random.default_rng(seed))
        d = degree_sequence(G)
        assert G.m == 3 + 2 * 47
        assert min(d) >= 2 and is_connected(G)


def test_scale_free_seed_clique_only():
    G = scale_free(3, 2, np.random.default_rng(0))
    assert G.m == 3


def test_defaults():
    assert er_probability(25) == pytest.approx(0.17)
    assert geometric_radius(25) == pytest.approx(math.sqrt(6 / (25 * math.pi)))


@pytest.mark.parametrize(
    "call",
    [
        lambda r: erdos_renyi(0, 0.5, r),
        lambda r: erdos_renyi(5, 1.5, r),
        lambda r: geometric(5, -1, r),
        lambda r: scale_free(2, 2, r),
        lambda r: scale_free(5, 0, r),
    ],
)
def test_invalid_parameters(call):
    with pytest.raises(ValueError):
        call(np.random.default_rng(0))
