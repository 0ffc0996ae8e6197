"""Seeded random graph models.

Every generator takes a ``numpy.random.Generator``; the experiment code
builds them with ``numpy.random.default_rng(seed)`` (PCG64, 64-bit state),
so a seed fully determines the output.
"""

from __future__ import annotations

import math

import numpy as np

from .graph_core import SimpleGraph


def erdos_renyi(n: int, p: float, rng: np.random.Generator) -> SimpleGraph:
    """Each of the ``n(n-1)/2`` pairs is an edge iff its uniform draw is below ``p``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return SimpleGraph(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def geometric(n: int, r: float, rng: np.random.Generator) -> SimpleGraph:
    """Uniform points in the unit square, joined when within distance ``r``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if r < 0:
        raise ValueError(f"radius must be non-negative, got {r}")
    pts = rng.random((n, 2))
    diff = pts[:, None, :] - pts[None, :, :]
    close = (diff**2).sum(axis=2) <= r * r
    iu, ju = np.triu_indices(n, k=1)
    keep = close[iu, ju]
    return SimpleGraph(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def scale_free(n: int, min_degree: int, rng: np.random.Generator) -> SimpleGraph:
    """Preferential attachment from a clique of ``min_degree + 1`` nodes.

    Each new node links to ``min_degree`` distinct existing nodes drawn
    without replacement with probability proportional to current degree.
    """
    m = min_degree
    if m < 1:
        raise ValueError("min_degree must be at least 1")
    if n <= m:
        raise ValueError("n must exceed min_degree")
    edges = [(i, j) for i in range(m + 1) for j in range(i + 1, m + 1)]
    deg = np.zeros(n, dtype=float)
    deg[: m + 1] = m
    for v in range(m + 1, n):
        targets = rng.choice(v, size=m, replace=False, p=deg[:v] / deg[:v].sum())
        for t in targets.tolist():
            edges.append((t, v))
            deg[t] += 1
        deg[v] = m
    return SimpleGraph(n, edges)


def er_probability(n: int) -> float:
    """Edge probability giving mean degree 4.25 (``p = 4.25 / n``)."""
    return 4.25 / n


def geometric_radius(n: int) -> float:
    """Radius ``sqrt(6 / (pi * n))``, about six neighbours per node."""
    return math.sqrt(6 / (math.pi * n))


SF_MIN_DEGREE = 2
