"""Extremal Randić realizations of degree sequences via perfect b-matching."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bmatching import (
    Infeasible,
    MatchingInstance,
    lp_support,
    max_transform,
    solve_bipartite_bmatching,
    solve_min_bmatching,
)
from .graph_core import (
    DiGraph,
    SimpleGraph,
    check_degree_sequence,
    check_pair_sequence,
    degree_sequence,
    directed_randic,
    is_connected,
    randic_index,
)
from .graphic import havel_hakimi, is_graphic

# Complete hosts above this many nodes start from a sparse support and price
# in the remaining edges.
SUPPORT_THRESHOLD = 12
SUPPORT_PER_NODE = 4


class NotGraphicError(ValueError):
    pass


@dataclass(frozen=True)
class OptimizationResult:
    realization: SimpleGraph | DiGraph
    index_value: int | float
    objective: str
    connected: bool
    directed_variant: tuple[str, str] | None = None


def _check_objective(objective: str) -> None:
    if objective not in ("min", "max"):
        raise ValueError(f"objective must be 'min' or 'max', got {objective!r}")


def _product_matrix(d: Sequence[int], alpha: float = 1) -> np.ndarray:
    v = np.asarray(d, dtype=np.int64)
    if alpha == 1:
        H = np.outer(v, v)
    else:
        H = np.outer(v, v).astype(float) ** alpha
    np.fill_diagonal(H, 0)
    return H


def build_instance(d: Sequence[int], objective: str = "min", alpha: float = 1) -> MatchingInstance:
    """Matching instance whose minimum-weight solutions are the optimal realizations.

    The host is the complete graph, ``b = d`` and the weights are the degree
    products (raised to ``alpha``). For ``objective="max"`` the products are
    passed through :func:`max_transform`, which turns the maximization into
    a minimization over the same feasible set.
    """
    _check_objective(objective)
    d = check_degree_sequence(d)
    if not is_graphic(d):
        raise NotGraphicError(f"degree sequence {d} is not graphic")
    if 0 in d:
        raise ValueError("strip zero-degree nodes before building the instance")
    if alpha == 0:
        raise ValueError("alpha must be non-zero")
    H = _product_matrix(d, alpha)
    if objective == "max":
        H = max_transform(H)
    return MatchingInstance.from_matrix(H, d)


def _support(inst: MatchingInstance, d: Sequence[int], hh_rng=None) -> set[tuple[int, int]]:
    # a Havel-Hakimi realization guarantees the support has a perfect b-matching
    return lp_support(inst, SUPPORT_PER_NODE) | set(havel_hakimi(d, rng=hh_rng).edges)


def _optimize(d: Sequence[int], objective: str, alpha: float, hh_rng=None) -> OptimizationResult:
    _check_objective(objective)
    d = check_degree_sequence(d)
    if not is_graphic(d):
        raise NotGraphicError(f"degree sequence {d} is not graphic")
    keep = [i for i, x in enumerate(d) if x > 0]
    sub = [d[i] for i in keep]
    if not keep:
        G = SimpleGraph(len(d))
        return OptimizationResult(G, 0 if alpha == 1 else 0.0, objective, is_connected(G))
    inst = build_instance(sub, objective, alpha)
    support = _support(inst, sub, hh_rng) if len(sub) > SUPPORT_THRESHOLD else None
    try:
        match = solve_min_bmatching(inst, support=support)
    except Infeasible as exc:  # graphic sequences always have a realization
        raise AssertionError(f"solver found no realization of graphic {sub}") from exc
    G = SimpleGraph(len(d), [(keep[i], keep[j]) for i, j in match.edges])
    if degree_sequence(G) != d:
        raise AssertionError("realization does not match the degree sequence")
    value = randic_index(G, alpha)
    if alpha == 1:
        top = int(_product_matrix(sub).max())
        expected = match.weight if objective == "min" else (1 + top) * (sum(sub) // 2) - match.weight
        if value != expected:
            raise AssertionError(f"matching weight {expected} disagrees with index {value}")
    return OptimizationResult(G, value, objective, is_connected(G))


def minimize_randic(d: Sequence[int], alpha: float = 1, hh_rng=None) -> OptimizationResult:
    """Realization of ``d`` with the smallest Randić index (connectivity not enforced).

    Exact for ``alpha == 1``; other exponents go through weights rounded at
    a 1e-6 resolution, so the optimum is only guaranteed up to that rounding.
    ``hh_rng`` switches the Havel-Hakimi seed of the starting support to the
    random-index variant; it never changes the optimal value.
    """
    return _optimize(d, "min", alpha, hh_rng)


def maximize_randic(d: Sequence[int], alpha: float = 1, hh_rng=None) -> OptimizationResult:
    return _optimize(d, "max", alpha, hh_rng)


def optimize_randic(d: Sequence[int], objective: str = "min", alpha: float = 1, hh_rng=None) -> OptimizationResult:
    return _optimize(d, objective, alpha, hh_rng)


def _sign_degrees(pairs, sign: str) -> list[int]:
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    return [o if sign == "+" else i for o, i in pairs]


def build_directed_instance(pairs, p: str, q: str) -> tuple[MatchingInstance, list[int], list[int]]:
    """Bipartite instance for a directed pair sequence.

    Out-copies of nodes with positive out-degree form the left part and
    in-copies of nodes with positive in-degree the right part; every
    left-right pair except a node with itself is a host edge, weighted
    ``d_i^p * d_j^q``. Returns the instance and the node ids behind each part.
    """
    pairs = check_pair_sequence(pairs)
    dp, dq = _sign_degrees(pairs, p), _sign_degrees(pairs, q)
    outs = [i for i, (o, _) in enumerate(pairs) if o > 0]
    ins = [j for j, (_, x) in enumerate(pairs) if x > 0]
    n1 = len(outs)
    edges, weights = [], {}
    for a, i in enumerate(outs):
        for c, j in enumerate(ins):
            if i != j:
                e = (a, n1 + c)
                edges.append(e)
                weights[e] = dp[i] * dq[j]
    b = [pairs[i][0] for i in outs] + [pairs[j][1] for j in ins]
    inst = MatchingInstance(SimpleGraph(n1 + len(ins), edges), weights, b, bipartite=(n1, len(ins)))
    return inst, outs, ins


def minimize_directed_randic(pairs, p: str, q: str, objective: str = "min") -> OptimizationResult:
    """Digraph realizing the (out, in) pairs with optimal ``R^{pq}``.

    Raises :class:`Infeasible` if no simple digraph realizes ``pairs``.
    """
    _check_objective(objective)
    pairs = check_pair_sequence(pairs)
    n = len(pairs)
    if sum(o for o, _ in pairs) != sum(i for _, i in pairs):
        raise Infeasible("out-degree and in-degree totals differ")
    if all(o == 0 for o, _ in pairs):
        G = DiGraph(n)
        return OptimizationResult(G, 0, objective, False, (p, q))
    inst, outs, ins = build_directed_instance(pairs, p, q)
    match = solve_bipartite_bmatching(inst, objective)
    n1 = len(outs)
    G = DiGraph(n, [(outs[a], ins[c - n1]) for a, c in match.edges])
    if G.degree_pairs() != pairs:
        raise AssertionError("digraph does not realize the pair sequence")
    value = directed_randic(G, p, q)
    if value != match.weight:
        raise AssertionError(f"matching weight {match.weight} disagrees with index {value}")
    und = SimpleGraph(n, {(min(i, j), max(i, j)) for i, j in G.arcs})
    return OptimizationResult(G, value, objective, is_connected(und), (p, q))


def normalized_randic(G: SimpleGraph) -> float:
    """Randić index of ``G`` divided by the largest index over realizations of its degrees."""
    if G.n == 0 or G.m == 0:
        raise ValueError("normalization needs a graph with at least one edge")
    top = maximize_randic(degree_sequence(G)).index_value
    return randic_index(G, 1) / top


def format_percent(ratio: float) -> str:
    """Percentage with two decimals and trailing zeros dropped, e.g. ``94.6%``."""
    text = f"{100 * ratio:.2f}".rstrip("0").rstrip(".")
    return f"{text}%"


def normalization_report(original: float, maximum: float) -> tuple[float, str]:
    if maximum <= 0:
        raise ValueError("maximum must be positive")
    ratio = original / maximum
    return ratio, format_percent(ratio)
