"""Brute-force enumeration of labeled realizations, used as a test oracle."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

from .bmatching import Infeasible
from .graph_core import (
    DiGraph,
    SimpleGraph,
    check_degree_sequence,
    check_pair_sequence,
    directed_randic,
    is_connected,
    randic_index,
)

# labeled realization counts explode past these sizes
MAX_NODES = 8
MAX_DIRECTED_NODES = 6


def enumerate_realizations(d: Sequence[int]) -> Iterator[SimpleGraph]:
    """Yield every labeled simple graph with degree sequence ``d`` once.

    Node ``i`` picks its neighbours among ``j > i`` in lexicographic order;
    residual degrees prune the search.
    """
    d = check_degree_sequence(d)
    n = len(d)
    if n > MAX_NODES:
        raise ValueError(f"enumeration capped at n <= {MAX_NODES}")
    if sum(d) % 2:
        return
    res = list(d)
    edges: list[tuple[int, int]] = []

    def rec(i: int) -> Iterator[SimpleGraph]:
        if i == n:
            yield SimpleGraph(n, edges)
            return
        need = res[i]
        open_ = [j for j in range(i + 1, n) if res[j] > 0]
        if need > len(open_):
            return
        for chosen in combinations(open_, need):
            for j in chosen:
                res[j] -= 1
                edges.append((i, j))
            res[i] = 0
            yield from rec(i + 1)
            res[i] = need
            for j in chosen:
                res[j] += 1
                edges.pop()

    yield from rec(0)


def brute_optimum(d: Sequence[int], objective: str = "min", connected_only: bool = False) -> tuple[int, SimpleGraph]:
    """Extremal Randić index over all (optionally connected) realizations.

    Raises :class:`Infeasible` when there is no such realization.
    """
    if objective not in ("min", "max"):
        raise ValueError(f"objective must be 'min' or 'max', got {objective!r}")
    best: tuple[int, SimpleGraph] | None = None
    for G in enumerate_realizations(d):
        if connected_only and not is_connected(G):
            continue
        r = randic_index(G, 1)
        if best is None or (r < best[0] if objective == "min" else r > best[0]):
            best = (r, G)
    if best is None:
        raise Infeasible(f"no {'connected ' if connected_only else ''}realization of {list(d)}")
    return best


def brute_min_randic(d: Sequence[int], connected_only: bool = False) -> tuple[int, SimpleGraph]:
    return brute_optimum(d, "min", connected_only)


def brute_max_randic(d: Sequence[int], connected_only: bool = False) -> tuple[int, SimpleGraph]:
    return brute_optimum(d, "max", connected_only)


def enumerate_directed_realizations(pairs: Sequence[Sequence[int]]) -> Iterator[DiGraph]:
    """Yield every labeled digraph without loops realizing the (out, in) pairs."""
    pairs = check_pair_sequence(pairs)
    n = len(pairs)
    if n > MAX_DIRECTED_NODES:
        raise ValueError(f"directed enumeration capped at n <= {MAX_DIRECTED_NODES}")
    if sum(o for o, _ in pairs) != sum(i for _, i in pairs):
        return
    res_in = [i for _, i in pairs]
    arcs: list[tuple[int, int]] = []

    def rec(i: int) -> Iterator[DiGraph]:
        if i == n:
            if not any(res_in):
                yield DiGraph(n, arcs)
            return
        open_ = [j for j in range(n) if j != i and res_in[j] > 0]
        for chosen in combinations(open_, pairs[i][0]):
            for j in chosen:
                res_in[j] -= 1
                arcs.append((i, j))
            yield from rec(i + 1)
            for j in chosen:
                res_in[j] += 1
                arcs.pop()

    yield from rec(0)


def brute_directed_optimum(pairs, p: str, q: str, objective: str = "min") -> tuple[int, DiGraph]:
    best: tuple[int, DiGraph] | None = None
    for G in enumerate_directed_realizations(pairs):
        r = directed_randic(G, p, q)
        if best is None or (r < best[0] if objective == "min" else r > best[0]):
            best = (r, G)
    if best is None:
        raise Infeasible(f"no digraph realizes {list(pairs)}")
    return best
