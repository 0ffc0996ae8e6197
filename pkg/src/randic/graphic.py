"""Graphic-sequence tests, Havel-Hakimi construction and two-switches."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph_core import SimpleGraph, check_degree_sequence, degree_sequence


class InvalidSwitch(ValueError):
    pass


def havel_hakimi(d: Sequence[int], rng: np.random.Generator | None = None) -> SimpleGraph | None:
    """Realize ``d`` greedily, or return ``None`` if it is not graphic.

    By default the node with the largest residual degree is laid off first
    (lowest index among ties). Passing ``rng`` picks the node to lay off
    uniformly among those with positive residual degree instead. Either way
    its residual degree is spread over the other nodes of largest residual
    degree, ties going to the lowest index.
    """
    res = check_degree_sequence(d)
    n = len(res)
    edges = []
    while True:
        live = [v for v in range(n) if res[v] > 0]
        if not live:
            return SimpleGraph(n, edges)
        if rng is None:
            i = min(live, key=lambda v: (-res[v], v))
        else:
            i = live[int(rng.integers(len(live)))]
        k = res[i]
        others = sorted((v for v in live if v != i), key=lambda v: (-res[v], v))
        if len(others) < k:
            return None
        for v in others[:k]:
            res[v] -= 1
            edges.append((i, v))
        res[i] = 0


def erdos_gallai(d: Sequence[int]) -> bool:
    """Erdős-Gallai inequalities, checked directly on the sorted sequence."""
    s = sorted(check_degree_sequence(d), reverse=True)
    if sum(s) % 2:
        return False
    n = len(s)
    lhs = 0
    for k in range(1, n + 1):
        lhs += s[k - 1]
        rhs = k * (k - 1) + sum(min(x, k) for x in s[k:])
        if lhs > rhs:
            return False
    return True


def is_graphic(d: Sequence[int]) -> bool:
    by_hh = havel_hakimi(d) is not None
    if by_hh != erdos_gallai(d):
        raise AssertionError(f"Havel-Hakimi and Erdős-Gallai disagree on {list(d)}")
    return by_hh


def has_connected_realization(d: Sequence[int]) -> bool:
    """True iff some connected simple graph has degree sequence ``d``."""
    d = check_degree_sequence(d)
    n = len(d)
    if n == 0:
        return False
    if n == 1:
        return d == [0]
    return min(d) >= 1 and sum(d) >= 2 * (n - 1) and is_graphic(d)


@dataclass(frozen=True)
class TwoSwitch:
    """Replace edges ``(a, b), (c, d)`` by ``(a, d), (c, b)``."""

    a: int
    b: int
    c: int
    d: int

    @property
    def remove(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)

    @property
    def add(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.d), (self.c, self.b)

    def inverse(self) -> "TwoSwitch":
        return TwoSwitch(self.a, self.d, self.c, self.b)


def switch_problem(G: SimpleGraph, s: TwoSwitch) -> str | None:
    """Why ``s`` cannot be applied to ``G``, or ``None`` if it can."""
    nodes = (s.a, s.b, s.c, s.d)
    if any(not 0 <= v < G.n for v in nodes):
        return f"node out of range in {nodes}"
    if len(set(nodes)) != 4:
        return f"switch nodes are not distinct: {nodes}"
    for i, j in s.remove:
        if not G.has_edge(i, j):
            return f"edge ({i}, {j}) to remove is absent"
    for i, j in s.add:
        if G.has_edge(i, j):
            return f"edge ({i}, {j}) to add is already present"
    return None


def apply_two_switch(G: SimpleGraph, s: TwoSwitch) -> SimpleGraph:
    problem = switch_problem(G, s)
    if problem is not None:
        raise InvalidSwitch(problem)
    gone = {tuple(sorted(e)) for e in s.remove}
    edges = [e for e in G.edges if e not in gone]
    edges.extend(s.add)
    return SimpleGraph(G.n, edges)


def random_two_switch(G: SimpleGraph, rng: np.random.Generator) -> SimpleGraph:
    """Apply one uniformly chosen valid two-switch.

    Proposals are drawn as an ordered pair of distinct edges plus an
    orientation of the second; after ``4 * m`` rejected proposals ``G`` is
    returned unchanged.
    """
    m = G.m
    if m < 2:
        return G
    for _ in range(4 * m):
        e, f = rng.choice(m, size=2, replace=False)
        a, b = G.edges[e]
        c, d = G.edges[f]
        if rng.random() < 0.5:
            c, d = d, c
        s = TwoSwitch(a, b, c, d)
        if switch_problem(G, s) is None:
            return apply_two_switch(G, s)
    return G


def all_two_switches(G: SimpleGraph) -> list[TwoSwitch]:
    """Every valid two-switch of ``G`` (both pairings of every edge pair)."""
    out = []
    for x in range(G.m):
        a, b = G.edges[x]
        for y in range(x + 1, G.m):
            for c, d in (G.edges[y], G.edges[y][::-1]):
                s = TwoSwitch(a, b, c, d)
                if switch_problem(G, s) is None:
                    out.append(s)
    return out


def same_degrees(G: SimpleGraph, H: SimpleGraph) -> bool:
    return degree_sequence(G) == degree_sequence(H)
