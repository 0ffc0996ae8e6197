"""Degree-preserving repair of disconnected realizations by two-switches."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph_core import SimpleGraph, bridges, connected_components, degree_sequence, randic_index
from .graphic import TwoSwitch, apply_two_switch, has_connected_realization


class CannotConnect(ValueError):
    pass


@dataclass(frozen=True)
class ConnectReport:
    graph: SimpleGraph
    switches: list[TwoSwitch]
    r_before: int
    r_after: int

    @property
    def pct(self) -> float:
        return percent_difference(self.r_after, self.r_before)

    def line(self) -> str:
        return f"switches={len(self.switches)} R_before={self.r_before} R_after={self.r_after} pct={self.pct:.2f}"


def percent_difference(value: float, reference: float) -> float:
    """``100 * (value - reference) / reference``."""
    if reference <= 0:
        raise ValueError(f"reference must be positive, got {reference}")
    return 100.0 * (value - reference) / reference


def _pick_pair(comps: list[list[int]], cyclic: list[bool]) -> tuple[int, int]:
    """Smallest component plus the smallest partner that makes the pair
    contain a cycle (a merge needs a non-bridge edge on one side)."""
    order = sorted(range(len(comps)), key=lambda c: (len(comps[c]), comps[c][0]))
    first = order[0]
    for c in order[1:]:
        if cyclic[first] or cyclic[c]:
            return first, c
    # the smallest component is a tree and no other component has a cycle
    raise CannotConnect("no component has a cycle to spend on a merge")


def connect_by_two_switches(G: SimpleGraph, rng: np.random.Generator) -> ConnectReport:
    """Join the components of ``G`` with one two-switch per merge.

    Each step takes a random edge from each of two components, one of them
    a non-bridge so that the switch cannot split anything, and rewires the
    four endpoints across the components. Of the two possible rewirings the
    one with the smaller degree-product sum is used. Exactly
    ``components - 1`` switches are applied.
    """
    deg = degree_sequence(G)
    if not has_connected_realization(deg):
        raise CannotConnect(f"degree sequence {deg} has no connected realization")
    r_before = randic_index(G, 1)
    applied: list[TwoSwitch] = []
    while True:
        comps = connected_components(G)
        if len(comps) == 1:
            break
        where = {v: c for c, comp in enumerate(comps) for v in comp}
        per_comp: list[list[tuple[int, int]]] = [[] for _ in comps]
        for e in G.edges:
            per_comp[where[e[0]]].append(e)
        if any(not es for es in per_comp):
            raise CannotConnect("a component has no edges")
        cut = bridges(G)
        loose = [[e for e in es if e not in cut] for es in per_comp]
        x, y = _pick_pair(comps, [bool(es) for es in loose])
        if not loose[x]:
            x, y = y, x
        a, b = loose[x][int(rng.integers(len(loose[x])))]
        c, d = per_comp[y][int(rng.integers(len(per_comp[y])))]
        if rng.random() < 0.5:
            a, b = b, a
        # edges in different components share no node and no cross edge exists
        first = deg[a] * deg[d] + deg[c] * deg[b]
        second = deg[a] * deg[c] + deg[b] * deg[d]
        s = TwoSwitch(a, b, c, d) if first <= second else TwoSwitch(a, b, d, c)
        G = apply_two_switch(G, s)
        applied.append(s)
        if len(connected_components(G)) != len(comps) - 1:
            raise AssertionError("two-switch did not merge exactly two components")
    return ConnectReport(G, applied, r_before, randic_index(G, 1))
