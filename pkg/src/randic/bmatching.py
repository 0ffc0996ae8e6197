"""Exact minimum-weight perfect b-matching.

General hosts are reduced to perfect 1-matching: node ``v`` becomes ``b_v``
clones, and host edge ``(u, v)`` becomes a pair of gadget nodes ``g_u - g_v``
with ``g_u`` adjacent to every clone of ``u`` (likewise ``g_v``). Selecting
the host edge matches ``g_u`` and ``g_v`` to clones; leaving it out matches
``g_u`` to ``g_v``. The gadget edge carries the host weight, so a
maximum-weight perfect matching of the gadget graph leaves out the heaviest
possible host edges and therefore selects a minimum-weight b-matching.

Bipartite hosts go through min-cost flow instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np
from scipy.optimize import linprog
from scipy.sparse import coo_matrix

from .blossom import max_weight_matching, verify_certificate
from .flow import FlowNetwork
from .graph_core import Edge, SimpleGraph

# Real weights are rounded to integers after multiplying by this factor.
WEIGHT_SCALE = 10**6
DEFAULT_CLONE_BUDGET = 200_000


class Infeasible(Exception):
    """No perfect b-matching exists for the instance."""


class SolverBudgetError(ValueError):
    pass


@dataclass(frozen=True)
class MatchingInstance:
    host: SimpleGraph
    weights: Mapping[Edge, float]
    b: tuple[int, ...]
    bipartite: tuple[int, int] | None = None

    def __init__(self, host, weights, b, bipartite=None):
        b = tuple(int(x) for x in b)
        if len(b) != host.n:
            raise ValueError(f"b has length {len(b)} but host has {host.n} nodes")
        if any(x < 1 for x in b):
            raise ValueError("b must be a positive integer vector")
        w = {}
        for (i, j), val in weights.items():
            w[(min(i, j), max(i, j))] = val
        missing = [e for e in host.edges if e not in w]
        if missing:
            raise ValueError(f"no weight for host edges {missing[:5]}")
        if bipartite is not None:
            n1, n2 = bipartite
            if n1 + n2 != host.n:
                raise ValueError("bipartite part sizes do not add up to the node count")
            if any(not (i < n1 <= j) for i, j in host.edges):
                raise ValueError("host edge does not cross the bipartition")
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "weights", {e: w[e] for e in host.edges})
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "bipartite", None if bipartite is None else tuple(bipartite))

    @classmethod
    def from_matrix(cls, H, b: Sequence[int]) -> "MatchingInstance":
        """Complete host on ``len(b)`` nodes with weights read from ``H``."""
        H = np.asarray(H)
        n = len(b)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
        weights = {e: H[e].item() for e in edges}
        return cls(SimpleGraph(n, edges), weights, b)


@dataclass(frozen=True)
class Matching:
    edges: tuple[Edge, ...]
    weight: float
    # |reported - true optimum| bound caused by rounding real weights
    rounding_bound: float = 0.0
    pricing_rounds: int = field(default=0, compare=False)

    def degrees(self, n: int) -> list[int]:
        deg = [0] * n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg


def _integer_weights(inst: MatchingInstance) -> tuple[dict[Edge, int], float]:
    """Integer weights for the solver plus the rounding error bound."""
    if all(isinstance(w, (int, np.integer)) or float(w).is_integer() for w in inst.weights.values()):
        return {e: int(w) for e, w in inst.weights.items()}, 0.0
    scaled = {e: int(round(float(w) * WEIGHT_SCALE)) for e, w in inst.weights.items()}
    # each of the sum(b)/2 selected edges is off by at most half a unit, and
    # the error can hit both the returned and the true optimum
    return scaled, sum(inst.b) / (2 * WEIGHT_SCALE)


def _check_counts(inst: MatchingInstance) -> None:
    if sum(inst.b) % 2:
        raise Infeasible("sum of b is odd")
    deg = inst.host.degree
    bad = [v for v in range(inst.host.n) if inst.b[v] > deg(v)]
    if bad:
        raise Infeasible(f"b exceeds host degree at nodes {bad[:5]}")


def _finish(inst: MatchingInstance, chosen: list[Edge], bound: float, rounds: int) -> Matching:
    chosen = sorted(chosen)
    deg = [0] * inst.host.n
    for i, j in chosen:
        deg[i] += 1
        deg[j] += 1
    if tuple(deg) != inst.b:
        raise AssertionError("solver output violates the degree targets")
    weights = [inst.weights[e] for e in chosen]
    if all(isinstance(w, (int, np.integer)) for w in weights):
        total = sum(int(w) for w in weights)
    else:
        total = math.fsum(float(w) for w in weights)
    return Matching(tuple(chosen), total, bound, rounds)


def _gadget_solve(n: int, b: Sequence[int], edges: Sequence[Edge], gain: Mapping[Edge, int], budget: int):
    """Solve the gadget matching over the host edges ``edges``.

    Host edges with an endpoint of ``b = 1`` skip the gadget and join the
    clones directly (with weight ``-gain``); at most one of those edges can
    be matched, so no host edge is picked twice.

    Gadget weights are doubled so that the warm-start duals are all even.
    Returns ``(selected host edges, reach)`` or ``None`` when the gadget
    graph has no perfect matching; an excluded host edge ``(u, v)`` can
    improve the optimum only if ``reach[u] + reach[v] > 4 * gain``.
    """
    total_b = sum(b)
    gadgets = [e for e in edges if b[e[0]] > 1 and b[e[1]] > 1]
    size = total_b + 2 * len(gadgets)
    if size > budget:
        raise SolverBudgetError(
            f"gadget graph needs {size} nodes, over the budget of {budget}; "
            "raise clone_budget or shrink the instance"
        )
    offset = [0] * (n + 1)
    for v in range(n):
        offset[v + 1] = offset[v] + b[v]
    # warm start: every gadget pair matched, i.e. no host edge selected
    dual = [None] * size
    gedges: list[tuple[int, int, int]] = []
    owner: list[Edge | None] = []
    matched = []

    def lift(c: int, val: int) -> None:
        if dual[c] is None or dual[c] < val:
            dual[c] = val

    base = total_b
    k = 0
    for u, v in edges:
        g = 2 * gain[(u, v)]
        cu, cv = range(offset[u], offset[u + 1]), range(offset[v], offset[v + 1])
        if b[u] > 1 and b[v] > 1:
            gu, gv = base + 2 * k, base + 2 * k + 1
            k += 1
            for c in cu:
                gedges.append((c, gu, 0))
                owner.append(None)
            for c in cv:
                gedges.append((c, gv, 0))
                owner.append(None)
            matched.append(len(gedges))
            gedges.append((gu, gv, g))
            owner.append((u, v))
            dual[gu] = dual[gv] = g
        else:
            for x in cu:
                for y in cv:
                    gedges.append((x, y, -g))
                    owner.append((u, v))
        for c in cu:
            lift(c, -g)
        for c in cv:
            lift(c, -g)
    dual = [0 if x is None else x for x in dual]
    sol = max_weight_matching(size, gedges, init_matched=matched, init_dual=dual)
    if not sol.perfect:
        return None
    verify_certificate(size, gedges, sol)
    chosen = set()
    for idx, (x, y, _) in enumerate(gedges):
        e = owner[idx]
        if e is None:
            continue
        hit = sol.mate[x] == y
        if b[e[0]] > 1 and b[e[1]] > 1:
            hit = not hit
        if hit:
            chosen.add(e)
    # most negative clone dual per node: a gadget joined to node v must carry
    # at least -min(clone duals) to keep its clone edges dual feasible
    reach = [max(-sol.vertex_dual[c] for c in range(offset[v], offset[v + 1])) for v in range(n)]
    return sorted(chosen), reach


def solve_bmatching(
    inst: MatchingInstance,
    objective: str = "min",
    support: Iterable[Edge] | None = None,
    clone_budget: int = DEFAULT_CLONE_BUDGET,
    max_add_per_round: int | None = None,
) -> Matching:
    """Optimal perfect b-matching on a general host.

    ``support`` optionally names a subset of host edges to start from; edges
    outside it are priced in from the dual solution until no excluded edge
    could improve the objective, so the result is optimal on the full host
    either way. If the support admits no perfect b-matching the full host is
    used.
    """
    if objective not in ("min", "max"):
        raise ValueError(f"objective must be 'min' or 'max', got {objective!r}")
    _check_counts(inst)
    iw, bound = _integer_weights(inst)
    sign = 1 if objective == "min" else -1
    gain = {e: sign * w for e, w in iw.items()}
    n = inst.host.n
    all_edges = list(inst.host.edges)
    if support is None:
        active = set(all_edges)
    else:
        active = {(min(i, j), max(i, j)) for i, j in support}
        unknown = active.difference(inst.weights)
        if unknown:
            raise ValueError(f"support edges not in host: {sorted(unknown)[:5]}")
    cap = max_add_per_round or max(2 * n, 50)
    rounds = 0
    while True:
        rounds += 1
        res = _gadget_solve(n, inst.b, sorted(active), gain, clone_budget)
        if res is None:
            if len(active) == len(all_edges):
                raise Infeasible("host has no perfect b-matching")
            active = set(all_edges)
            continue
        chosen, reach = res
        violated = []
        for e in all_edges:
            if e in active:
                continue
            excess = reach[e[0]] + reach[e[1]] - 4 * gain[e]
            if excess > 0:
                violated.append((-excess, e))
        if not violated:
            return _finish(inst, chosen, bound, rounds)
        violated.sort()
        active.update(e for _, e in violated[:cap])


def lp_support(inst: MatchingInstance, per_node: int = 4) -> set[Edge]:
    """Promising host edges for a pricing start, read off the LP relaxation.

    Keeps the support of an optimal fractional b-matching (``0 <= x <= 1``)
    plus, for every node, its ``per_node`` incident edges of smallest reduced
    cost. Only a starting point: exactness comes from the pricing loop.
    """
    E = list(inst.host.edges)
    n, m = inst.host.n, len(E)
    if m == 0:
        return set()
    ends = np.asarray(E)
    cost = np.array([float(inst.weights[e]) for e in E])
    A = coo_matrix((np.ones(2 * m), (ends.ravel(), np.repeat(np.arange(m), 2))), shape=(n, m))
    res = linprog(cost, A_eq=A.tocsr(), b_eq=np.asarray(inst.b, float), bounds=(0, 1), method="highs")
    if res.status != 0:
        return set(E)
    y = res.eqlin.marginals
    reduced = cost - y[ends[:, 0]] - y[ends[:, 1]]
    keep = set(np.flatnonzero(res.x > 1e-9).tolist())
    incident: list[list[int]] = [[] for _ in range(n)]
    for k, (i, j) in enumerate(E):
        incident[i].append(k)
        incident[j].append(k)
    for ks in incident:
        ks.sort(key=lambda k: reduced[k])
        keep.update(ks[:per_node])
    return {E[k] for k in keep}


def solve_min_bmatching(inst: MatchingInstance, **kw) -> Matching:
    return solve_bmatching(inst, "min", **kw)


def solve_max_bmatching(inst: MatchingInstance, **kw) -> Matching:
    return solve_bmatching(inst, "max", **kw)


def solve_bipartite_bmatching(inst: MatchingInstance, objective: str = "min") -> Matching:
    """Optimal perfect b-matching on a bipartite host via min-cost flow."""
    if inst.bipartite is None:
        raise ValueError("instance has no bipartition")
    if objective not in ("min", "max"):
        raise ValueError(f"objective must be 'min' or 'max', got {objective!r}")
    n1, n2 = inst.bipartite
    left, right = inst.b[:n1], inst.b[n1:]
    if sum(left) != sum(right):
        raise Infeasible(f"part totals differ: {sum(left)} vs {sum(right)}")
    iw, bound = _integer_weights(inst)
    sign = 1 if objective == "min" else -1
    net = FlowNetwork(inst.host.n + 2)
    s, t = inst.host.n, inst.host.n + 1
    for v in range(n1):
        net.add_arc(s, v, left[v], 0)
    for v in range(n2):
        net.add_arc(n1 + v, t, right[v], 0)
    arc_of = {e: net.add_arc(e[0], e[1], 1, sign * iw[e]) for e in inst.host.edges}
    flow, _, pot = net.min_cost_flow(s, t, sum(left))
    if flow < sum(left):
        raise Infeasible("flow cannot saturate the degree targets")
    if net.reduced_cost_violations(pot):
        raise AssertionError("min-cost flow potentials do not certify optimality")
    chosen = [e for e, k in arc_of.items() if net.flow_on(k) == 1]
    return _finish(inst, chosen, bound, 1)


def solve_min_bipartite_bmatching(inst: MatchingInstance) -> Matching:
    return solve_bipartite_bmatching(inst, "min")


def max_transform(H) -> np.ndarray:
    """``(1 + max H) * M - H`` where ``M`` is all ones off the diagonal.

    For fixed ``b`` every perfect b-matching has ``sum(b) / 2`` edges, so a
    matching minimizes weight under ``H`` iff it maximizes weight under the
    result.
    """
    H = np.asarray(H)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ValueError("weight matrix must be square")
    if not np.array_equal(H, H.T):
        raise ValueError("weight matrix must be symmetric")
    if (H < 0).any():
        raise ValueError("weight matrix must be non-negative")
    if np.diag(H).any():
        raise ValueError("weight matrix must have a zero diagonal")
    M = np.ones_like(H) - np.eye(H.shape[0], dtype=H.dtype)
    return (1 + H.max()) * M - H
