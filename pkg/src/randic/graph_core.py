"""Simple graphs, digraphs, degree bookkeeping and Randić index evaluation.

Nodes are dense integers ``0..n-1``. Graph values are immutable; every
operation here is a pure query.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Edge = tuple[int, int]

# Largest value representable in a signed 64-bit accumulator.
INT64_MAX = 2**63 - 1


def _norm(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on nodes ``0..n-1``.

    ``edges`` is stored as a sorted tuple of ``(i, j)`` pairs with ``i < j``.
    """

    n: int
    edges: tuple[Edge, ...]
    _adj: tuple[frozenset[int], ...] = field(repr=False, compare=False, default=())

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError(f"node count must be non-negative, got {n}")
        seen: set[Edge] = set()
        for e in edges:
            i, j = int(e[0]), int(e[1])
            if i == j:
                raise ValueError(f"self-loop at node {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) has an endpoint outside 0..{n - 1}")
            key = _norm(i, j)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        adj: list[set[int]] = [set() for _ in range(n)]
        for i, j in seen:
            adj[i].add(j)
            adj[j].add(i)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    def neighbors(self, i: int) -> frozenset[int]:
        return self._adj[i]

    def has_edge(self, i: int, j: int) -> bool:
        return j in self._adj[i]

    def degree(self, i: int) -> int:
        return len(self._adj[i])

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Return the graph with node ``i`` renamed to ``perm[i]``."""
        return SimpleGraph(self.n, [(perm[i], perm[j]) for i, j in self.edges])


@dataclass(frozen=True)
class DiGraph:
    """Directed graph without self-loops or parallel arcs."""

    n: int
    arcs: tuple[Edge, ...]

    def __init__(self, n: int, arcs: Iterable[Sequence[int]] = ()):
        seen: set[Edge] = set()
        for a in arcs:
            i, j = int(a[0]), int(a[1])
            if i == j:
                raise ValueError(f"self-loop at node {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"arc ({i}, {j}) has an endpoint outside 0..{n - 1}")
            if (i, j) in seen:
                raise ValueError(f"duplicate arc ({i}, {j})")
            seen.add((i, j))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", tuple(sorted(seen)))

    def out_degrees(self) -> list[int]:
        out = [0] * self.n
        for i, _ in self.arcs:
            out[i] += 1
        return out

    def in_degrees(self) -> list[int]:
        deg = [0] * self.n
        for _, j in self.arcs:
            deg[j] += 1
        return deg

    def degree_pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.out_degrees(), self.in_degrees()))

    def reverse(self) -> "DiGraph":
        return DiGraph(self.n, [(j, i) for i, j in self.arcs])


def check_degree_sequence(d: Sequence[int]) -> list[int]:
    """Validate a degree sequence and return it as a list of ints."""
    out = [int(x) for x in d]
    if any(x < 0 for x in out):
        raise ValueError(f"degree sequence has negative entries: {out}")
    return out


def check_pair_sequence(pairs: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    out = [(int(p[0]), int(p[1])) for p in pairs]
    if any(a < 0 or b < 0 for a, b in out):
        raise ValueError(f"degree pairs must be non-negative: {out}")
    return out


def degree_sequence(G: SimpleGraph) -> list[int]:
    return [G.degree(i) for i in range(G.n)]


def randic_index(G: SimpleGraph, alpha: float = 1) -> int | float:
    """Sum over edges of ``(d_i * d_j) ** alpha``.

    For ``alpha == 1`` the sum is accumulated exactly in integers and checked
    against the signed 64-bit range.
    """
    if alpha == 0:
        raise ValueError("alpha must be non-zero")
    deg = degree_sequence(G)
    if alpha == 1:
        total = 0
        for i, j in G.edges:
            total += deg[i] * deg[j]
            if total > INT64_MAX:
                raise OverflowError("Randić index exceeds the 64-bit range")
        return total
    return math.fsum((deg[i] * deg[j]) ** alpha for i, j in G.edges)


def _check_sign(s: str) -> str:
    if s not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {s!r}")
    return s


def directed_randic(G: DiGraph, p: str, q: str) -> int:
    """Directed index: sum over arcs ``i -> j`` of ``d_i^p * d_j^q``.

    ``'+'`` selects the out-degree and ``'-'`` the in-degree.
    """
    out, inn = G.out_degrees(), G.in_degrees()
    dp = out if _check_sign(p) == "+" else inn
    dq = out if _check_sign(q) == "+" else inn
    return sum(dp[i] * dq[j] for i, j in G.arcs)


def connected_components(G: SimpleGraph) -> list[list[int]]:
    """Components as sorted node lists, ordered by their smallest node."""
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in G.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(G: SimpleGraph) -> bool:
    return G.n >= 1 and len(connected_components(G)) == 1


def bridges(G: SimpleGraph) -> set[Edge]:
    """Edges whose removal disconnects their component (iterative low-link)."""
    disc = [-1] * G.n
    low = [0] * G.n
    out: set[Edge] = set()
    timer = 0
    for root in range(G.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(G.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(G.neighbors(w))))
                    break
                low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        out.add(_norm(parent, v))
    return out


def bipartite_double_cover(G: DiGraph) -> SimpleGraph:
    """Arc ``i -> j`` becomes undirected edge ``(i, n + j)``: out-copies then in-copies."""
    return SimpleGraph(2 * G.n, [(i, G.n + j) for i, j in G.arcs])
