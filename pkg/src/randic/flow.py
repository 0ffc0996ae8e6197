"""Min-cost flow by successive shortest paths (Dijkstra with potentials)."""

from __future__ import annotations

import heapq


class FlowNetwork:
    """Directed network with integer capacities and costs."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []
        self.cost: list[int] = []

    def add_arc(self, u: int, v: int, cap: int, cost: int) -> int:
        """Add ``u -> v``; returns the arc id (its residual twin is ``id ^ 1``)."""
        k = len(self.to)
        self.to += [v, u]
        self.cap += [cap, 0]
        self.cost += [cost, -cost]
        self.head[u].append(k)
        self.head[v].append(k + 1)
        return k

    def flow_on(self, k: int) -> int:
        return self.cap[k ^ 1]

    def _initial_potentials(self, s: int) -> list[int]:
        # Bellman-Ford over arcs with spare capacity; costs may be negative
        inf = float("inf")
        dist: list = [inf] * self.n
        dist[s] = 0
        for _ in range(self.n):
            changed = False
            for u in range(self.n):
                if dist[u] == inf:
                    continue
                for k in self.head[u]:
                    if self.cap[k] > 0 and dist[u] + self.cost[k] < dist[self.to[k]]:
                        dist[self.to[k]] = dist[u] + self.cost[k]
                        changed = True
            if not changed:
                break
        else:
            raise ValueError("negative-cost cycle in the initial network")
        finite = [d for d in dist if d != inf]
        top = max(finite) if finite else 0
        return [d if d != inf else top for d in dist]

    def min_cost_flow(self, s: int, t: int, demand: int) -> tuple[int, int, list[int]]:
        """Push up to ``demand`` units from ``s`` to ``t`` at minimum cost.

        Returns ``(flow, cost, potentials)``; ``flow < demand`` means the
        demand cannot be met.
        """
        pot = self._initial_potentials(s)
        flow = cost = 0
        to, cap, cst, head = self.to, self.cap, self.cost, self.head
        while flow < demand:
            dist = [None] * self.n
            prev = [-1] * self.n
            dist[s] = 0
            heap = [(0, s)]
            while heap:
                d, u = heapq.heappop(heap)
                if d != dist[u]:
                    continue
                pu = pot[u]
                for k in head[u]:
                    if cap[k] <= 0:
                        continue
                    v = to[k]
                    nd = d + cst[k] + pu - pot[v]
                    if dist[v] is None or nd < dist[v]:
                        dist[v] = nd
                        prev[v] = k
                        heapq.heappush(heap, (nd, v))
            if dist[t] is None:
                break
            cutoff = dist[t]
            for v in range(self.n):
                pot[v] += dist[v] if dist[v] is not None and dist[v] < cutoff else cutoff
            push = demand - flow
            v = t
            while v != s:
                k = prev[v]
                push = min(push, cap[k])
                v = to[k ^ 1]
            v = t
            while v != s:
                k = prev[v]
                cap[k] -= push
                cap[k ^ 1] += push
                cost += push * cst[k]
                v = to[k ^ 1]
            flow += push
        return flow, cost, pot

    def reduced_cost_violations(self, pot: list[int]) -> list[int]:
        """Residual arcs with negative reduced cost (empty for an optimal flow)."""
        bad = []
        for u in range(self.n):
            for k in self.head[u]:
                if self.cap[k] > 0 and self.cost[k] + pot[u] - pot[self.to[k]] < 0:
                    bad.append(k)
        return bad
