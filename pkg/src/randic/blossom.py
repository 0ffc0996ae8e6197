"""Edmonds' primal-dual blossom algorithm for weighted perfect matching.

O(V^3) variant in the style of Galil's presentation: blossoms are kept as
nested cycles of sub-blossoms, vertex and blossom duals are stored doubled
so that integer weights keep every quantity integral.

The solver maximizes weight among maximum-cardinality matchings. When the
graph has a perfect matching the result is a maximum-weight perfect matching
and the final duals certify it (see :func:`verify_certificate`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

WEdge = tuple[int, int, int]


@dataclass
class MatchingSolution:
    """Matching plus the dual solution that certifies it.

    ``mate[v]`` is the partner of ``v`` or ``-1``. ``vertex_dual`` and
    ``blossom_dual`` are doubled duals; ``blossoms`` lists the vertex sets of
    blossoms that carry dual value.
    """

    mate: list[int]
    vertex_dual: list[int]
    blossoms: list[frozenset[int]]
    blossom_dual: list[int]

    def pairs(self) -> list[tuple[int, int]]:
        return [(v, w) for v, w in enumerate(self.mate) if 0 <= v < w]

    @property
    def perfect(self) -> bool:
        return all(w >= 0 for w in self.mate)


def max_weight_matching(
    n: int,
    edges: Sequence[WEdge],
    init_matched: Sequence[int] = (),
    init_dual: Sequence[int] | None = None,
) -> MatchingSolution:
    """Maximum-weight matching among maximum-cardinality matchings.

    ``edges`` holds ``(i, j, w)`` with integer ``w``; at most one edge per
    vertex pair, no self-loops.

    The search may be warm-started from a matching (edge indices in
    ``init_matched``) and doubled vertex duals ``init_dual`` such that every
    edge has ``dual[i] + dual[j] >= 2 * w`` with equality on the matched
    ones. Duals of unmatched vertices must share one parity, which keeps
    every dual update integral. Warm starts are only meaningful when a
    perfect matching is sought.
    """
    nedge = len(edges)
    for i, j, w in edges:
        if i == j:
            raise ValueError(f"self-loop at vertex {i}")
        if not isinstance(w, int):
            raise TypeError("edge weights must be integers")
    if nedge == 0:
        return MatchingSolution([-1] * n, [0] * n, [], [])

    maxweight = max(w for _, _, w in edges)
    endpoint = [edges[p >> 1][p & 1] for p in range(2 * nedge)]
    neighbend: list[list[int]] = [[] for _ in range(n)]
    for k, (i, j, _) in enumerate(edges):
        neighbend[i].append(2 * k + 1)
        neighbend[j].append(2 * k)
    wt = [w for _, _, w in edges]
    ei = [i for i, _, _ in edges]
    ej = [j for _, j, _ in edges]

    mate = [-1] * n
    # label: 0 free, 1 S-vertex/blossom, 2 T-vertex/blossom; bit 4 marks scanning
    label = [0] * (2 * n)
    labelend = [-1] * (2 * n)
    inblossom = list(range(n))
    blossomparent = [-1] * (2 * n)
    blossomchilds: list[list[int] | None] = [None] * (2 * n)
    blossombase = list(range(n)) + [-1] * n
    blossomendps: list[list[int] | None] = [None] * (2 * n)
    bestedge = [-1] * (2 * n)
    blossombestedges: list[list[int] | None] = [None] * (2 * n)
    unusedblossoms = list(range(n, 2 * n))
    dualvar = [maxweight] * n + [0] * n
    allowedge = [False] * nedge
    queue: list[int] = []

    if init_dual is not None:
        if len(init_dual) != n:
            raise ValueError("init_dual must have one entry per vertex")
        dualvar[:n] = [int(x) for x in init_dual]
    for k in init_matched:
        i, j = ei[k], ej[k]
        if mate[i] != -1 or mate[j] != -1:
            raise ValueError("init_matched is not a matching")
        mate[i] = 2 * k + 1
        mate[j] = 2 * k
    for k in range(nedge):
        s = dualvar[ei[k]] + dualvar[ej[k]] - 2 * wt[k]
        if s < 0 or (s != 0 and mate[ei[k]] == 2 * k + 1):
            raise ValueError("initial duals are infeasible or not tight on the matching")
    if len({dualvar[v] & 1 for v in range(n) if mate[v] == -1}) > 1:
        raise ValueError("initial duals of unmatched vertices differ in parity")

    def slack(k: int) -> int:
        return dualvar[ei[k]] + dualvar[ej[k]] - 2 * wt[k]

    def leaves(b: int):
        if b < n:
            yield b
            return
        stack = [b]
        while stack:
            t = stack.pop()
            if t < n:
                yield t
            else:
                stack.extend(blossomchilds[t])

    def assign_label(w: int, t: int, p: int) -> None:
        while True:
            b = inblossom[w]
            label[w] = label[b] = t
            labelend[w] = labelend[b] = p
            bestedge[w] = bestedge[b] = -1
            if t == 1:
                queue.extend(leaves(b))
                return
            base = blossombase[b]
            p = mate[base]
            w = endpoint[p]
            t = 1
            p ^= 1

    def scan_blossom(v: int, w: int) -> int:
        path = []
        base = -1
        while v != -1 or w != -1:
            b = inblossom[v]
            if label[b] & 4:
                base = blossombase[b]
                break
            path.append(b)
            label[b] = 5
            if labelend[b] == -1:
                v = -1
            else:
                v = endpoint[labelend[b]]
                b = inblossom[v]
                v = endpoint[labelend[b]]
            if w != -1:
                v, w = w, v
        for b in path:
            label[b] = 1
        return base

    def add_blossom(base: int, k: int) -> None:
        v, w = ei[k], ej[k]
        bb = inblossom[base]
        bv = inblossom[v]
        bw = inblossom[w]
        b = unusedblossoms.pop()
        blossombase[b] = base
        blossomparent[b] = -1
        blossomparent[bb] = b
        path: list[int] = []
        endps: list[int] = []
        blossomchilds[b] = path
        blossomendps[b] = endps
        while bv != bb:
            blossomparent[bv] = b
            path.append(bv)
            endps.append(labelend[bv])
            v = endpoint[labelend[bv]]
            bv = inblossom[v]
        path.append(bb)
        path.reverse()
        endps.reverse()
        endps.append(2 * k)
        while bw != bb:
            blossomparent[bw] = b
            path.append(bw)
            endps.append(labelend[bw] ^ 1)
            w = endpoint[labelend[bw]]
            bw = inblossom[w]
        label[b] = 1
        labelend[b] = labelend[bb]
        dualvar[b] = 0
        for v in leaves(b):
            if label[inblossom[v]] == 2:
                queue.append(v)
            inblossom[v] = b
        bestedgeto: dict[int, int] = {}
        for sub in path:
            if blossombestedges[sub] is None:
                cands = [p >> 1 for v in leaves(sub) for p in neighbend[v]]
            else:
                cands = blossombestedges[sub]
            for kk in cands:
                i, j = ei[kk], ej[kk]
                if inblossom[j] == b:
                    i, j = j, i
                bj = inblossom[j]
                if bj != b and label[bj] == 1:
                    cur = bestedgeto.get(bj, -1)
                    if cur == -1 or slack(kk) < slack(cur):
                        bestedgeto[bj] = kk
            blossombestedges[sub] = None
            bestedge[sub] = -1
        best = list(bestedgeto.values())
        blossombestedges[b] = best
        be = -1
        for kk in best:
            if be == -1 or slack(kk) < slack(be):
                be = kk
        bestedge[b] = be

    def expand_blossom(b: int, endstage: bool) -> None:
        for s in blossomchilds[b]:
            blossomparent[s] = -1
            if s < n:
                inblossom[s] = s
            elif endstage and dualvar[s] == 0:
                expand_blossom(s, endstage)
            else:
                for v in leaves(s):
                    inblossom[v] = s
        if not endstage and label[b] == 2:
            childs = blossomchilds[b]
            endps = blossomendps[b]
            entrychild = inblossom[endpoint[labelend[b] ^ 1]]
            j = childs.index(entrychild)
            if j & 1:
                j -= len(childs)
                jstep, endptrick = 1, 0
            else:
                jstep, endptrick = -1, 1
            p = labelend[b]
            while j != 0:
                label[endpoint[p ^ 1]] = 0
                label[endpoint[endps[j - endptrick] ^ endptrick ^ 1]] = 0
                assign_label(endpoint[p ^ 1], 2, p)
                allowedge[endps[j - endptrick] >> 1] = True
                j += jstep
                p = endps[j - endptrick] ^ endptrick
                allowedge[p >> 1] = True
                j += jstep
            bv = childs[j]
            label[endpoint[p ^ 1]] = label[bv] = 2
            labelend[endpoint[p ^ 1]] = labelend[bv] = p
            bestedge[bv] = -1
            j += jstep
            while childs[j] != entrychild:
                bv = childs[j]
                if label[bv] == 1:
                    j += jstep
                    continue
                v = -1
                for v in leaves(bv):
                    if label[v] != 0:
                        break
                if v != -1 and label[v] != 0:
                    label[v] = 0
                    label[endpoint[mate[blossombase[bv]]]] = 0
                    assign_label(v, 2, labelend[v])
                j += jstep
        label[b] = labelend[b] = -1
        blossomchilds[b] = blossomendps[b] = None
        blossombase[b] = -1
        blossombestedges[b] = None
        bestedge[b] = -1
        unusedblossoms.append(b)

    def augment_blossom(b: int, v: int) -> None:
        t = v
        while blossomparent[t] != b:
            t = blossomparent[t]
        if t >= n:
            augment_blossom(t, v)
        childs = blossomchilds[b]
        endps = blossomendps[b]
        i = j = childs.index(t)
        if i & 1:
            j -= len(childs)
            jstep, endptrick = 1, 0
        else:
            jstep, endptrick = -1, 1
        while j != 0:
            j += jstep
            t = childs[j]
            p = endps[j - endptrick] ^ endptrick
            if t >= n:
                augment_blossom(t, endpoint[p])
            j += jstep
            t = childs[j]
            if t >= n:
                augment_blossom(t, endpoint[p ^ 1])
            mate[endpoint[p]] = p ^ 1
            mate[endpoint[p ^ 1]] = p
        blossomchilds[b] = childs[i:] + childs[:i]
        blossomendps[b] = endps[i:] + endps[:i]
        blossombase[b] = blossombase[blossomchilds[b][0]]

    def augment_matching(k: int) -> None:
        for s, p in ((ei[k], 2 * k + 1), (ej[k], 2 * k)):
            while True:
                bs = inblossom[s]
                if bs >= n:
                    augment_blossom(bs, s)
                mate[s] = p
                if labelend[bs] == -1:
                    break
                t = endpoint[labelend[bs]]
                bt = inblossom[t]
                s = endpoint[labelend[bt]]
                j = endpoint[labelend[bt] ^ 1]
                if bt >= n:
                    augment_blossom(bt, j)
                mate[j] = labelend[bt]
                p = labelend[bt] ^ 1

    for _ in range(n):
        for x in range(2 * n):
            label[x] = 0
            bestedge[x] = -1
        for x in range(n, 2 * n):
            blossombestedges[x] = None
        for x in range(nedge):
            allowedge[x] = False
        queue.clear()
        for v in range(n):
            if mate[v] == -1 and label[inblossom[v]] == 0:
                assign_label(v, 1, -1)

        augmented = False
        while True:
            while queue and not augmented:
                v = queue.pop()
                for p in neighbend[v]:
                    k = p >> 1
                    w = endpoint[p]
                    bv, bw = inblossom[v], inblossom[w]
                    if bv == bw:
                        continue
                    if not allowedge[k]:
                        kslack = dualvar[v] + dualvar[w] - 2 * wt[k]
                        if kslack <= 0:
                            allowedge[k] = True
                    if allowedge[k]:
                        if label[bw] == 0:
                            assign_label(w, 2, p ^ 1)
                        elif label[bw] == 1:
                            base = scan_blossom(v, w)
                            if base >= 0:
                                add_blossom(base, k)
                            else:
                                augment_matching(k)
                                augmented = True
                                break
                        elif label[w] == 0:
                            label[w] = 2
                            labelend[w] = p ^ 1
                    elif label[bw] == 1:
                        if bestedge[bv] == -1 or kslack < slack(bestedge[bv]):
                            bestedge[bv] = k
                    elif label[w] == 0:
                        if bestedge[w] == -1 or kslack < slack(bestedge[w]):
                            bestedge[w] = k
            if augmented:
                break

            deltatype = -1
            delta = 0
            deltaedge = deltablossom = -1
            for v in range(n):
                if bestedge[v] != -1 and label[inblossom[v]] == 0:
                    d = slack(bestedge[v])
                    if deltatype == -1 or d < delta:
                        delta, deltatype, deltaedge = d, 2, bestedge[v]
            for b in range(2 * n):
                if bestedge[b] != -1 and blossomparent[b] == -1 and label[b] == 1:
                    d = slack(bestedge[b]) // 2
                    if deltatype == -1 or d < delta:
                        delta, deltatype, deltaedge = d, 3, bestedge[b]
            for b in range(n, 2 * n):
                if (
                    blossombase[b] >= 0
                    and blossomparent[b] == -1
                    and label[b] == 2
                    and (deltatype == -1 or dualvar[b] < delta)
                ):
                    delta, deltatype, deltablossom = dualvar[b], 4, b
            if deltatype == -1:
                # no augmenting path can be found: cardinality is maximum
                break

            for v in range(n):
                lab = label[inblossom[v]]
                if lab == 1:
                    dualvar[v] -= delta
                elif lab == 2:
                    dualvar[v] += delta
            for b in range(n, 2 * n):
                if blossombase[b] >= 0 and blossomparent[b] == -1:
                    if label[b] == 1:
                        dualvar[b] += delta
                    elif label[b] == 2:
                        dualvar[b] -= delta

            if deltatype == 2:
                allowedge[deltaedge] = True
                i, j = ei[deltaedge], ej[deltaedge]
                if label[inblossom[i]] == 0:
                    i, j = j, i
                queue.append(i)
            elif deltatype == 3:
                allowedge[deltaedge] = True
                queue.append(ei[deltaedge])
            else:
                expand_blossom(deltablossom, False)

        if not augmented:
            break
        for b in range(n, 2 * n):
            if blossomparent[b] == -1 and blossombase[b] >= 0 and label[b] == 1 and dualvar[b] == 0:
                expand_blossom(b, True)

    partner = [endpoint[p] if p >= 0 else -1 for p in mate]
    sets, zs = [], []
    for b in range(n, 2 * n):
        if blossombase[b] >= 0 and dualvar[b] != 0:
            sets.append(frozenset(leaves(b)))
            zs.append(dualvar[b])
    return MatchingSolution(partner, dualvar[:n], sets, zs)


def verify_certificate(n: int, edges: Sequence[WEdge], sol: MatchingSolution) -> None:
    """Check that ``sol`` is a maximum-weight perfect matching.

    Checks primal feasibility, dual feasibility (doubled reduced costs
    non-negative, blossom duals non-negative) and complementary slackness.
    Raises ``AssertionError`` on the first violation.
    """
    mate = sol.mate
    if not sol.perfect:
        raise AssertionError("matching is not perfect")
    for v in range(n):
        if mate[mate[v]] != v:
            raise AssertionError(f"mate array inconsistent at {v}")
    member: list[list[int]] = [[] for _ in range(n)]
    for idx, (s, z) in enumerate(zip(sol.blossoms, sol.blossom_dual)):
        if z < 0:
            raise AssertionError("negative blossom dual")
        for v in s:
            member[v].append(idx)
    inside = [0] * len(sol.blossoms)
    present = set()
    for i, j, w in edges:
        common = set(member[i]).intersection(member[j]) if member[i] and member[j] else ()
        s = sol.vertex_dual[i] + sol.vertex_dual[j] - 2 * w + 2 * sum(sol.blossom_dual[b] for b in common)
        if s < 0:
            raise AssertionError(f"edge ({i}, {j}) has negative reduced cost {s}")
        if mate[i] == j:
            present.add((min(i, j), max(i, j)))
            if s != 0:
                raise AssertionError(f"matched edge ({i}, {j}) is not tight")
            for b in common:
                inside[b] += 1
    for v in range(n):
        if (min(v, mate[v]), max(v, mate[v])) not in present:
            raise AssertionError(f"vertex {v} matched along a non-edge")
    for idx, s in enumerate(sol.blossoms):
        if 2 * inside[idx] + 1 != len(s):
            raise AssertionError("blossom with positive dual is not full")
