"""Plain-text formats for graphs, degree sequences and matching instances."""

from __future__ import annotations

import re
from pathlib import Path

from .bmatching import Matching, MatchingInstance
from .graph_core import DiGraph, SimpleGraph, check_degree_sequence, check_pair_sequence

_SEP = re.compile(r"[\s,]+")


def _ints(line: str) -> list[int]:
    return [int(t) for t in _SEP.split(line.strip()) if t]


def _lines(text: str) -> list[str]:
    return [ln for ln in (raw.split("#", 1)[0].strip() for raw in text.splitlines()) if ln]


def parse_degree_sequence(text: str) -> list[int]:
    """Integers on one line, separated by whitespace and/or commas."""
    lines = _lines(text)
    if len(lines) != 1:
        raise ValueError(f"expected one line of degrees, got {len(lines)}")
    return check_degree_sequence(_ints(lines[0]))


def parse_pairs(text: str) -> list[tuple[int, int]]:
    """One ``out in`` pair per line."""
    pairs = []
    for ln in _lines(text):
        vals = _ints(ln)
        if len(vals) != 2:
            raise ValueError(f"expected 'out in', got {ln!r}")
        pairs.append((vals[0], vals[1]))
    return check_pair_sequence(pairs)


def _edge_rows(text: str) -> tuple[int, list[list[int]]]:
    lines = _lines(text)
    if not lines:
        raise ValueError("empty graph file")
    head = _ints(lines[0])
    if len(head) != 2:
        raise ValueError("first line must be 'n m'")
    n, m = head
    rows = [_ints(ln) for ln in lines[1:]]
    if len(rows) != m:
        raise ValueError(f"header says {m} edges, found {len(rows)}")
    if any(len(r) != 2 for r in rows):
        raise ValueError("edge lines must be 'i j'")
    return n, rows


def parse_edgelist(text: str) -> SimpleGraph:
    n, rows = _edge_rows(text)
    G = SimpleGraph(n, rows)
    if G.m != len(rows):
        raise ValueError("duplicate edges in edge list")
    return G


def parse_directed_edgelist(text: str) -> DiGraph:
    n, rows = _edge_rows(text)
    G = DiGraph(n, rows)
    if len(G.arcs) != len(rows):
        raise ValueError("duplicate arcs in edge list")
    return G


def parse_matrix(text: str) -> SimpleGraph:
    rows = [_ints(ln) for ln in _lines(text)]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("adjacency matrix must be square")
    edges = []
    for i in range(n):
        if rows[i][i] != 0:
            raise ValueError("adjacency matrix must have a zero diagonal")
        for j in range(n):
            if rows[i][j] not in (0, 1) or rows[i][j] != rows[j][i]:
                raise ValueError("adjacency matrix must be symmetric 0/1")
            if i < j and rows[i][j]:
                edges.append((i, j))
    return SimpleGraph(n, edges)


def parse_graph(text: str) -> SimpleGraph:
    """Edge list if the text parses as one, otherwise adjacency matrix.

    The two never overlap: a valid 2x2 matrix read as an edge list would
    declare zero nodes.
    """
    try:
        return parse_edgelist(text)
    except ValueError as first:
        try:
            return parse_matrix(text)
        except ValueError:
            raise first from None


def format_edgelist(G: SimpleGraph | DiGraph) -> str:
    pairs = G.arcs if isinstance(G, DiGraph) else G.edges
    return "\n".join([f"{G.n} {len(pairs)}", *(f"{i} {j}" for i, j in pairs)]) + "\n"


def format_matrix(G: SimpleGraph) -> str:
    rows = [["0"] * G.n for _ in range(G.n)]
    for i, j in G.edges:
        rows[i][j] = rows[j][i] = "1"
    return "".join(" ".join(r) + "\n" for r in rows)


def parse_instance(text: str) -> MatchingInstance:
    """``n m``, then the b-vector, then ``m`` lines ``i j w``."""
    lines = _lines(text)
    if len(lines) < 2:
        raise ValueError("instance needs a header and a b-vector")
    head = _ints(lines[0])
    if len(head) != 2:
        raise ValueError("first line must be 'n m'")
    n, m = head
    b = _ints(lines[1])
    if len(b) != n:
        raise ValueError(f"b-vector has {len(b)} entries, expected {n}")
    if len(lines) - 2 != m:
        raise ValueError(f"header says {m} edges, found {len(lines) - 2}")
    edges, weights = [], {}
    for ln in lines[2:]:
        parts = _SEP.split(ln.strip())
        if len(parts) != 3:
            raise ValueError(f"edge lines must be 'i j w', got {ln!r}")
        i, j = int(parts[0]), int(parts[1])
        w = float(parts[2])
        key = (min(i, j), max(i, j))
        if key in weights:
            raise ValueError(f"duplicate edge {key}")
        edges.append(key)
        weights[key] = int(w) if w.is_integer() else w
    return MatchingInstance(SimpleGraph(n, edges), weights, b)


def format_matching(M: Matching) -> str:
    w = M.weight
    wtxt = str(int(w)) if float(w).is_integer() else repr(float(w))
    return "".join(f"{i} {j}\n" for i, j in M.edges) + f"weight={wtxt}\n"


def read_text(path: str | Path) -> str:
    return Path(path).read_text()
