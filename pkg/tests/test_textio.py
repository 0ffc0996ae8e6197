import pytest
from hypothesis import given

from randic.bmatching import Matching
from randic.graph_core import SimpleGraph
from randic.textio import (
    format_edgelist,
    format_matching,
    format_matrix,
    parse_degree_sequence,
    parse_directed_edgelist,
    parse_edgelist,
    parse_graph,
    parse_instance,
    parse_matrix,
    parse_pairs,
)

from .strategies import graphs


@pytest.mark.parametrize("text", ["3 2 2 2 2 1\n", "3,2,2,2,2,1", "3, 2 ,2\t2 2 1\n\n"])
def test_degree_sequence_separators(text):
    assert parse_degree_sequence(text) == [3, 2, 2, 2, 2, 1]


def test_degree_sequence_errors():
    with pytest.raises(ValueError):
        parse_degree_sequence("1 2\n3 4\n")
    with pytest.raises(ValueError):
        parse_degree_sequence("1 -2")


@given(graphs())
def test_edgelist_and_matrix_roundtrip(G):
    assert parse_edgelist(format_edgelist(G)) == G
    assert parse_graph(format_edgelist(G)) == G
    if G.n:
        assert parse_matrix(format_matrix(G)) == G
        assert parse_graph(format_matrix(G)) == G


def test_two_by_two_matrix_detected():
    assert parse_graph("0 1\n1 0\n") == SimpleGraph(2, [(0, 1)])
    assert parse_graph("0 0\n0 0\n") == SimpleGraph(2)
    assert parse_graph("2 1\n0 1\n") == SimpleGraph(2, [(0, 1)])


@pytest.mark.parametrize(
    "text",
    ["3 2\n0 1\n", "3 1\n0 1 2\n", "2 1\n0 0\n", "2 2\n0 1\n1 0\n"],
)
def test_bad_edgelists(text):
    with pytest.raises(ValueError):
        parse_edgelist(text)


@pytest.mark.parametrize("text", ["0 1\n0 0\n", "1 0\n0 1\n", "0 2\n2 0\n", "0 1 0\n1 0\n"])
def test_bad_matrices(text):
    with pytest.raises(ValueError):
        parse_matrix(text)


def test_pairs_and_directed_list():
    assert parse_pairs("2 1\n2,1\n1 2\n1 2\n") == [(2, 1), (2, 1), (1, 2), (1, 2)]
    with pytest.raises(ValueError):
        parse_pairs("1 2 3\n")
    D = parse_directed_edgelist("2 2\n0 1\n1 0\n")
    assert D.arcs == ((0, 1), (1, 0))
    assert format_edgelist(D) == "2 2\n0 1\n1 0\n"


def test_instance_parse():
    inst = parse_instance("4 5\n2 1 1 2\n0 1 3\n0 3 2\n2 1 7\n1 3 4\n2 3 1\n")
    assert inst.b == (2, 1, 1, 2)
    assert inst.weights[(1, 2)] == 7
    real = parse_instance("2 1\n1 1\n0 1 0.5\n")
    assert real.weights[(0, 1)] == 0.5
    for bad in ["2 1\n1\n0 1 1\n", "2 2\n1 1\n0 1 1\n", "2 1\n1 1\n0 1\n", "3 2\n1 1 2\n0 2 1\n2 0 1\n"]:
        with pytest.raises(ValueError):
            parse_instance(bad)


def test_matching_output():
    assert format_matching(Matching(((0, 1), (2, 3)), 6)) == "0 1\n2 3\nweight=6\n"
    assert format_matching(Matching(((0, 1),), 0.5)) == "0 1\nweight=0.5\n"
