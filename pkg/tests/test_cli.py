import shutil
import subprocess

import pytest

from randic.cli import bmatch_main, main
from randic.graph_core import degree_sequence, is_connected, randic_index
from randic.textio import parse_directed_edgelist, parse_edgelist, parse_matrix


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def run(capsys, argv, entry=main):
    code = entry(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_min_edgelist(capsys, write):
    code, out, _ = run(capsys, ["min", write("d.txt", "3,2,2,2,2,1\n")])
    assert code == 0
    first, rest = out.split("\n", 1)
    G = parse_edgelist(rest)
    assert first == "27"
    assert degree_sequence(G) == [3, 2, 2, 2, 2, 1] and randic_index(G) == 27


def test_max_matrix(capsys, write):
    code, out, _ = run(capsys, ["max", write("d.txt", "3 2 2 2 2 1"), "--out", "matrix"])
    first, rest = out.split("\n", 1)
    assert first == "28"
    assert randic_index(parse_matrix(rest)) == 28


def test_hh_random_flag_keeps_value(capsys, write):
    path = write("d.txt", " ".join(["3"] * 8 + ["2"] * 8))
    _, a, _ = run(capsys, ["min", path])
    _, b, _ = run(capsys, ["min", path, "--hh-random", "--seed", "4"])
    assert a.split("\n")[0] == b.split("\n")[0]


def test_alpha_flag(capsys, write):
    code, out, _ = run(capsys, ["min", write("d.txt", "1 1"), "--alpha", "0.5"])
    assert code == 0 and out.split("\n")[0] == "1"


def test_not_graphic_exit_code(capsys, write):
    code, _, err = run(capsys, ["min", write("d.txt", "3 1")])
    assert code == 1 and "not graphic" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, ["min", str(tmp_path / "nope.txt")])
    assert code == 2 and err


def test_directed(capsys, write):
    path = write("p.txt", "2 1\n2 1\n1 2\n1 2\n")
    code, out, _ = run(capsys, ["directed", path, "--pq", "+-"])
    first, rest = out.split("\n", 1)
    D = parse_directed_edgelist(rest)
    assert D.degree_pairs() == [(2, 1), (2, 1), (1, 2), (1, 2)]
    from randic.graph_core import directed_randic

    assert int(first) == directed_randic(D, "+", "-")


def test_normalize(capsys, write):
    code, out, _ = run(capsys, ["normalize", write("g.txt", "4 3\n0 1\n0 2\n0 3\n")])
    lines = out.splitlines()
    assert code == 0 and lines[0] == "1.000000"
    assert lines[1] == "R=9 U_b=9 normalized=100%"


def test_connect(capsys, write):
    path = write("g.txt", "6 6\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n")
    code, out, _ = run(capsys, ["connect", path, "--seed", "3"])
    *body, report = out.strip().split("\n")
    G = parse_edgelist("\n".join(body))
    assert is_connected(G)
    assert report == "switches=1 R_before=24 R_after=24 pct=0.00"


def test_connect_impossible(capsys, write):
    code, _, err = run(capsys, ["connect", write("g.txt", "4 2\n0 1\n2 3\n"), "--seed", "0"])
    assert code == 1


def test_gen_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert main(["gen", "sf", "--n", "30", "--mindeg", "3", "--seed", "9", "--out", str(a)]) == 0
    assert main(["gen", "sf", "--n", "30", "--mindeg", "3", "--seed", "9", "--out", str(b)]) == 0
    assert a.read_text() == b.read_text()
    assert min(degree_sequence(parse_edgelist(a.read_text()))) >= 3


def test_gen_rejects_wrong_param(capsys):
    code, _, err = run(capsys, ["gen", "er", "--n", "10", "--r", "0.2", "--seed", "0"])
    assert code == 2 and "--p" in err


def test_experiment(capsys, tmp_path):
    code, out, _ = run(capsys, ["experiment", "--type", "er", "--n", "15", "--trials", "4", "--seed", "2", "--out", str(tmp_path)])
    assert code == 0 and out.startswith("connected=")
    assert (tmp_path / "records.csv").read_text().splitlines()[0].startswith("graph_type,n,seed,R_original")


def test_oracle_gate(capsys, write):
    path = write("d.txt", "3 2 2 2 2 1")
    code, _, err = run(capsys, ["oracle", path])
    assert code == 2 and "--i-know-this-is-slow" in err
    code, out, _ = run(capsys, ["oracle", path, "--i-know-this-is-slow"])
    assert out.splitlines()[0] == "27"
    assert out.splitlines()[-1] == "realizations=36"


def test_oracle_directed(capsys, write):
    code, out, _ = run(capsys, ["oracle", write("p.txt", "1 1\n1 1\n"), "--pq", "++", "--i-know-this-is-slow"])
    assert out.splitlines()[0] == "2"


def test_bmatch(capsys, write):
    path = write("i.txt", "4 5\n2 1 1 2\n0 1 3\n0 3 2\n1 2 7\n1 3 4\n2 3 1\n")
    code, out, _ = run(capsys, ["--min", path], bmatch_main)
    assert out == "0 1\n0 3\n2 3\nweight=6\n"
    code, out, _ = run(capsys, ["--max", path], bmatch_main)
    assert out.endswith("weight=6\n")


def test_bmatch_infeasible(capsys, write):
    code, _, err = run(capsys, ["--min", write("i.txt", "3 3\n1 1 1\n0 1 1\n1 2 1\n0 2 1\n")], bmatch_main)
    assert code == 1 and "infeasible" in err


def test_bmatch_requires_mode(write):
    with pytest.raises(SystemExit):
        bmatch_main([write("i.txt", "2 1\n1 1\n0 1 1\n")])


@pytest.mark.skipif(shutil.which("randic") is None, reason="console script not installed")
def test_console_script(write):
    res = subprocess.run(["randic", "min", write("d.txt", "1 1 1 1")], capture_output=True, text=True, check=True)
    assert res.stdout.splitlines()[0] == "2"
