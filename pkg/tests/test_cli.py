import contextlib
import io
import json

import pytest

from enumfpt.cli import REGISTRY, RunConfig, format_json, main, parse_json, run
from enumfpt.graphs import add_edge, delete_edge

P3 = "p edge 3 2\ne 1 2\ne 2 3\n"
C4 = "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n"
K3 = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"


@pytest.fixture
def write(tmp_path):
    def _write(text, name="in.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue().splitlines(), err.getvalue()


def test_p3_cluster_editing(write):
    code, lines, _ = _run(["cluster-editing", "--input", write(P3), "-k", "1"])
    assert code == 0
    assert lines == ["1 deleteEdge(1,2)", "1 deleteEdge(2,3)", "1 addEdge(1,3)"]


def test_c4_chordal_sizes(write):
    code, lines, _ = _run(["chordal-completion", "--input", write(C4), "-k", "2"])
    assert code == 0
    assert [int(line.split()[0]) for line in lines] == [1, 1, 2]


def test_min_mode_on_cluster_graph(write):
    code, lines, _ = _run(["cluster-editing", "--input", write(K3), "-k", "2", "--mode", "min"])
    assert (code, lines) == (0, ["0 {}"])


def test_limit(write):
    code, lines, _ = _run(["cluster-editing", "--input", write(K3), "-k", "2", "--limit", "2"])
    assert code == 0 and len(lines) == 2


def test_closest_string_uses_file_d(write):
    code, lines, _ = _run(["closest-string", "--input", write("2 2 1\n00\n11\n")])
    assert lines == ["1 flip(1)", "1 flip(2)"]


def test_backdoor_class_flag(write):
    cnf = write("p cnf 2 1\n1 2 0\n")
    _, horn, _ = _run(["strong-backdoor", "--input", cnf, "-k", "1"])
    _, two, _ = _run(["strong-backdoor", "--input", cnf, "-k", "1", "--class", "2cnf"])
    assert horn == ["1 var(1)", "1 var(2)"]
    assert two[0] == "0 {}"


def test_json_lines_round_trip(write):
    code, lines, _ = _run(["cluster-editing", "--input", write(P3), "-k", "1",
                           "--format", "json-lines"])
    entry = REGISTRY["cluster-editing"]
    sols = [parse_json(line, entry) for line in lines]
    assert sols == [frozenset({delete_edge(1, 2)}), frozenset({delete_edge(2, 3)}),
                    frozenset({add_edge(1, 3)})]
    assert json.loads(lines[2]) == {"size": 1, "ops": [{"op": "addEdge", "args": [1, 3]}]}
    assert format_json(sols[0], entry) == lines[0]


@pytest.mark.parametrize("problem, text, k", [
    ("cluster-editing", C4, "2"),
    ("chordal-completion", C4, "2"),
    ("triangle-deletion", K3, "1"),
    ("closest-string", "3 3 1\n000\n011\n110\n", None),
    ("weak-backdoor", "p cnf 3 2\n1 2 3 0\n-1 2 0\n", "2"),
    ("strong-backdoor", "p cnf 3 2\n1 2 3 0\n-1 2 0\n", "2"),
    ("minones", "p cnf 3 2\n1 2 0\n1 3 0\n", "2"),
])
def test_oracle_check_passes(write, problem, text, k):
    argv = [problem, "--input", write(text), "--oracle-check"] + (["-k", k] if k else [])
    for mode in ("all", "min"):
        code, _, err = _run(argv + ["--mode", mode])
        assert code == 0, err


def test_oracle_check_reports_divergence(write, monkeypatch):
    from enumfpt import cli

    real = cli.brute_force

    def skewed(contract, x):
        res = real(contract, x)
        return type(res)(res.all[::-1], res.minimal[::-1])

    monkeypatch.setattr(cli, "brute_force", skewed)
    code, lines, err = _run(["cluster-editing", "--input", write(P3), "-k", "1", "--oracle-check"])
    assert code == 1 and "divergence at solution 1" in err
    assert lines == []


def test_oracle_check_too_large(write):
    big = "p edge 10 0\n"
    code, _, err = _run(["cluster-editing", "--input", write(big), "-k", "1", "--oracle-check"])
    assert code == 2 and "instance-too-large" in err


def test_stats_on_stderr(write):
    code, lines, err = _run(["cluster-editing", "--input", write(P3), "-k", "1", "--stats"])
    assert code == 0 and len(lines) == 3
    assert "c solutions 3" in err
    assert len(err.split("c delays ")[1].split()) == 4


@pytest.mark.parametrize("argv", [
    ["cluster-editing", "--input", "/nonexistent", "-k", "1"],
    ["cluster-editing", "--input", "X", "-k", "-1"],
    ["cluster-editing", "--input", "X"],
    ["nope", "--input", "X", "-k", "1"],
    ["cluster-editing", "--input", "X", "-k", "1", "--limit", "0"],
])
def test_usage_errors(argv):
    assert _run(argv)[0] == 2


def test_parse_error_exit_code(write):
    code, _, err = _run(["cluster-editing", "--input", write("p edge 2 1\ne 1 5\n"), "-k", "1"])
    assert code == 2 and "parse-error: line 2" in err


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig("minones", "f", None)
    cfg = RunConfig("closest-string", "f")
    assert cfg.mode == "all"


def test_run_writes_to_given_streams(write):
    out, err = io.StringIO(), io.StringIO()
    assert run(RunConfig("cluster-editing", write(P3), 1, mode="min"), out, err) == 0
    assert len(out.getvalue().splitlines()) == 3
