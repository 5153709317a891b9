import csv
import io
import json

import pytest

from mec2 import formats
from mec2.cli import main
from mec2.generators import complete, cycle, petersen


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_petersen_cyclespace(files, capsys, tmp_path):
    g = files("petersen.gr", formats.emit_graph(petersen()))
    col = str(tmp_path / "p.col")
    code, out, _ = run(capsys, "solve", g, "--engine", "cyclespace", "--out", col)
    assert code == 0 and out.startswith("value 9\nengine cyclespace\n")
    code, out, _ = run(capsys, "check", g, col)
    assert code == 0 and out.strip() == "valid value 9"


@pytest.mark.parametrize("engine", ["auto", "brute", "cyclespace", "branchdp", "dense", "logedge"])
def test_every_engine_witness_checks(files, capsys, engine):
    g = files("k4.gr", formats.emit_graph(complete(4)))
    code, out, _ = run(capsys, "solve", g, "--engine", engine)
    assert code == 0
    col = files("k4.col", out.split("millis", 1)[1].split("\n", 1)[1])
    assert run(capsys, "check", g, col)[0] == 0


def test_json_schema(files, capsys, tmp_path):
    g = files("c5.gr", formats.emit_graph(cycle(5)))
    code, out, _ = run(capsys, "solve", g, "--json")
    rec = json.loads(out)
    assert set(rec) == {"value", "engine", "millis"} and rec["value"] == 4
    code, out, _ = run(capsys, "solve", g, "--json", "--out", str(tmp_path / "c.col"))
    assert set(json.loads(out)) == {"value", "engine", "millis", "coloring_path"}


def test_check_invalid(files, capsys):
    g = files("c4.gr", formats.emit_graph(cycle(4)))
    bad = files("bad.col", "c 0 1\nc 1 1\nc 2 2\nc 3 2\nv 4\n")
    code, out, _ = run(capsys, "check", g, bad)
    assert code == 1 and out.startswith("invalid: vertex 0")


def test_delete_edges(files, capsys, tmp_path):
    g = files("k4.gr", formats.emit_graph(complete(4)))
    code, out, _ = run(capsys, "delete-edges", g, "--k", "2")
    assert code == 0 and out.startswith("yes 2\nX: ")
    assert run(capsys, "delete-edges", g, "--k", "1")[:2] == (1, "no\n")
    cert = str(tmp_path / "k4.cert")
    run(capsys, "delete-edges", g, "--k", "2", "--out", cert)
    assert run(capsys, "check", g, cert)[0] == 0


def test_delete_vertices_minimize(files, capsys):
    g = files("p.gr", formats.emit_graph(petersen()))
    code, out, _ = run(capsys, "delete-vertices", g, "--minimize")
    assert code == 0 and out.startswith("yes 3\n")


def test_decide(files, capsys):
    g = files("p.gr", formats.emit_graph(petersen()))
    assert run(capsys, "decide", g, "--t", "9")[:2] == (0, "yes\n")
    assert run(capsys, "decide", g, "--t", "10")[:2] == (1, "no\n")


def test_input_error_exit_two(files, capsys):
    g = files("bad.gr", "p 3 1\ne 0 0\n")
    code, out, err = run(capsys, "solve", g)
    assert code == 2 and out == ""
    rec = json.loads(err.strip().splitlines()[-1])
    assert rec["error"] == "FormatError" and rec["line"] == 2


def test_missing_file_exit_two(capsys, tmp_path):
    assert run(capsys, "solve", str(tmp_path / "nope.gr"))[0] == 2


def test_brute_guard_exit_two(files, capsys):
    g = files("k8.gr", formats.emit_graph(complete(8)))
    code, _, err = run(capsys, "solve", g, "--engine", "brute")
    assert code == 2 and "OracleRefused" in err


def test_t2atc_report(files, capsys):
    t = files("t.txt", "tasks 3 3 2\ntask 0 1\ntask 1 2\ntask 0 2\n")
    code, out, _ = run(capsys, "solve", t, "--json")
    rec = json.loads(out)
    assert (rec["tasks_executed"], rec["social_welfare"]) == (2, 4)
    bad = files("t3.txt", "tasks 3 1 3\ntask 0 1\n")
    code, _, err = run(capsys, "solve", bad)
    assert code == 2 and "UnsupportedInstance" in err


def test_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(formats.emit_graph(cycle(3))))
    code, out, _ = run(capsys, "solve", "-")
    assert code == 0 and out.startswith("value 2\n")


def test_threads_env(files, capsys, monkeypatch):
    g = files("p.gr", formats.emit_graph(petersen()))
    monkeypatch.setenv("MEC2_THREADS", "3")
    assert json.loads(run(capsys, "solve", g, "--json", "--engine", "cyclespace")[1])["value"] == 9
    monkeypatch.setenv("MEC2_THREADS", "x")
    assert run(capsys, "solve", g)[0] == 2


def test_bd_and_td_files(files, capsys):
    from mec2.decomposition import heuristic_branch_decomposition, min_degree_tree_decomposition

    g = petersen()
    gp = files("p.gr", formats.emit_graph(g))
    bd = files("p.bd", formats.emit_bd(heuristic_branch_decomposition(g)))
    td = files("p.td", formats.emit_td(min_degree_tree_decomposition(g)))
    for flag, path in (("--bd", bd), ("--td", td)):
        code, out, _ = run(capsys, "solve", gp, "--engine", "branchdp", flag, path, "--json")
        assert code == 0 and json.loads(out)["value"] == 9
    wrong = files("c.bd", formats.emit_bd(heuristic_branch_decomposition(cycle(4))))
    assert run(capsys, "solve", gp, "--engine", "branchdp", "--bd", wrong)[0] == 2


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "petersen")
    assert code == 0 and formats.parse_graph(out) == petersen()
    out1 = run(capsys, "gen", "cubic", "--n", "10", "--seed", "4")[1]
    out2 = run(capsys, "gen", "cubic", "--n", "10", "--seed", "4")[1]
    assert out1 == out2 and formats.parse_graph(out1).is_cubic()
    assert run(capsys, "gen", "cycle(5)")[1].startswith("p 5 5")
    assert run(capsys, "gen", "nosuch")[0] == 2


def test_bench_csv(tmp_path, capsys):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    (corpus / "a.gr").write_text(formats.emit_graph(cycle(5)))
    (corpus / "b.gr").write_text(formats.emit_graph(petersen()))
    code, out, _ = run(capsys, "bench", str(corpus), "--engines", "cyclespace,branchdp")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 4
    assert list(rows[0])[:6] == ["instance", "n", "m", "engine", "value", "millis"]
    assert {r["value"] for r in rows if r["instance"] == "b.gr"} == {"9"}


def test_bad_usage_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["solve"])
    assert info.value.code == 2
