import json

from graphmorse.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_gen_roundtrip(tmp_path, capsys):
    path = tmp_path / "octa.json"
    code, rep, _ = run(capsys, "gen", "cross_polytope", "2", "--out", str(path))
    assert code == 0 and rep["vertices"] == 6 and rep["edges"] == 12
    code, rep, err = run(capsys, "betti", str(path))
    assert code == 0 and rep["betti"] == [1, 0, 1] and rep["command"] == "betti"
    assert "betti" in err
    code, rep, _ = run(capsys, "euler", "@cycle:5")
    assert rep["chi"] == 0
    code, rep, _ = run(capsys, "fvector", "@kite")
    assert rep["f_vector"] == [4, 5, 2]


def test_refine_and_product(tmp_path, capsys):
    code, rep, _ = run(capsys, "refine", "@complete:3")
    assert code == 0 and len(rep["graph"]["vertices"]) == 7
    code, rep, _ = run(capsys, "product", "--join", "@cycle:4", "@cycle:4")
    assert len(rep["graph"]["edges"]) == 24
    code, rep, _ = run(capsys, "product", "--union", "@complete:1", "@complete:2")
    assert len(rep["graph"]["vertices"]) == 3
    assert run(capsys, "product", "@cycle:4", "@cycle:4")[0] == 2


def test_analysis_commands(tmp_path, capsys):
    f = tmp_path / "f.json"
    f.write_text(json.dumps({"values": {"0": 0, "1": "1/2", "2": 3, "3": 4, "4": 5, "5": 6}}))
    code, rep, _ = run(capsys, "ph", "@octahedron", "--function", str(f))
    assert code == 0 and rep["pass"] is True
    code, rep, _ = run(capsys, "morse", "@octahedron", "--function", str(f))
    assert code == 0 and rep["morse"] is True
    code, rep, _ = run(capsys, "cri", "@torus_9")
    assert rep["cri"] == 3 and rep["method"] == "exact"
    code, rep, _ = run(capsys, "cri", "@cycle:20", "--restarts", "5")
    assert rep["method"] == "heuristic-upper-bound" and rep["cri"] >= 2
    code, rep, _ = run(capsys, "cat", "@cycle:5")
    assert (rep["cat"]["lower"], rep["cat"]["upper"]) == (2, 2)
    code, rep, _ = run(capsys, "cup", "@torus_9")
    assert rep["cup"] == 2
    code, rep, _ = run(capsys, "curvature", "@octahedron")
    assert rep["pass"] is True
    code, rep, _ = run(capsys, "curvature", "@kite", "--measure", "exact")
    assert code == 0
    code, rep, _ = run(capsys, "mertens", "10")
    assert rep["chi"] == 2 and rep["mertens"] == -1


def test_fusion_command(tmp_path, capsys):
    closed = tmp_path / "k.json"
    closed.write_text(json.dumps({"members": [[0], [1]]}))
    code, rep, _ = run(capsys, "fusion", "@complete:2", "--closed", str(closed))
    assert code == 0 and rep["b_open"] == [0, 1] and rep["b_closed"] == [2, 0]
    closed.write_text(json.dumps({"members": [[0, 1]]}))
    assert run(capsys, "fusion", "@complete:2", "--closed", str(closed))[0] == 2


def test_not_morse_report(tmp_path, capsys):
    f = tmp_path / "f.json"
    f.write_text(json.dumps({str(v): v for v in range(8)}))
    code, rep, _ = run(capsys, "morse", "@cube", "--function", str(f))
    assert code == 0 and rep["morse"] is False and rep["vertex"] == 7


def test_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": [1, 2],\n "edges": [[1, 2]')
    code, rep, err = run(capsys, "betti", str(bad))
    assert code == 2 and "line 2" in err
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "betti", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "betti", "@nope")[0] == 2
    loop = tmp_path / "loop.json"
    loop.write_text(json.dumps({"vertices": [1], "edges": [[1, 1]]}))
    assert run(capsys, "betti", str(loop))[0] == 2
    assert run(capsys, "check", "nosuch")[0] == 2


def test_budget_exhaustion(capsys):
    code, rep, _ = run(capsys, "cri", "@torus_9", "--budget", "10")
    assert code == 3 and rep["error"] == "budget-exhausted"


def test_stdin(monkeypatch, capsys):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO('{"vertices": [0, 1, 2], "edges": [[0, 1]]}'))
    code, rep, _ = run(capsys, "betti", "-")
    assert rep["betti"] == [2, 0]


def test_deterministic(capsys):
    first = main(["curvature", "@octahedron", "--measure", "mc", "--samples", "200",
                  "--seed", "7"]), capsys.readouterr().out
    second = main(["curvature", "@octahedron", "--measure", "mc", "--samples", "200",
                   "--seed", "7"]), capsys.readouterr().out
    assert first == second


def test_check_suites(tmp_path, capsys):
    code, rep, err = run(capsys, "check", "mertens")
    assert code == 0 and rep["failed"] == 0 and "[PASS]" in err
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    (corpus / "c5.json").write_text(json.dumps({"vertices": list(range(5)),
                                                "edges": [[i, (i + 1) % 5] for i in range(5)]}))
    code, rep, _ = run(capsys, "check", "poincare-hopf", "--corpus", str(corpus))
    assert code == 0 and rep["pass"] is True
