import json

import pytest

from localcolor.cli import main
from localcolor.io import load_dimacs, load_edgelist, load_hypergraph, ParseError


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_gen_and_load_roundtrip(tmp_path, capsys):
    path = tmp_path / "g.el"
    code, _ = run_cli(capsys, "gen", "--kind", "random", "--n", "30",
                      "--delta", "6", "--seed", "4", "--out", str(path))
    assert code == 0
    g = load_edgelist(path)
    assert g.max_degree == 6


def test_edgelist_errors(tmp_path):
    p = tmp_path / "bad.el"
    p.write_text("1 2\n5 5\n")
    with pytest.raises(ParseError, match="self-loop"):
        load_edgelist(p)
    p.write_text("1 2\n2 1\n")
    with pytest.raises(ParseError, match="duplicate"):
        load_edgelist(p)
    p.write_text("1 2 3\n")
    with pytest.raises(ParseError, match=":1:"):
        load_edgelist(p)


def test_dimacs_k4(tmp_path):
    p = tmp_path / "k4.col"
    lines = ["c complete graph", "p edge 4 6"]
    lines += [f"e {u} {v}" for u in range(1, 5) for v in range(u + 1, 5)]
    p.write_text("\n".join(lines) + "\n")
    g = load_dimacs(p)
    assert g.n == 4 and g.m == 6 and g.max_degree == 3


def test_dimacs_header_mismatch(tmp_path):
    p = tmp_path / "bad.col"
    p.write_text("p edge 3 2\ne 1 2\n")
    with pytest.raises(ParseError, match="header"):
        load_dimacs(p)


def test_hypergraph_format(tmp_path):
    p = tmp_path / "h.hg"
    p.write_text("0 1 2\n2 3 4\n")
    h = load_hypergraph(p)
    assert len(h.hyperedges) == 2 and h.rank == 3


def test_subcommands_run_clean(tmp_path, capsys):
    path = tmp_path / "g.el"
    run_cli(capsys, "gen", "--kind", "random", "--n", "40", "--delta", "9",
            "--seed", "1", "--out", str(path))
    for argv in (
        ["cd-color", "--input", str(path), "--x", "1", "--audit"],
        ["refined", "--input", str(path), "--cover", "line", "--x", "2"],
        ["star-edge", "--input", str(path), "--x", "1"],
        ["star-edge", "--input", str(path), "--x", "2"],
        ["arb-edge", "--input", str(path)],
        ["delta-little-o", "--input", str(path)],
        ["powered", "--input", str(path), "--x", "2"],
        ["verify", "--input", str(path)],
    ):
        code, out = run_cli(capsys, *argv)
        assert code == 0, (argv, out)
        report = json.loads(out)
        assert report["ok"]


def test_report_schema(tmp_path, capsys):
    path = tmp_path / "g.el"
    run_cli(capsys, "gen", "--kind", "forest", "--n", "50", "--delta", "5",
            "--out", str(path))
    code, out = run_cli(capsys, "arb-edge", "--input", str(path), "--a", "1")
    report = json.loads(out)
    for key in ("algorithm", "graph", "colors_used", "declared_bound",
                "theory_bound", "rounds", "verdicts", "wall_time_s"):
        assert key in report
    assert report["colors_used"] <= report["declared_bound"] <= report["theory_bound"]


def test_json_file_written(tmp_path, capsys):
    path = tmp_path / "g.el"
    out_json = tmp_path / "report.json"
    run_cli(capsys, "gen", "--kind", "path", "--n", "20", "--out", str(path))
    code, out = run_cli(capsys, "star-edge", "--input", str(path),
                        "--json", str(out_json))
    assert code == 0
    assert json.loads(out_json.read_text())["algorithm"] == "star-edge"


def test_verify_coloring_file(tmp_path, capsys):
    path = tmp_path / "g.el"
    path.write_text("0 1\n1 2\n")
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"kind": "vertex", "palette": 2,
                                "assignment": {"0": 0, "1": 1, "2": 0}}))
    code, out = run_cli(capsys, "verify", "--input", str(path),
                        "--coloring", str(good))
    assert code == 0 and json.loads(out)["ok"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"kind": "vertex", "palette": 2,
                               "assignment": {"0": 1, "1": 1, "2": 0}}))
    code, out = run_cli(capsys, "verify", "--input", str(path),
                        "--coloring", str(bad))
    assert code == 1 and not json.loads(out)["ok"]


def test_usage_errors(capsys):
    code, _ = run_cli(capsys, "cd-color", "--input", "/no/such/file")
    assert code == 2
    code, _ = run_cli(capsys, "bogus-subcommand")
    assert code == 2
    code, _ = run_cli(capsys, "gen", "--kind", "grid")  # missing rows/cols
    assert code == 2
