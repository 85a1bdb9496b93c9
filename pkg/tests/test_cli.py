import json

import pytest

from condrev.cli import main


def test_run_from_file(tmp_path, capsys):
    script = tmp_path / "s.txt"
    script.write_text("vars x y\ninit positive(x)\nnat x>y\nshow\n")
    assert main(["run", str(script)]) == 0
    assert capsys.readouterr().out == "x y\nx -y\n-x -y -x y\n"


def test_run_from_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("vars x y; init flat; show"))
    assert main(["run"]) == 0
    assert capsys.readouterr().out == "-x -y x -y -x y x y\n"


def test_run_json(tmp_path, capsys):
    script = tmp_path / "s.txt"
    script.write_text("vars x y; init flat; entails true>x")
    assert main(["run", "--json", str(script)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["outputs"][0]["holds"] is False


def test_run_script_error_exit_code(tmp_path, capsys):
    script = tmp_path / "s.txt"
    script.write_text("vars x y\nnat x>y\n")
    assert main(["run", str(script)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_run_writes_figures(tmp_path, capsys):
    script = tmp_path / "s.txt"
    script.write_text("vars x y; init positive(x); show; unc true>y; show")
    figdir = tmp_path / "figs"
    assert main(["run", str(script), "--figures", str(figdir)]) == 0
    assert sorted(p.name for p in figdir.iterdir()) == [
        "order_0.png",
        "order_1.png",
    ]


def test_verify_paper_examples_exit_and_report(tmp_path, capsys):
    rep = tmp_path / "rep"
    # one named golden in the suite is expected red; exit reflects it honestly
    code = main(["verify", "--scope", "paper-examples", "--report", str(rep)])
    out = capsys.readouterr().out
    assert code == 1
    assert out.count("\n") >= 10
    tsv = (rep / "report.tsv").read_text().splitlines()
    assert tsv[0] == "status\tname\tdetail"
    assert len(tsv) == out.count("\n") + 1
    assert (rep / "summary.png").stat().st_size > 0


def test_verify_json_deterministic(capsys):
    args = ["verify", "--scope", "n3-sampled", "--samples", "5",
            "--seed", "7", "--json"]
    main(args)
    first = capsys.readouterr().out
    main(args)
    second = capsys.readouterr().out
    assert first == second
    data = json.loads(first)
    assert data["scope"] == "n3-sampled" and data["seed"] == 7


def test_verify_requires_scope(capsys):
    with pytest.raises(SystemExit):
        main(["verify"])
