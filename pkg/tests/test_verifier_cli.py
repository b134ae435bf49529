import json

import pytest

from balkans import verifier_cli
from balkans.relation_finder import NoRelation
from balkans.report import Report
from balkans.verifier_cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--format", "json", *argv)
    return code, json.loads(out)


def test_compute_text(capsys):
    code, out, _ = run(capsys, "compute", "5", "1", "3")
    assert code == 0
    assert "value=3" in out


def test_compute_flags_and_json(capsys):
    code, data = run_json(capsys, "compute", "--j", "1", "--kappa", "1", "--c", "3")
    assert code == 0
    assert set(data) >= {"command", "parameters", "checks", "depthsUsed", "wallTime"}
    assert data["parameters"]["triple"] == [288, -31, 90]
    check = data["checks"][0]
    assert set(check) == {"name", "expected", "actual", "digits", "mode", "pass"}
    assert check["pass"] and check["digits"] == 50


def test_compute_decimal(capsys):
    code, data = run_json(capsys, "compute", "3", "2", "3", "decimal", "--digits", "30")
    assert code == 0
    assert data["parameters"]["decimal"][0] in "-0123456789"
    assert data["checks"][0]["mode"] == "digits:30"


def test_format_after_subcommand(capsys):
    code, out, _ = run(capsys, "compute", "5", "1", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["command"] == "compute"


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "4", "1", "3"],
        ["compute", "3", "1"],
        ["compute", "3", "x", "1"],
        ["compute", "3", "1", "0"],
        ["verify", "nowhere"],
        ["table", "7"],
        ["frobnicate"],
        [],
        ["derive", "alphabeta", "3"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_area(capsys):
    code, data = run_json(capsys, "verify", "bosnia")
    assert code == 0
    assert data["checks"] and all(c["pass"] for c in data["checks"])


def test_verify_with_box(capsys):
    code, data = run_json(capsys, "verify", "northern", "--box", "5", "2", "2")
    assert code == 0
    assert data["depthsUsed"]


def test_table_and_series(capsys):
    assert run(capsys, "table", "13")[0] == 0
    assert run(capsys, "series", "table5")[0] == 0


def test_decimate_small_box(capsys):
    code, data = run_json(capsys, "decimate", "--box", "3")
    assert code == 0
    assert data["parameters"]["survivors"] == 332


def test_decimate_db_file(capsys, tmp_path):
    path = tmp_path / "db.txt"
    path.write_text("11 6 40 86562004597992000\n")
    code, data = run_json(capsys, "decimate", str(path), "--box", "1")
    assert code == 0
    assert data["parameters"]["entries"] == 1


def test_decimate_bad_db_exits_two(capsys, tmp_path):
    path = tmp_path / "db.txt"
    path.write_text("11 6 forty 1\n")
    assert run(capsys, "decimate", "--db", str(path))[0] == 2
    assert run(capsys, "decimate", "--db", str(tmp_path / "missing.txt"))[0] == 2


def test_derive(capsys):
    code, data = run_json(capsys, "derive", "alphabeta", "3", "2", "--digits", "300")
    assert code == 0
    assert [c["actual"] for c in data["checks"]] == ["-9", "24"]


def test_failed_check_exits_one(capsys, monkeypatch):
    def failing(*args, **kwargs):
        report = Report("verify")
        report.exact("forced", 1, 2)
        return report.finish()

    monkeypatch.setattr(verifier_cli, "run_verify", failing)
    code, out, _ = run(capsys, "verify", "bosnia")
    assert code == 1
    assert "FAIL" in out


def test_no_relation_exits_one(capsys, monkeypatch):
    def missing(*args, **kwargs):
        raise NoRelation("none")

    monkeypatch.setattr(verifier_cli, "run_derive", missing)
    assert run(capsys, "derive", "seeds", "7")[0] == 1
