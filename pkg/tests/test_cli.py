import csv
import io
import json

import pytest

from s7check import cli
from s7check.campaigns import RunConfig, run
from s7check.report import Check, Report, ReportWriteError, emit_report, parse_report, to_csv, to_json


def sample_report():
    r = Report("demo", 3, {"trials": 10})
    r.add("one", "plumbing", True, 1.5, 1.5, 1e-12)
    r.add("two", "composition law", False, [0.0, 2.0], [0.0, 0.0])
    r.add("three", "E = -a.b", True, "x", "x")
    return r


def test_empty_report_is_valid(tmp_path):
    path = tmp_path / "r.json"
    emit_report(Report("demo", 1), "json", path)
    d = json.loads(path.read_text())
    assert d["checks"] == []
    assert d["summary"]["total"] == 0 and d["summary"]["all_pass"]


def test_json_key_order():
    d = json.loads(to_json(sample_report()))
    assert list(d) == ["command", "seed", "parameters", "checks", "summary"]
    assert list(d["checks"][0]) == ["name", "anchor", "pass", "observed", "expected", "tolerance"]


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_round_trip(fmt):
    r = sample_report()
    text = to_json(r) if fmt == "json" else to_csv(r)
    back = parse_report(text, fmt)
    assert [c.to_dict() for c in back.checks] == [c.to_dict() for c in r.checks]
    if fmt == "json":
        assert (back.command, back.seed, back.parameters) == (r.command, r.seed, r.parameters)


def test_csv_rows():
    rows = list(csv.reader(io.StringIO(to_csv(sample_report()))))
    assert rows[0] == ["name", "anchor", "pass", "observed", "expected", "tolerance"]
    assert len(rows) == 3 + 1


def test_unwritable_path(tmp_path):
    with pytest.raises(ReportWriteError, match="nope"):
        emit_report(sample_report(), "json", tmp_path / "nope" / "r.json")


def test_every_check_has_anchor():
    report = run(RunConfig("all", trials=2000, pairs=3))
    assert report.checks
    assert all(c.anchor for c in report.checks)
    assert report.all_pass


def test_counterexample_json(capsys):
    assert cli.main(["counterexample", "--format", "json", "-q"]) == 0
    d = json.loads(capsys.readouterr().out)
    by_name = {c["name"]: c for c in d["checks"]}
    geo = by_name["geometric norms: ||XY|| and ||X|| ||Y||"]
    assert geo["observed"] == [[0.0, 0.0], [0.0, 0.0]] and geo["pass"]
    sc = by_name["scalar norms: ||XY|| and ||X|| ||Y||"]
    assert sc["observed"][0] == 0.0
    assert sc["observed"][1] == pytest.approx(2.0)
    assert sc["pass"]


@pytest.mark.parametrize("argv", [
    ["verify-norms", "--trials", "0"],
    ["simulate-singlet", "--pairs", "0"],
    ["chsh", "--tolerance", "-1"],
    ["bogus"],
    ["chsh", "--format", "xml"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code != 0


def test_unwritable_output_exit_code(tmp_path, capsys):
    code = cli.main(["counterexample", "-o", str(tmp_path / "missing" / "r.json")])
    assert code == 2
    assert "missing" in capsys.readouterr().err


def test_exit_status_reflects_failures(monkeypatch, capsys):
    from s7check import campaigns

    def broken(report, cfg):
        report.add("always fails", "plumbing", False, 1, 0)

    monkeypatch.setitem(campaigns.CAMPAIGNS, "counterexample", broken)
    assert cli.main(["counterexample", "-q"]) == 1


def test_byte_identical_reports(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert cli.main(["simulate-singlet", "--seed", "7", "--trials", "5000", "--pairs", "4", "-o", str(p), "-q"]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_seed_env_override(monkeypatch, capsys):
    monkeypatch.setenv(cli.SEED_ENV, "99")
    cli.main(["counterexample", "-q"])
    assert json.loads(capsys.readouterr().out)["seed"] == 99
    cli.main(["counterexample", "-q", "--seed", "5"])
    assert json.loads(capsys.readouterr().out)["seed"] == 5


def test_simulate_csv_trial_dump(tmp_path, capsys):
    dump = tmp_path / "trials.csv"
    assert cli.main(["simulate-singlet", "--trials", "100", "--pairs", "2", "--trials-csv", str(dump), "--format", "csv", "-q"]) == 0
    rows = list(csv.reader(dump.open()))
    assert len(rows) == 101
    report_rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert len(report_rows) == 1 + 2 * 4


def test_verify_campaigns_pass(capsys):
    for cmd in ("verify-algebra", "verify-norms", "chsh"):
        assert cli.main([cmd, "--trials", "5000", "-q"]) == 0
