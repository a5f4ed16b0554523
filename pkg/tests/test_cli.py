import csv
import io
import json
import shutil
import subprocess

import pytest

from curvecount.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, want",
    [
        (["--d", "4", "--delta", "3", "--alpha", "2", "--beta", "2"], "674"),
        (["--d", "4", "--delta", "3", "--alpha", "2", "--beta", "2", "--irr"], "620"),
        (["--d", "1", "--delta", "0", "--alpha", "1", "--beta", "[]"], "1"),
        (["--d", "3", "--delta", "1", "--alpha", "[0,1]", "--beta", "1"], "10"),
    ],
)
def test_count_text(capsys, argv, want):
    code, out, _ = run(capsys, "count", *argv)
    assert code == 0 and out.strip() == want


def test_count_json_schema(capsys):
    code, out, _ = run(capsys, "count", "--d", "5", "--delta", "6", "--beta", "5", "--irr", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert set(rec) == {"command", "inputs", "result", "citations"}
    assert rec["command"] == "count"
    assert rec["result"] == "87304" and isinstance(rec["result"], str)
    assert rec["inputs"] == {"d": 5, "delta": 6, "alpha": [], "beta": [5], "irr": True}
    assert json.loads(json.dumps(rec)) == rec


def test_count_csv(capsys):
    code, out, _ = run(capsys, "count", "--d", "4", "--delta", "2", "--alpha", "4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows == [["expression", "value"], ["N^{4,2}(4,0)", "172"]]


def test_count_expand(capsys):
    code, out, _ = run(capsys, "count", "--d", "4", "--delta", "3", "--alpha", "2", "--beta", "2", "--expand")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "N^{4,3}(2,2) = 674"
    assert "1 * N^{4,3}(3,1) = 636  [first_sum(k=1)]" in lines[1]
    assert "3 * N^{3,1}(0,3) = 12  [second_sum]" in lines[3]


def test_count_expand_irr_json(capsys):
    code, out, _ = run(
        capsys, "count", "--d", "4", "--delta", "3", "--alpha", "2", "--beta", "2", "--irr", "--expand", "--format", "json"
    )
    tree = json.loads(out)["result"]
    assert tree["value"] == "620"
    first = sum(int(t["coefficient"]) * int(t["value"]) for t in tree["terms"] if "value" in t)
    second = sum(int(t["contribution"]) for t in tree["terms"] if "contribution" in t)
    assert first + second == 620


def test_count_invalid_key(capsys):
    code, _, err = run(capsys, "count", "--d", "3", "--delta", "0", "--alpha", "1", "--beta", "1")
    assert code == 2
    assert err.startswith("curvecount: error: invalid key")
    assert len(err.strip().splitlines()) == 1


def test_count_bad_tally(capsys):
    code, _, err = run(capsys, "count", "--d", "3", "--delta", "0", "--beta", "[1,")
    assert code == 2 and "cannot parse tally" in err


def test_count_cache(tmp_path, capsys, caplog):
    cache = tmp_path / "memo.ndjson"
    args = ["count", "--d", "4", "--delta", "3", "--beta", "4", "--cache", str(cache)]
    assert run(capsys, *args)[1].strip() == "675"
    assert cache.exists() and cache.read_text().strip()
    assert run(capsys, *args)[1].strip() == "675"
    with cache.open("a") as fh:
        fh.write("garbage\n")
    code, out, _ = run(capsys, *args)
    assert code == 0 and out.strip() == "675"
    assert any("skipping cache record" in r.message for r in caplog.records)


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--d", "x"])
    assert exc.value.code == 2


def test_verify_all_pass(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "N^{4,2}(4,0)" in out and "172" in out
    assert out.strip().splitlines()[-1].startswith("60/60")


def test_verify_salmon_csv(capsys):
    code, out, _ = run(capsys, "verify", "--only", "salmon", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert list(rows[0]) == ["expression", "expected", "computed", "status", "citation"]
    t4 = next(r for r in rows if r["expression"] == "t(4)")
    assert t4["computed"] == "3200" and t4["status"] == "pass"


def test_verify_tacnode_json(capsys):
    code, out, _ = run(capsys, "verify", "--only", "tacnode", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["result"]["passed"]
    assert any(r["citation"] == "swallowtail" for r in rec["result"]["rows"])


def test_verify_failure_exit_code(capsys, monkeypatch):
    from curvecount import checks

    real = checks.run

    def broken(only=None, memo=None):
        rows = real(only, memo)
        r = rows[0]
        return [checks.CheckResult(r.suite, r.expression, r.expected, "0", r.citation)] + rows[1:]

    monkeypatch.setattr(checks, "run", broken)
    code, out, _ = run(capsys, "verify", "--only", "severi")
    assert code == 1 and "FAIL" in out


def test_tacnode_disc_with_negative_value(capsys):
    code, out, _ = run(capsys, "tacnode", "disc", "--m", "2", "--alpha", "-1", "--beta", "0,0")
    assert code == 0 and out.strip() == "x^4 - 2x^2 + 1"


def test_tacnode_profile(capsys):
    code, out, _ = run(capsys, "tacnode", "profile", "--m", "2", "--alpha=-1", "--beta", "0,0")
    assert code == 0 and out.strip() == "(2, false)"


def test_tacnode_rationals(capsys):
    code, out, _ = run(capsys, "tacnode", "disc", "--m", "2", "--alpha=-1/2", "--beta", "0,0")
    assert code == 0 and out.strip() == "x^4 - x^2 + 1/4"


def test_tacnode_psi(capsys):
    code, out, _ = run(capsys, "tacnode", "psi", "--m", "3", "--t", "1", "--profile")
    assert code == 0 and out.strip() == "(2, false)"
    code, out, _ = run(capsys, "tacnode", "psi", "--m", "2", "--t", "1/2", "--format", "json")
    assert json.loads(out)["result"]["beta"] == ["1/16", "0"]


def test_tacnode_cheb(capsys):
    code, out, _ = run(capsys, "tacnode", "cheb", "--kind", "T", "--n", "4")
    assert code == 0 and out.strip() == "8x^4 - 8x^2 + 1"


def test_tacnode_swallowtail_and_cusp(capsys):
    code, out, _ = run(capsys, "tacnode", "swallowtail")
    assert code == 0 and out.startswith("4096a0^3*b1^2")
    code, out, _ = run(capsys, "tacnode", "cusp")
    assert code == 0 and out.strip() == "true"


def test_tacnode_nu(capsys):
    code, out, _ = run(capsys, "tacnode", "nu", "--m", "3", "--gamma", "1/4")
    assert code == 0 and out.strip() == "x^3 - 3/4*x"
    code, _, err = run(capsys, "tacnode", "nu", "--m", "3", "--gamma", "1")
    assert code == 2 and "not a real rational" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["tacnode", "disc", "--m", "2", "--alpha", "abc", "--beta", "0,0"],
        ["tacnode", "disc", "--m", "2", "--alpha", "1/0", "--beta", "0,0"],
        ["tacnode", "disc", "--m", "3", "--alpha", "1", "--beta", "0,0"],
        ["tacnode", "psi", "--m", "1", "--t", "1"],
        ["tacnode", "cheb", "--kind", "T", "--n", "-2"],
    ],
)
def test_tacnode_bad_input(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("curvecount: error:")


def test_salmon(capsys):
    code, out, _ = run(capsys, "salmon", "--d", "4", "--format", "json")
    assert code == 0 and json.loads(out)["result"]["triple_points"] == "3200"


@pytest.mark.skipif(shutil.which("curvecount") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(
        ["curvecount", "count", "--d", "4", "--delta", "2", "--beta", "4"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "225"


@pytest.mark.skipif(shutil.which("curvecount") is None, reason="console script not installed")
def test_console_script_reports_corrupt_cache_on_stderr(tmp_path):
    cache = tmp_path / "memo.ndjson"
    cache.write_text("garbage\n")
    proc = subprocess.run(
        ["curvecount", "count", "--d", "2", "--delta", "1", "--beta", "2", "--cache", str(cache)],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "3"
    assert "skipping cache record" in proc.stderr
