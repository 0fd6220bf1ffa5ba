import json

import pytest

from tropicount.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_invariant_writes_record(tmp_path, capsys):
    out = tmp_path / "w.json"
    rc, text, _ = run(capsys, "invariant", "--surface", "p2", "--degrees", "3", "--m", "0", "--out", str(out))
    assert rc == 0 and "= 8" in text
    rec = json.loads(out.read_text())
    assert rec["value"] == "8"
    man = rec["manifest"]
    assert man["command"] == "invariant" and man["output"] == str(out)
    assert man["cacheHit"] is False and man["engineVersion"] == rec["engineVersion"]
    rc, text, _ = run(capsys, "invariant", "--surface", "p2", "--degrees", "3", "--m", "0", "--json")
    assert json.loads(text)["manifest"]["cacheHit"] is True


def test_quadric_invariant(capsys):
    rc, text, _ = run(capsys, "invariant", "--surface", "q", "--degrees", "2,3", "--m", "0")
    assert rc == 0 and "= 48" in text


@pytest.mark.parametrize("argv,code", [
    (["invariant", "--surface", "p2", "--degrees", "3", "--m", "9"], 3),
    (["invariant", "--surface", "p2", "--degrees", "0"], 2),
    (["invariant", "--surface", "p1", "--degrees", "2,3"], 2),
    (["invariant", "--surface", "q", "--degrees", "2"], 2),
    (["invariant", "--surface", "p2", "--degrees", "3", "--m", "1", "--index-set", "1,2"], 2),
    (["invariant", "--surface", "p2", "--degrees", "a"], 2),
])
def test_error_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["invariant", "--surface", "cone", "--degrees", "1"])
    assert exc.value.code == 2


def test_jobs_env(monkeypatch, tmp_path, capsys):
    monkeypatch.setenv("TROPICOUNT_JOBS", "2")
    rc, text, _ = run(capsys, "invariant", "--surface", "p2", "--degrees", "4", "--m", "1", "--no-cache")
    assert rc == 0 and "= 144" in text


def test_paths(capsys):
    rc, text, err = run(capsys, "paths", "--surface", "p2", "--degrees", "3", "--m", "1")
    assert rc == 0 and len(text.splitlines()) == 5 and "5 admissible" in err


def test_export_svg_roundtrip(tmp_path, capsys):
    rec, svg = tmp_path / "s.json", tmp_path / "s.svg"
    rc, *_ = run(capsys, "export-svg", "--surface", "p2", "--degrees", "3", "--m", "1", "--which", "2",
                 "--record-out", str(rec), "--out", str(svg))
    assert rc == 0
    rc, text, _ = run(capsys, "export-svg", "--record", str(rec))
    assert rc == 0 and text == svg.read_text()


def test_export_svg_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema": "x"}')
    assert run(capsys, "export-svg", "--record", str(bad))[0] == 2
    assert run(capsys, "export-svg", "--surface", "p2", "--degrees", "1", "--which", "5")[0] == 2
    assert run(capsys, "export-svg")[0] == 2


def test_example_w2d(capsys):
    rc, text, _ = run(capsys, "example-w2d", "--d", "4", "--engine")
    assert rc == 0 and "= 16" in text and "agrees" in text


def test_verify_fast_and_fault(capsys, tmp_path):
    report = tmp_path / "r.json"
    rc, text, _ = run(capsys, "verify", "tables", "--fast", "--report", str(report))
    assert rc == 0
    assert all(c["ok"] for c in json.loads(report.read_text())["checks"])
    rc, text, _ = run(capsys, "verify", "tables", "--fast", "--inject-fault", "sign")
    assert rc == 1 and "FAIL" in text


def test_bounds_commands(tmp_path, capsys):
    rc, text, _ = run(capsys, "bounds", "plane", "--n", "4")
    assert rc == 0 and json.loads(text)["count"] == "6"
    csv_path, js = tmp_path / "a.csv", tmp_path / "a.json"
    rc, text, _ = run(capsys, "bounds", "asymptotic", "--grid", "32,64,128", "--csv", str(csv_path),
                      "--json", str(js))
    assert rc == 0 and csv_path.read_text() == text
    assert json.loads(js.read_text())["increasing"] is True
