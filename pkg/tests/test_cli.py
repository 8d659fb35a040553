import csv
import io
import json
import subprocess
import sys

import pytest

from k3fib.cli import main, render
from k3fib.selfcheck import run_all


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_modular_json(capsys):
    code, out, _ = run(capsys, "modular", "13", "--format", "json")
    assert code == 0 and json.loads(out)["h1_vplus"] == 2


def test_modular_verbose_shows_both_readings(capsys):
    code, out, _ = run(capsys, "modular", "11", "--verbose", "--format", "json")
    data = json.loads(out)
    assert data["k_smooth"] == 4 and data["k_field_reading"] == 2


def test_classify_record(capsys):
    code, out, _ = run(capsys, "classify", "2", "--infinity", "8", "--zero", "4,4",
                       "--lambda", "1,1,1,1,1,1,1,1", "--extra", "1", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["h11"] == 149 and rec["h21"] == 1
    assert set(rec) == {"branch", "admissible", "reasons", "smooth", "obstructions", "delta",
                        "h11", "h21", "b3", "euler", "fibre_reports", "existence_class"}


def test_exit_codes(capsys):
    assert run(capsys, "classify", "2", "--infinity", "8", "--zero", "4,4",
               "--extra", "2")[0] == 2
    assert run(capsys, "classify", "2", "--infinity", "4", "--zero", "4")[0] == 2
    assert run(capsys, "classify", "5", "--infinity", "2", "--zero", "1,1",
               "--lambda", "1,1")[0] == 1
    assert run(capsys, "classify", "2", "--infinity", "3", "--zero", "1,1")[0] == 1
    assert run(capsys, "modular", "1")[0] == 1
    assert run(capsys, "enumerate", "10", "--max-degree", "2")[0] == 1
    assert run(capsys, "rank", "1")[0] == 1


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["modular", "x"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "2", "--max-degree", "2", "--bogus"])
    assert exc.value.code == 1


def test_max_degree_env(capsys, monkeypatch):
    monkeypatch.setenv("K3FIB_MAX_DEGREE", "3")
    assert run(capsys, "enumerate", "2", "--max-degree", "4")[0] == 1
    assert run(capsys, "enumerate", "2", "--max-degree", "3")[0] == 0


def test_rank(capsys):
    code, out, _ = run(capsys, "rank", "2")
    assert code == 0 and "h1 = 0" in out
    code, out, _ = run(capsys, "rank", "2", "--infinity", "8", "--zero", "4,4", "--extra", "1",
                       "--format", "json")
    assert json.loads(out)["h1"] == 4


def test_enumerate_formats_agree(capsys):
    _, js, _ = run(capsys, "enumerate", "5", "--max-degree", "3", "--format", "json")
    _, cs, _ = run(capsys, "enumerate", "5", "--max-degree", "3", "--format", "csv")
    _, tb, _ = run(capsys, "enumerate", "5", "--max-degree", "3")
    data = json.loads(js)
    rows = list(csv.DictReader(io.StringIO(cs)))
    assert len(data) == len(rows) == len(tb.strip().splitlines()) - 2
    for item, row in zip(data, rows):
        assert row["infinity"] == ",".join(map(str, item["infinity"]))
        assert row["lambda_2"] == ",".join(map(str, item["lambda"][1]))
        assert int(row["r"]) == item["r"]
    assert list(rows[0]) == ["n", "d", "infinity", "zero", "lambda_1", "lambda_2", "r"]


def test_enumerate_with_witness(capsys):
    code, out, _ = run(capsys, "enumerate", "2", "--max-degree", "4", "--witness",
                       "--format", "json")
    data = json.loads(out)
    assert code == 0 and any(item["witness"] is None for item in data)


def test_empty_outputs(capsys):
    _, js, _ = run(capsys, "enumerate", "2", "--max-degree", "1", "--format", "json")
    _, cs, _ = run(capsys, "enumerate", "2", "--max-degree", "1", "--format", "csv")
    assert json.loads(js) == []
    assert cs == "n,d,infinity,zero,lambda_1,r\n"


def test_render_round_trip_and_unicode():
    header = ["label", "value"]
    rows = [["λ=22+10√5", 1], ["∞", "a,b"]]
    js = json.loads(render(header, rows, "json"))
    cs = list(csv.reader(io.StringIO(render(header, rows, "csv"))))
    tb = render(header, rows, "table")
    assert js[0]["label"] == cs[1][0] == "λ=22+10√5"
    assert cs[2][1] == "a,b"
    assert "λ=22+10√5" in tb and "∞" in tb


def test_mirror_pairs_and_dump(capsys):
    code, out, _ = run(capsys, "mirror-pairs", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 15
    code, out, _ = run(capsys, "dump-tables")
    dump = json.loads(out)
    assert dump["zero_fibre_components"]["7"]["3"] == "1*†"


def test_check_exit_matches_suites(capsys):
    code, out, _ = run(capsys, "check", "--format", "json")
    report = json.loads(out)
    expected_ok = all(r.passed for r in run_all())
    assert report["passed"] is expected_ok
    assert code == (0 if expected_ok else 3)
    mirror = next(s for s in report["suites"] if s["suite"] == "mirror-pairs")
    assert mirror["passed"]


def test_check_single_suite(capsys):
    assert run(capsys, "check", "--suite", "genus-lists")[0] == 0
    assert run(capsys, "check", "--suite", "nope")[0] == 1


def test_byte_identical_subprocess():
    cmd = [sys.executable, "-m", "k3fib.cli", "classify", "5", "--infinity", "4",
           "--zero", "2,2", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["h11"] == 101
