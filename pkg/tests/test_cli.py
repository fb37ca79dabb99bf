import json
import subprocess
import sys
from pathlib import Path

import pytest

from tarsis.cli import main, parse_inputs

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def run_main(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_loop_json(capsys):
    code, out, _ = run_main(capsys, "analyze", str(CORPUS / "loop.imp"), "--domain", "tarsis", "--format", "json")
    assert code == 0
    assert "Repeat: (\\u22a4!)*" in out
    report = json.loads(out)
    first = report["asserts"][0]
    assert first["line"] == 6 and first["verdict"] is None
    assert first["values"]["res"] == "Repeat: (⊤!)*"
    assert [a["verdict"] for a in report["asserts"]] == [None, "PA", "PA"]


def test_analyze_text_and_definite_alarm(capsys):
    code, out, _ = run_main(capsys, "analyze", str(CORPUS / "subs.imp"), "--time")
    assert code == 1
    assert "DA" in out and "4 asserts, 1 DA, 2 PA" in out and "time:" in out


def test_analyze_empty(capsys):
    code, out, _ = run_main(capsys, "analyze", str(CORPUS / "empty.imp"), "--domain", "tarsis")
    assert code == 0 and "0 asserts" in out


def test_config_file_with_override(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"domain": "suffix", "wideningN": 3, "format": "json"}))
    code, out, _ = run_main(capsys, "analyze", str(CORPUS / "loop.imp"), "--config", str(cfg))
    assert json.loads(out)["domain"] == "suffix"
    code, out, _ = run_main(capsys, "analyze", str(CORPUS / "loop.imp"), "--config", str(cfg), "--domain", "prefix")
    assert json.loads(out)["domain"] == "prefix"


def test_run_count(capsys):
    code, out, _ = run_main(capsys, "run", str(CORPUS / "count.imp"), "--input", "nondet=true")
    assert "count=3" in out.splitlines()
    assert code == 1  # the second and third asserts fail concretely


def test_run_binds_variables(capsys, tmp_path):
    src = tmp_path / "p.imp"
    src.write_text("y = x + 1;\nassert(y == 3);")
    code, out, _ = run_main(capsys, "run", str(src), "--input", "x=2")
    assert code == 0 and "y=3" in out


def test_parse_inputs():
    inputs, env = parse_inputs(["read=ab", "read=c", "nondet=false", "n=4", 's="q"'])
    assert env == {"n": 4, "s": "q"}
    assert inputs.read() == "ab" and inputs.read() == "c" and inputs.nondet() is False


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.imp"
    bad.write_text("x = ;")
    code, _, err = run_main(capsys, "analyze", str(bad))
    assert code == 2 and "bad.imp:1:5" in err


def test_missing_file(capsys):
    code, _, err = run_main(capsys, "analyze", "/nonexistent.imp")
    assert code == 2 and err


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        main(["analyze", str(CORPUS / "loop.imp"), "--domain", "bricks"])
    assert e.value.code == 2


def test_bench_matches_golden(capsys):
    code, out, _ = run_main(capsys, "bench", str(CORPUS), "--repeat", "1")
    assert code == 0
    assert "tarsis" in out and "charfa" in out and "match" in out


def test_entry_point_runs():
    r = subprocess.run([sys.executable, "-m", "tarsis.cli", "analyze", str(CORPUS / "count.imp")],
                       capture_output=True, text=True)
    assert r.returncode == 1 and "[2, 3]" in r.stdout
