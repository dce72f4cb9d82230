import json
import subprocess
import sys
from pathlib import Path

import pytest
from jsonschema import Draft202012Validator

from keyseries.cli import main
from keyseries.report import body_digest

DOCS = Path(__file__).resolve().parents[1] / "docs"


def load_schema(name):
    schema = json.loads((DOCS / name).read_text())
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_key_by_composition(capsys):
    code, out = run(capsys, "key", "--nu", "0,1")
    assert code == 0
    assert out.strip() == "x1 + x2"


def test_key_by_pair(capsys):
    code, out = run(capsys, "key", "--w", "321", "--lambda", "4,2")
    assert code == 0
    assert "3*x1^2*x2^2*x3^2" in out


def test_key_single_column(capsys):
    code, out = run(capsys, "key", "--w", "1", "--lambda", "3")
    assert code == 0
    assert out.strip() == "x1^3"


def test_key_usage_errors(capsys):
    assert run(capsys, "key")[0] == 2
    assert run(capsys, "key", "--nu", "0,1", "--w", "21")[0] == 2
    assert run(capsys, "key", "--w", "21")[0] == 2
    assert run(capsys, "key", "--w", "21", "--lambda", "1,2")[0] == 2
    assert run(capsys, "key", "--nu", "a,b")[0] == 2


def test_pw_trivial(capsys):
    code, out = run(capsys, "pw", "--w", "21")
    assert code == 0
    assert out.strip() == "1"


def test_pw_golden(capsys):
    code, out = run(capsys, "pw", "--w", "31425")
    assert code == 0
    assert out.strip() == (
        "1 - x1*x2*x3*T1*T2 - x1*x2*x3*x4*T1*T3 - x1^2*x2*x3*x4*T2*T3"
        " + x1^2*x2^2*x3*x4*T1*T2*T3 + x1^2*x2*x3^2*x4*T1*T2*T3"
    )


def test_pw_grade_slice(capsys):
    code, out = run(capsys, "pw", "--w", "14253", "--grade", "2")
    assert code == 0
    assert out.strip() == (
        "-x1^2*x2*x3*x4*T2*T3 - x1^2*x2*x3*x4*x5*T2*T4"
        " - x1^2*x2^2*x3*x4*x5*T3*T4"
    )


def test_sets_A_golden(capsys):
    code, out = run(capsys, "sets", "--w", "42531", "--A", "3")
    assert code == 0
    assert out.split() == [
        "123", "124", "125", "134", "135", "145", "234", "235", "245",
    ]


def test_sets_B_golden(capsys):
    code, out = run(capsys, "sets", "--w", "42531", "--B", "2,3")
    assert code == 0
    lines = out.split()
    assert len(lines) == 13
    assert lines[0] == "11234" and lines[-1] == "22345"


def test_sets_beyond_rank(capsys):
    code, out = run(capsys, "sets", "--w", "1", "--A", "4")
    assert code == 0
    assert out.strip() == "1234"


def test_sets_C(capsys):
    code, out = run(capsys, "sets", "--w", "4123", "--C", "1,2,3")
    assert code == 0
    assert "112234" in out.split()


def test_sets_usage_errors(capsys):
    assert run(capsys, "sets", "--w", "42531")[0] == 2
    assert run(capsys, "sets", "--w", "42531", "--A", "3", "--B", "2,3")[0] == 2
    assert run(capsys, "sets", "--w", "42531", "--B", "3,2")[0] == 2
    assert run(capsys, "sets", "--w", "42531", "--C", "1,2")[0] == 2
    assert run(capsys, "sets", "--w", "42x", "--A", "2")[0] == 2


def test_verify_clean_suite(capsys):
    code, out = run(capsys, "verify", "--suite", "diff1", "--n", "4")
    assert code == 0
    assert out.startswith("verify-diff1 n=4: 0 counterexample(s)")


def test_verify_unknown_suite(capsys):
    assert run(capsys, "verify", "--suite", "nope")[0] == 2


def test_scan_clean(capsys):
    code, out = run(capsys, "scan", "--conjecture", "siinc", "--n", "3")
    assert code == 0
    assert "0 counterexample(s)" in out


def test_scan_findings_exit_code(capsys):
    code, out = run(capsys, "scan", "--conjecture", "formpw3", "--n", "4",
                    "--format", "json")
    assert code == 1
    report = json.loads(out)
    assert len(report["counterexamples"]) == 70
    claims = {ce["claim"] for ce in report["counterexamples"]}
    assert claims == {"support", "positivity"}


def test_polynomial_json_schema(capsys):
    validator = load_schema("polynomial.schema.json")
    for argv in (
        ("key", "--nu", "0,1", "--format", "json"),
        ("key", "--w", "321", "--lambda", "2,1", "--xi", "--format", "json"),
        ("pw", "--w", "31425", "--format", "json"),
    ):
        code, out = run(capsys, *argv)
        assert code == 0
        validator.validate(json.loads(out))


def test_listing_json_schema(capsys):
    validator = load_schema("listing.schema.json")
    for argv in (
        ("sets", "--w", "42531", "--A", "3", "--format", "json"),
        ("sets", "--w", "42531", "--B", "2,3", "--format", "json"),
        ("sets", "--w", "31425", "--C", "1,2,3", "--format", "json"),
    ):
        code, out = run(capsys, *argv)
        assert code == 0
        obj = json.loads(out)
        validator.validate(obj)
        assert obj["size"] == len(obj["elements"])


def test_report_json_schema(capsys):
    validator = load_schema("report.schema.json")
    for argv in (
        ("scan", "--conjecture", "poset", "--n", "3", "--format", "json"),
        ("scan", "--conjecture", "formpw3", "--n", "4", "--format", "json"),
        ("verify", "--suite", "fcoeff", "--n", "3", "--format", "json"),
        ("verify", "--suite", "formofkw", "--n", "3", "--tdeg", "3",
         "--format", "json"),
    ):
        code, out = run(capsys, *argv)
        validator.validate(json.loads(out))


def test_out_writes_report_and_manifest(tmp_path, capsys):
    out_path = tmp_path / "rep.json"
    code, _ = run(capsys, "scan", "--conjecture", "siinc", "--n", "3",
                  "--out", str(out_path))
    assert code == 0
    report = json.loads(out_path.read_text())
    load_schema("report.schema.json").validate(report)
    manifest = json.loads((tmp_path / "rep.json.manifest.json").read_text())
    load_schema("manifest.schema.json").validate(manifest)
    assert manifest["command"] == "scan"
    assert manifest["exit_status"] == 0
    assert manifest["result_summary"]["counterexamples"] == 0


def test_manifest_hashes_config_input(tmp_path, capsys):
    cfg = tmp_path / "caps.cfg"
    cfg.write_text("max_n=6\n")
    out_path = tmp_path / "rep.json"
    code, _ = run(capsys, "scan", "--conjecture", "siinc", "--n", "3",
                  "--config", str(cfg), "--out", str(out_path))
    assert code == 0
    manifest = json.loads((tmp_path / "rep.json.manifest.json").read_text())
    assert set(manifest["input_hashes"]) == {"config"}
    assert len(manifest["input_hashes"]["config"]) == 64


def test_repeated_runs_identical_bodies(tmp_path, capsys):
    digests = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        code, _ = run(capsys, "scan", "--conjecture", "formpw3", "--n", "4",
                      "--out", str(path))
        assert code == 1
        digests.append(body_digest(json.loads(path.read_text())))
    assert digests[0] == digests[1]


def test_threads_do_not_change_bodies(tmp_path, capsys, monkeypatch):
    digests = []
    for threads in ("1", "2"):
        monkeypatch.setenv("KEYSERIES_THREADS", threads)
        path = tmp_path / f"t{threads}.json"
        code, _ = run(capsys, "scan", "--conjecture", "siinc", "--n", "4",
                      "--out", str(path))
        assert code == 0
        body = json.loads(path.read_text())
        body["params"].pop("threads")
        digests.append(body_digest(body))
    assert digests[0] == digests[1]


def test_resource_caps(tmp_path, capsys):
    assert run(capsys, "verify", "--suite", "diff1", "--n", "8")[0] == 3
    assert run(capsys, "scan", "--conjecture", "siinc", "--n", "10")[0] == 3
    assert run(capsys, "pw", "--w", "21", "--tdeg", "9")[0] == 3
    cfg = tmp_path / "caps.cfg"
    cfg.write_text("max_n=3\n")
    code, _ = run(capsys, "verify", "--suite", "diff1", "--n", "4",
                  "--config", str(cfg))
    assert code == 3


def test_bad_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("KEYSERIES_THREADS", "many")
    assert run(capsys, "scan", "--conjecture", "siinc", "--n", "3")[0] == 2


def test_missing_config_file(capsys):
    assert run(capsys, "scan", "--conjecture", "siinc", "--n", "3",
               "--config", "/nonexistent.cfg")[0] == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-c",
         "import sys; from keyseries.cli import main; sys.exit(main(['--version']))"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "0.1.0"
