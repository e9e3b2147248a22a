import json
import subprocess
import sys

import pytest

from conic_lseries.cli import main, parse_int


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("text,value", [("4096", 4096), ("10^5", 10**5), ("2**12", 4096), ("1e5", 10**5)])
def test_parse_int(text, value):
    assert parse_int(text) == value


def test_count_q9(capsys):
    code, out, _ = run(capsys, "count", "9")
    assert code == 0
    assert out.splitlines() == ["q,p,n,affine,infinity,total,affine_error", "9,3,2,8,2,10,1"]


def test_count_q4(capsys):
    code, out, _ = run(capsys, "count", "4")
    assert code == 0 and out.splitlines()[1] == "4,2,2,4,1,5,0"


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "5", "--format", "json")
    row = json.loads(out)[0]
    assert code == 0 and row["affine"] == 4 and row["total"] == 6


def test_count_scan_100(capsys):
    code, out, _ = run(capsys, "count", "--scan", "100")
    rows = [line.split(",") for line in out.splitlines()[1:]]
    assert code == 0 and len(rows) == 24
    assert all(int(r[5]) == int(r[0]) + 1 for r in rows)


@pytest.mark.parametrize("argv", [
    ["count", "6"],
    ["count", "abc"],
    ["count"],
    ["count", "9", "--scan", "10"],
    ["count", "--scan", "10", "--workers", "0"],
    ["series", "zeta-hat", "--method", "accelerated"],
    ["series", "zeta", "--s", "0"],
    ["verify", "--tol", "-1"],
    ["nonsense"],
])
def test_usage_errors_exit_1(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 1


def test_series_zeta(capsys):
    code, out, _ = run(capsys, "series", "zeta", "--s", "1", "--method", "accelerated", "--terms", "64")
    est = json.loads(out)
    assert code == 0 and abs(est["value"] - 0.785398163397448) < 1e-12
    assert est["method"] == "accelerated_sum" and est["cutoff"] == 64


def test_series_zeta_hat_closed_form(capsys):
    code, out, _ = run(capsys, "series", "zeta-hat", "--method", "closed-form")
    assert code == 0 and abs(json.loads(out)["value"] - 1.570796326794897) < 1e-12


def test_series_euler_product_reports_proxy(capsys):
    code, out, _ = run(capsys, "series", "zeta-hat", "--method", "euler-product", "--primes", "10^5")
    est = json.loads(out)
    assert code == 0 and abs(est["value"] - 1.5707963267948966) < 1e-3
    assert est["error_proxy"] > 0


def test_verify_analysis_report(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify", "--suite", "analysis", "--report", str(path), "--quiet")
    report = json.loads(path.read_text())
    assert code == 0 and report["passed"]
    ids = " ".join(c["identity_id"] for c in report["checks"])
    for name in ("wallis", "log_kernel", "log_series", "period_chain"):
        assert name in ids
    keys = {"identity_id", "s", "lhs", "rhs", "|lhs-rhs|", "tolerance",
            "method_lhs", "method_rhs", "cutoff", "passed"}
    assert all(set(c) == keys for c in report["checks"])


def test_verify_counting_has_splice(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "counting", "--q-limit", "512", "--quiet")
    checks = json.loads(out)["checks"]
    assert code == 0
    assert any(c["identity_id"] == "counting.a_p_splice[p=509]" for c in checks)


def test_verify_tol_keeps_calibrated_floor(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lseries", "--tol", "1e-8", "--quiet")
    checks = {c["identity_id"]: c for c in json.loads(out)["checks"]}
    assert code == 0
    assert checks["lseries.zeta_hat_at_1=pi/2[closed_form]"]["tolerance"] == 1e-8
    assert checks["lseries.zeta_hat_at_1=pi/2[euler_product]"]["tolerance"] == 1e-4


def test_verify_failure_exit_2(capsys):
    # a tolerance tighter than double rounding makes the float checks fail
    code, _, err = run(capsys, "verify", "--suite", "analysis", "--tol", "1e-300")
    assert code == 2 and "[FAIL]" in err


def test_io_error_exit_3(tmp_path, capsys):
    code, _, err = run(capsys, "count", "9", "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 3 and "I/O error" in err


def test_output_files_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["count", "--scan", "2000", "--workers", "1", "--out", str(a)]) == 0
    assert main(["count", "--scan", "2000", "--workers", "3", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "conic_lseries", "count", "9"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.splitlines()[1] == "9,3,2,8,2,10,1"
