"""CLI contract: output formats, determinism, exit codes."""

import json
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "besstruve.cli"]


def run_cli(*args):
    return subprocess.run(CLI + list(args), capture_output=True, text=True)


def test_eval_s_trivial_zero():
    r = run_cli("eval", "s", "--z", "0", "--zeta", "3")
    assert r.returncode == 0
    record = json.loads(r.stdout)
    assert record["value"] == 0.0
    assert record["subject"] == "s"


def test_eval_c_third():
    r = run_cli("eval", "c", "--z", "0", "--zeta", "0")
    assert r.returncode == 0
    record = json.loads(r.stdout)
    assert abs(record["value"] - 1 / 3) < 1e-12


def test_eval_deriv_amplitude():
    r = run_cli("eval", "dj1z", "--k", "2", "--z", "0")
    assert r.returncode == 0
    record = json.loads(r.stdout)
    assert record["value"] == -0.125


def test_eval_dh1z():
    r = run_cli("eval", "dh1z", "--k", "1", "--z", "0")
    assert r.returncode == 0
    record = json.loads(r.stdout)
    assert abs(record["value"] - 2 / (3 * 3.141592653589793)) < 1e-14
    assert record["path"] == "taylor"


def test_eval_invalid_tol_is_domain_error():
    r = run_cli("eval", "s", "--z", "1", "--zeta", "1", "--tol", "-1")
    assert r.returncode == 2


def test_eval_csv_format():
    r = run_cli("eval", "dj1z", "--k", "2", "--z", "0", "--format", "csv")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "subject,k,z,tol,value,abs_err_estimate,terms_used,path"
    assert lines[1].startswith("dj1z,2,0.0,")


def test_poly_r1():
    r = run_cli("poly", "r1", "--nu", "3")
    assert r.returncode == 0
    obj = json.loads(r.stdout)
    assert obj["pi_power"] == 0
    assert obj["terms"] == [
        {"exp": 0, "num": "-1", "den": "1"},
        {"exp": -2, "num": "8", "den": "1"},
    ]


def test_poly_sigma_k1():
    r = run_cli("poly", "sigma", "--k", "1")
    assert r.returncode == 0
    obj = json.loads(r.stdout)
    assert obj["sigma0"]["terms"] == [{"exp": 0, "num": "-1", "den": "2"}]
    assert obj["sigma1"]["terms"] == [{"exp": 0, "num": "1", "den": "2"}]
    assert obj["sigma2"]["terms"] == []


def test_poly_s_sum_nu2():
    r = run_cli("poly", "s_sum", "--nu", "2")
    obj = json.loads(r.stdout)
    assert obj["pi_power"] == -1
    assert obj["terms"] == [{"exp": 1, "num": "2", "den": "3"}]


def test_table_single_cell():
    r = run_cli("table", "c", "--z-grid", "0", "--zeta-grid", "0")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "z,zeta,value,err,terms,path"
    assert lines[1].startswith("0.0,0.0,0.3333333333333")


def test_table_zeta_zero_rows_vanish():
    r = run_cli("table", "s", "--z-grid", "1,2", "--zeta-grid", "0")
    rows = r.stdout.strip().splitlines()[1:]
    assert len(rows) == 2
    for row in rows:
        assert row.split(",")[2] == "0.0"


def test_table_json_row_order():
    r = run_cli("table", "s", "--z-grid", "2,1", "--zeta-grid", "0.5,0.25", "--format", "json")
    rows = json.loads(r.stdout)
    assert [(row["z"], row["zeta"]) for row in rows] == [
        (2.0, 0.5),
        (2.0, 0.25),
        (1.0, 0.5),
        (1.0, 0.25),
    ]


def test_determinism_byte_identical():
    a = run_cli("table", "c", "--z-grid", "0.5,2", "--zeta-grid", "0,1")
    b = run_cli("table", "c", "--z-grid", "0.5,2", "--zeta-grid", "0,1")
    assert a.stdout == b.stdout
    c = run_cli("eval", "s", "--z", "2", "--zeta", "1")
    d = run_cli("eval", "s", "--z", "2", "--zeta", "1")
    assert c.stdout == d.stdout


def test_exit_code_domain_error():
    r = run_cli("eval", "s", "--z", "99", "--zeta", "0")
    assert r.returncode == 2
    assert "domain error" in r.stderr
    r = run_cli("poly", "r0", "--nu", "1")
    assert r.returncode == 2
    r = run_cli("table", "s", "--z-grid", "1,oops", "--zeta-grid", "0")
    assert r.returncode == 2
    r = run_cli("eval", "s", "--z", "1")  # missing --zeta
    assert r.returncode == 2


def test_poly_range_maxima_and_violations():
    assert run_cli("poly", "p", "--k", "60").returncode == 0
    assert run_cli("poly", "sigma", "--k", "41").returncode == 0
    assert run_cli("poly", "p", "--k", "61").returncode == 2
    assert run_cli("poly", "sigma", "--k", "42").returncode == 2
    assert run_cli("poly", "s_sum", "--nu", "61").returncode == 2


def test_exit_code_convergence_failure():
    r = run_cli("eval", "c", "--z", "1", "--zeta", "5", "--tol", "1e-12")
    assert r.returncode == 3
    assert "convergence failure" in r.stderr


def test_verify_suite_exits_zero():
    r = run_cli("verify", "--suite", "scaling")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert all(line.startswith("[PASS]") for line in lines[:-1])
    summary = json.loads(lines[-1])
    assert summary["all_passed"] is True


def test_verify_lommel_flags_order1_row():
    r = run_cli("verify", "--suite", "lommel")
    assert r.returncode == 0
    summary = json.loads(r.stdout.strip().splitlines()[-1])
    names = {c["name"]: c for c in summary["checks"]}
    assert names["table_second_family_order1_flagged"]["passed"] is True
    assert "flagged" in names["table_second_family_order1_flagged"]["detail"]


def test_verify_fails_with_impossible_tol():
    r = run_cli("verify", "--suite", "struve", "--tol", "1e-30")
    assert r.returncode == 1
