import json
import math
import subprocess
import sys

import pytest

from clausenkit.cli import EXIT_MATH, EXIT_OK, EXIT_USAGE, fmt, main

G = 0.91596559417721901505
C11 = 0.17390061066200274273
TRIGAMMA_THIRD = 10.095597125427094082


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def fields(text):
    return dict(line.split(" = ", 1) for line in text.splitlines() if " = " in line)


# --- eval ---

def test_eval_catalan(capsys):
    code, out, _ = run(["eval", "cl2", "1.5707963267948966"], capsys)
    f = fields(out)
    assert code == EXIT_OK
    assert f["fn"] == "cl2"
    assert abs(float(f["value"]) - G) < 1e-15
    assert float(f["bound"]) < 1e-14


def test_eval_zero(capsys):
    code, out, _ = run(["eval", "cl2", "0"], capsys)
    assert code == EXIT_OK and float(fields(out)["value"]) == 0.0


def test_eval_lobachevsky_pi_sixth(capsys):
    code, out, _ = run(["eval", "lobachevsky", "0.5235987755982988"], capsys)
    expect = math.pi / 6 * math.log(2) - (TRIGAMMA_THIRD - 2 * math.pi ** 2 / 3) / (6 * math.sqrt(3))
    assert code == EXIT_OK and abs(float(fields(out)["value"]) - expect) < 1e-15


def test_eval_complex_and_variable_arity(capsys):
    code, out, _ = run(["eval", "li2", "0", "1"], capsys)
    f = fields(out)
    assert code == EXIT_OK and abs(float(f["imag"]) - G) < 1e-15
    code, out, _ = run(["eval", "pfq", "2", "1", "0.5", "1", "1.5", "-1"], capsys)
    assert code == EXIT_OK and abs(float(fields(out)["value"]) - math.pi / 4) < 1e-14


def test_eval_ctet_routes(capsys):
    for name in ("ctet_series", "ctet_clausen", "ctet_srp"):
        code, out, _ = run(["eval", name], capsys)
        assert code == EXIT_OK and abs(float(fields(out)["value"]) - C11) < 1e-13


def test_eval_domain_error_exits_one(capsys):
    code, _, err = run(["eval", "elliptic_k", "1"], capsys)
    assert code == EXIT_MATH and err.startswith("error: elliptic_k")


@pytest.mark.parametrize("argv", [
    ["eval", "nope", "1"],
    ["eval", "cl2"],
    ["eval", "cl2", "1", "2"],
    ["eval", "cl2", "x"],
    ["eval", "lsn", "2.5", "1"],
    ["eval", "pfq", "1", "1", "0.5"],
    ["eval", "cl2", "1", "--tol", "-1"],
    ["frobnicate"],
    ["verify", "--bogus"],
    ["verify", "--filter", "Z-*"],
    ["verify", "--tol-scale", "0"],
    ["verify", "--jobs", "0"],
    ["ctet", "--digits", "40"],
    ["ctet", "--route", "nope"],
    ["bench", "--points", "0"],
    ["bench", "--fn", "zeta"],
    [],
])
def test_usage_errors_exit_two(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == EXIT_USAGE
    assert "usage error" in err


def test_fmt():
    assert fmt(0.1) == "0.10000000000000001"
    assert fmt(math.nan) == "nan" and fmt(-math.inf) == "-inf"


# --- verify ---

def test_verify_filter_passes(capsys):
    code, out, _ = run(["verify", "--filter", "I-02"], capsys)
    assert code == EXIT_OK
    assert "| I-02a | pass |" in out and "| I-02b | pass |" in out


def test_verify_tightened_tolerance_reports_failure(capsys):
    code, out, _ = run(["verify", "--filter", "I-08i", "--tol-scale", "1e-6"], capsys)
    assert code == EXIT_MATH
    assert "| I-08i | fail |" in out


def test_verify_json_is_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["verify", "--filter", "I-1*", "--seed", "42", "--json", str(a)], capsys)[0] == EXIT_OK
    assert run(["verify", "--filter", "I-1*", "--seed", "42", "--json", str(b), "--jobs", "2"], capsys)[0] == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_verify_timing_flag(tmp_path, capsys):
    path = tmp_path / "t.json"
    run(["verify", "--filter", "I-02", "--json", str(path), "--timing"], capsys)
    assert json.loads(path.read_text())["wall_ms"] > 0


# --- ctet ---

def test_ctet_all(capsys):
    code, out, _ = run(["ctet", "--route", "all"], capsys)
    lines = out.splitlines()
    values = [ln for ln in lines if not ln.startswith("|")]
    deltas = [ln for ln in lines if ln.startswith("|")]
    assert code == EXIT_OK
    assert len(values) == 4 and len(deltas) == 6
    assert all(ln.endswith("ok") for ln in deltas)
    for ln in values:
        assert abs(float(ln.split()[1]) - C11) < 1e-11


def test_ctet_single_route(capsys):
    code, out, _ = run(["ctet", "--route", "clausen", "--digits", "15"], capsys)
    lines = out.splitlines()
    assert code == EXIT_OK and len(lines) == 1
    name, text = lines[0].split()[:2]
    assert name == "clausen" and len(text.lstrip("0.")) == 15
    assert abs(float(text) - C11) < 1e-14


def test_ctet_series_clausen_delta(capsys):
    _, out, _ = run(["ctet"], capsys)
    (line,) = [ln for ln in out.splitlines() if ln.startswith("|series - clausen|")]
    assert float(line.split()[4]) <= 1e-12


def test_ctet_extra_digits_come_from_double_double(capsys):
    code, out, _ = run(["ctet", "--route", "series", "--digits", "25"], capsys)
    assert code == EXIT_OK
    assert out.split()[1] == "0.1739006106620027427265060"
    assert "double-double" in out


# --- bench ---

@pytest.mark.parametrize("fn", ["cl2", "li2"])
def test_bench_csv(fn, capsys):
    code, out, _ = run(["bench", "--fn", fn, "--points", "200"], capsys)
    rows = out.strip().splitlines()
    assert code == EXIT_OK
    assert rows[0] == "strategy,mean_ns,max_abs_err"
    assert [r.split(",")[0] for r in rows[1:]] == ["series", "quadrature"]
    for r in rows[1:]:
        _, ns, err = r.split(",")
        assert float(ns) > 0 and float(err) < 1e-12


# --- module entry point ---

def test_python_dash_m():
    p = subprocess.run([sys.executable, "-m", "clausenkit", "eval", "cl2", "1"], capture_output=True, text=True)
    assert p.returncode == 0 and "value = 1.01395913236076" in p.stdout
    p = subprocess.run([sys.executable, "-m", "clausenkit", "eval"], capture_output=True, text=True)
    assert p.returncode == 2
