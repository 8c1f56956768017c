import json
import subprocess
import sys

import pytest

from pascal_prolate.cli import main, run


def ok_json(argv):
    code, out, err = run(argv)
    assert code == 0, err
    return json.loads(out)


def test_eigvec():
    assert ok_json(["eigvec", "--n", "2"])["vector"] == ["-2", "-1", "1"]
    assert ok_json(["eigvec", "--n", "0"])["vector"] == ["1"]
    assert ok_json(["eigvec", "--n", "4"])["vector"] == ["7/2", "7/4", "-3/4", "-2", "1"]
    code, _, err = run(["eigvec", "--n", "3"])
    assert code == 2 and "N must be even" in err


@pytest.mark.parametrize("suite", ["pascal", "jacobi", "binomial", "cholesky", "ode",
                                   "symmetric-square", "gensoln", "helper", "functional-eq"])
def test_verify_suites_pass(suite):
    rep = ok_json(["verify", suite, "--n-max", "8"])
    assert rep["pass"] and rep["witness"] is None


def test_verify_examples():
    assert ok_json(["verify", "pascal", "--n-max", "20"])["pass"]
    assert ok_json(["verify", "ode", "--n-max", "20"])["pass"]
    assert ok_json(["verify", "helper", "--n-max", "0"])["pass"]


@pytest.mark.parametrize("argv", [
    ["verify", "bogus", "--n-max", "2"],
    ["verify", "pascal", "--n-max", "-1"],
    ["verify", "pascal", "--n-max", "2", "--n-min", "5"],
])
def test_verify_bad_args(argv):
    assert run(argv)[0] == 2


def test_curve_examples():
    code, out, _ = run(["curve", "--p", "3", "--z", "2"])
    assert code == 0 and out == '{"p":3,"z":2,"points":4,"trace":0}\n'
    lines = run(["curve", "--p", "5", "--sweep"])[1].splitlines()
    assert [json.loads(line)["z"] for line in lines] == [2, 3, 4]
    assert [json.loads(line)["points"] for line in lines] == [8, 4, 8]
    csv_out = run(["curve", "--p", "5", "--sweep", "--format", "csv"])[1]
    assert csv_out.splitlines() == ["p,z,points,trace", "5,2,8,-2", "5,3,4,2", "5,4,8,-2"]


@pytest.mark.parametrize("argv", [
    ["curve", "--p", "4", "--z", "2"],
    ["curve", "--p", "5", "--z", "1"],
    ["curve", "--p", "5", "--z", "0"],
    ["curve", "--p", "5"],
    ["curve", "--p", "5", "--z", "2", "--sweep"],
])
def test_curve_bad_args(argv):
    assert run(argv)[0] == 2


def test_congruence():
    for p in ("3", "5"):
        rep = ok_json(["congruence", "--p", p])
        assert rep["pass"] and len(rep["checks"]) == 5
    assert run(["congruence", "--p", "9"])[0] == 2


def test_padic():
    rep = ok_json(["padic", "--p", "3", "--n", "2", "--samples", "5"])
    assert rep["pass"] and rep["samples"] == [1, 2, 3, 4, 5]
    assert ok_json(["padic", "--p", "3", "--n", "1", "--samples", "1"])["pass"]
    assert run(["padic", "--p", "2", "--n", "1"])[0] == 2
    assert run(["padic", "--p", "3", "--n", "9"])[0] == 2


def test_integral():
    for n in ("2", "4"):
        rep = ok_json(["integral", "--n", n, "--samples", "10", "--tol", "1e-8"])
        assert rep["pass"] and rep["max_error"] < 1e-8 and len(rep["samples"]) == 10
    assert run(["integral", "--n", "1"])[0] == 2


def test_threads_flag_and_env(monkeypatch):
    base = run(["curve", "--p", "101", "--sweep"])[1]
    for w in ("1", "2", "8"):
        assert run(["--threads", w, "curve", "--p", "101", "--sweep"])[1] == base
        assert run(["curve", "--p", "101", "--sweep", "--threads", w])[1] == base
        monkeypatch.setenv("PROLATE_THREADS", w)
        assert run(["curve", "--p", "101", "--sweep"])[1] == base
    monkeypatch.setenv("PROLATE_THREADS", "zero")
    assert run(["curve", "--p", "5", "--sweep"])[0] == 2
    assert run(["--threads", "0", "curve", "--p", "5", "--sweep"])[0] == 2


def test_main_writes_and_returns_code(capsys):
    assert main(["curve", "--p", "3", "--z", "2"]) == 0
    assert capsys.readouterr().out == '{"p":3,"z":2,"points":4,"trace":0}\n'
    assert main(["eigvec", "--n", "3"]) == 2
    assert "N must be even" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pascal_prolate", "curve", "--p", "5", "--sweep",
                           "--format", "text"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "p=5 z=3 points=4 trace=2"


def test_usage_error_exit_code():
    proc = subprocess.run([sys.executable, "-m", "pascal_prolate"], capture_output=True, text=True,
                          check=False)
    assert proc.returncode == 2
