import csv
import json
import os
import subprocess
import sys

import pytest

from riesz_equilibria.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_origin(capsys):
    code, out, _ = run(capsys, "eval", "--n", "3", "--beta", "0.5", "--r", "0", "--theta", "0")
    assert code == 0
    d = json.loads(out)
    assert list(d) == ["n", "beta", "r", "theta", "method", "value"]
    assert d["value"] == 3.0


def test_eval_closed(capsys):
    code, out, _ = run(capsys, "eval", "--n", "3", "--beta", "1", "--r", "0.5", "--theta", "1.0471975512",
                       "--method", "closed")
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(3.111111, abs=1e-6)


def test_eval_degrees_and_integral(capsys):
    code, out, _ = run(capsys, "eval", "--n", "4", "--beta", "0.5", "--r", "0.5", "--theta", "45", "--degrees",
                       "--method", "integral", "--nodes", "128")
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(4.14402035552976, abs=1e-12)


@pytest.mark.parametrize("argv", [
    ["eval", "--n", "3", "--beta", "1.5", "--method", "integral"],
    ["eval", "--n", "3", "--beta", "0.5", "--method", "closed"],
    ["eval", "--n", "2", "--beta", "0.5"],
    ["eval", "--n", "3", "--beta", "0.5", "--r", "1.2"],
    ["eval", "--n", "3", "--beta", "-1"],
])
def test_eval_domain_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--beta", "0.5"])
    assert exc.value.code == 2


@pytest.mark.parametrize("n,beta,count", [(3, "0.5", 4), (4, "0.5", 5), (7, "1", 8)])
def test_equilibria_json(capsys, n, beta, count):
    code, out, _ = run(capsys, "equilibria", "--n", str(n), "--beta", beta)
    d = json.loads(out)
    assert code == 0 and d["count"] == count == len(d["equilibria"])
    assert d["maxwell_bound"] == (n - 1) ** 2
    assert set(d["equilibria"][0]) == {"r", "theta", "type", "residual"}


def test_equilibria_csv(capsys):
    code, out, _ = run(capsys, "equilibria", "--n", "3", "--beta", "0.5", "--format", "csv")
    rows = list(csv.reader(out.splitlines()))
    assert rows[0] == ["n", "beta", "r", "theta", "type", "residual"]
    assert len(rows) == 5 and rows[1][4] == "minimum"
    assert "\r" not in out


def test_equilibria_numerical_failure(capsys):
    assert run(capsys, "equilibria", "--n", "12", "--beta", "5", "--tol", "1e-30")[0] == 3


def test_scan_beta(tmp_path, capsys):
    out = tmp_path / "b.csv"
    code, _, _ = run(capsys, "scan", "--mode", "beta", "--n", "3", "--from", "0.1", "--to", "0.9",
                     "--steps", "9", "--out", str(out))
    assert code == 0
    rows = list(csv.DictReader(out.read_text().splitlines()))
    assert len(rows) == 9
    assert rows[2]["beta"] == "0.3"
    rs = [float(r["r_star"]) for r in rows]
    assert all(b > a for a, b in zip(rs, rs[1:]))
    assert os.listdir(tmp_path) == ["b.csv"]


def test_scan_n(tmp_path, capsys):
    out = tmp_path / "n.csv"
    assert run(capsys, "scan", "--mode", "n", "--beta", "0.5", "--list", "3,4,8,16,32,64", "--out", str(out))[0] == 0
    rows = list(csv.DictReader(out.read_text().splitlines()))
    assert float(rows[-1]["r_star"]) > 0.9246
    assert list(rows[0]) == ["n", "beta", "r_star", "roots_per_bisector", "r_lower", "r_upper", "residual"]


def test_scan_continuation_footer(tmp_path, capsys):
    out = tmp_path / "c.csv"
    assert run(capsys, "scan", "--mode", "continuation", "--n", "3", "--half-width", "0.1", "--step", "0.01",
               "--out", str(out))[0] == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 1 + 21 + 1
    assert lines[-1].startswith("# uniform_count=true")


def test_scan_bad_grid_leaves_no_file(tmp_path, capsys):
    out = tmp_path / "x.csv"
    assert run(capsys, "scan", "--mode", "beta", "--n", "3", "--out", str(out))[0] == 2
    assert run(capsys, "scan", "--mode", "beta", "--n", "3", "--list", "0.5,abc", "--out", str(out))[0] == 2
    assert run(capsys, "scan", "--mode", "beta", "--n", "3", "--from", "0.1", "--to", "0.5", "--steps", "0",
               "--out", str(out))[0] == 2
    assert not out.exists() and os.listdir(tmp_path) == []


def test_scan_solver_failure_leaves_no_file(tmp_path, capsys, monkeypatch):
    import riesz_equilibria.cli as cli
    from riesz_equilibria.errors import InconsistencyError

    def boom(*a, **k):
        raise InconsistencyError("forced")

    monkeypatch.setattr(cli, "sweep_beta", boom)
    out = tmp_path / "x.csv"
    assert run(capsys, "scan", "--mode", "beta", "--n", "3", "--list", "0.5", "--out", str(out))[0] == 3
    assert os.listdir(tmp_path) == []


def test_verify_beta1_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "beta1")
    assert code == 0
    assert all(line.startswith("PASS ") for line in out.splitlines())


def test_verify_examples_warns(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "examples")
    assert code == 0
    warns = [line for line in out.splitlines() if line.startswith("WARN ")]
    assert len(warns) == 1 and "printed-polynomial" in warns[0]
    assert all(len(line.split(" ")) == 4 for line in out.splitlines())


def test_output_is_byte_identical():
    cmd = [sys.executable, "-m", "riesz_equilibria", "equilibria", "--n", "5", "--beta", "0.7"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and b"\r" not in a
