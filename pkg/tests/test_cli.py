import csv
import io
import math

import pytest
from scipy import special

from disktrace import cli


def run(argv, capsys):
    code = cli.run(argv)
    out = capsys.readouterr()
    return code, list(csv.reader(io.StringIO(out.out))), out.err


def test_spectrum(capsys):
    code, rows, _ = run(["spectrum", "--t-max", "6.2", "--k-cap", "100"], capsys)
    assert code == 0
    assert rows[0] == ["k", "l", "length", "is_near_cluster"]
    assert rows[1][:3] == ["2", "1", "4"]


def test_zeros(capsys):
    code, rows, _ = run(["zeros", "--m-range", "1:5", "--n-range", "0:3"], capsys)
    assert code == 0 and len(rows) == 21
    assert rows[0] == ["m", "n", "rho", "beta", "alpha", "dm", "dn"]
    for r in rows[1:]:
        assert abs(special.jv(float(r[1]), float(r[2]))) <= 1e-9


def test_trace_and_poisson(capsys):
    code, rows, _ = run(["trace", "--t-range", "1:1.2:0.1", "--epsilon", "0.2"], capsys)
    assert code == 0 and len(rows) == 4 and rows[0][-1] == "terms"
    code, rows, _ = run(["poisson", "--k", "0:1", "--l", "1", "--t-range", "5",
                         "--epsilon", "0.2"], capsys)
    assert code == 0 and rows[0] == ["k", "l", "t", "re", "im", "est_error"]
    assert len(rows) == 3


def test_deterministic_bytes(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        assert cli.run(["-o", str(p), "trace", "--t-range", "2:3:0.25", "--epsilon", "0.1"]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert "2.5" in a.read_text()


def test_seventeen_digits():
    assert cli.fmt(math.pi) == "3.1415926535897931"
    assert cli.fmt(True) == "true" and cli.fmt(3) == "3"


@pytest.mark.parametrize("argv", [
    ["zeros", "--m-range", "x", "--n-range", "0"],
    ["spectrum"],
    ["verify", "--suite", "nonsense"],
    ["trace", "--t-range", "1", "--epsilon", "-1"],
    ["poisson", "--k", "0.5", "--l", "1", "--t-range", "6"],
])
def test_argument_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as e:
        cli.run(argv)
    assert e.value.code == 2


def test_domain_error_exit_2(capsys):
    code, _, err = run(["zeros", "--m-range", "0.2", "--n-range", "0"], capsys)
    assert code == 2 and "error" in err


def test_failed_verify_exits_1(capsys):
    code, rows, err = run(["verify", "--suite", "contours"], capsys)
    assert rows[0] == ["suite", "check_id", "measured", "threshold", "pass"]
    failed = [r for r in rows[1:] if r[4] == "false"]
    assert code == (1 if failed else 0)
    assert len(err.strip().splitlines()) == len(failed) if failed else err == ""
