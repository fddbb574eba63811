import json
import math

import pytest

from localspec import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_minima_value(capsys):
    code, out, _ = run_cli(capsys, "minima", "--place", "real", "--component", "+")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "place,component,minimum"
    assert abs(float(lines[1].split(",")[2]) - (-5.3721834192256654)) < 1e-12


def test_gamma_point(capsys):
    code, out, _ = run_cli(
        capsys, "gamma", "--place", "real", "--component", "+", "--s", "0.5,0"
    )
    assert code == 0
    row = out.strip().split("\n")[1].split(",")
    assert abs(float(row[2]) - 1.0) < 1e-13 and abs(float(row[3])) < 1e-13


def test_spectral_table_first_row_zero(capsys):
    code, out, _ = run_cli(
        capsys,
        "spectral",
        "--op",
        "K",
        "--place",
        "finite:2",
        "--component",
        "unram",
        "--t",
        "0:3:4",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "t,re,im"
    assert len(lines) == 5
    first = lines[1].split(",")
    assert float(first[0]) == 0.0 and float(first[1]) == 0.0


def test_json_rows(capsys):
    code, out, _ = run_cli(
        capsys,
        "spectral",
        "--op",
        "H",
        "--place",
        "complex",
        "--component",
        "2",
        "--t",
        "0:1:2",
        "--format",
        "json",
    )
    assert code == 0
    rows = [json.loads(line) for line in out.strip().split("\n")]
    assert len(rows) == 2 and set(rows[0]) == {"t", "re", "im"}


def test_padic_matrix_entry(capsys):
    code, out, _ = run_cli(
        capsys, "padic", "--q", "2", "--op", "K", "--M", "4", "--emit", "matrix"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "j,k,re,im"
    row = next(l for l in lines if l.startswith("0,1,"))
    expected = -(math.log(2.0) ** 2) * 2.0**-0.5
    assert abs(float(row.split(",")[3]) - expected) < 1e-15


def test_padic_matrix_exact_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "padic", "--q", "2", "--op", "H", "--M", "2",
        "--emit", "matrix", "--format", "json",
    )
    assert code == 0
    blob = json.loads(out)
    ent = next(e for e in blob["entries"] if e["j"] == 0 and e["k"] == 1)
    assert ent["terms"][0]["c_re_num"] == "-1"
    assert ent["terms"][0]["a"] == 1 and ent["terms"][0]["b"] == -1


def test_padic_eigs_report(capsys):
    code, out, _ = run_cli(
        capsys, "padic", "--q", "2", "--op", "K", "--M", "32", "--emit", "eigs"
    )
    assert code == 0
    header, row = out.strip().split("\n")
    fields = dict(zip(header.split(","), map(float, row.split(","))))
    assert fields["symbol_min"] - 1e-8 <= fields["eig_min"]
    assert fields["eig_max"] <= fields["symbol_max"] + 1e-8
    assert abs(fields["leading_mode_amplitude"] - 2 * math.log(2) ** 2 / math.sqrt(2)) < 1e-12


def test_padic_range_and_symbol(capsys):
    code, out, _ = run_cli(
        capsys, "padic", "--q", "3", "--op", "H", "--emit", "range", "--format", "json"
    )
    assert code == 0
    blob = json.loads(out)
    assert abs(blob["min"] - (-2 * math.log(3) / (math.sqrt(3) - 1))) < 1e-8
    code, out, _ = run_cli(
        capsys,
        "padic", "--q", "2", "--op", "K", "--emit", "symbol", "--theta", "0:1:3",
    )
    assert code == 0
    assert out.startswith("theta,re,im\n0,0,")


def test_determinism(capsys):
    args = ("spectral", "--op", "K", "--place", "real", "--component", "+", "--t=-5:5:21")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2
    args = ("padic", "--q", "2", "--op", "K", "--M", "24", "--emit", "eigs")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_flag_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["spectral", "--op", "K"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["padic", "--q", "2", "--op", "K", "--emit", "bogus"])
    assert exc.value.code == 2
    # missing --s/--t is a usage error
    with pytest.raises(SystemExit) as exc:
        cli.main(["gamma", "--place", "real", "--component", "+"])
    assert exc.value.code == 2


def test_numeric_failure_exit_1(capsys):
    code, _, err = run_cli(
        capsys, "gamma", "--place", "real", "--component", "+", "--s", "0,0"
    )
    assert code == 1 and "error" in err
    code, _, err = run_cli(
        capsys, "spectral", "--op", "H", "--place", "finite:2", "--component", "ram",
        "--t", "0:1:2",
    )
    assert code == 1
    code, _, err = run_cli(
        capsys, "minima", "--place", "real", "--component", "x"
    )
    assert code == 1


def test_check_suite_specfun(capsys):
    code, out, _ = run_cli(capsys, "check", "--suite", "specfun")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out
    assert out.strip().split("\n")[-1].endswith("checks passed")
