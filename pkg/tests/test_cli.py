import csv
import io
import json
import math

import pytest

from debye_casimir import cli, thermo

LN2M1 = 2.0 * math.log(2.0) - 1.0


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    return json.loads(out)


def test_force_reduced_contact(capsys):
    code, out, _ = run(capsys, "force", "--x", "0", "--reduced")
    assert code == 0
    assert "I_f = 0.0833333" in out
    d = run_json(capsys, "force", "--x", "0", "--reduced")
    assert d["reduced_kernels"]["I_f"] == pytest.approx(1.0 / 12.0, rel=1e-8)
    assert d["values"]["f_reduced"] == pytest.approx(-d["reduced_kernels"]["I_f"] / (2.0 * math.pi), rel=1e-15)


def test_json_fields(capsys):
    d = run_json(capsys, "energy", "--x", "1")
    assert set(d) == {"inputs", "reduced_kernels", "values", "quadrature"}
    assert set(d["quadrature"]) == {"rel_tol", "error_estimate"}


def test_entropy_contact(capsys):
    d = run_json(capsys, "entropy", "--x", "0", "--reduced")
    assert d["values"]["S_reduced"] == 0.0


def test_force_dimensional(capsys):
    d = run_json(capsys, "force", "--kappa", "1", "--beta", "1", "--a", "0")
    assert d["values"]["f"] == pytest.approx(-1.0 / (24.0 * math.pi), rel=1e-8)


def test_reduced_and_dimensional_agree(capsys):
    kappa, beta, a = 3.0, 2.0, 0.25
    dim = run_json(capsys, "energy", "--kappa", str(kappa), "--beta", str(beta), "--a", str(a))
    red = run_json(capsys, "energy", "--x", str(kappa * a))
    assert dim["values"]["F_c"] == pytest.approx(red["values"]["F_reduced"] * kappa**2 / beta, rel=1e-14)
    assert dim["values"]["U_c"] == pytest.approx(red["values"]["U_reduced"] * kappa**2 / beta, rel=1e-14)
    dim = run_json(capsys, "force", "--kappa", str(kappa), "--beta", str(beta), "--a", str(a))
    red = run_json(capsys, "force", "--x", str(kappa * a))
    assert dim["values"]["f"] == pytest.approx(red["values"]["f_reduced"] * kappa**3 / beta, rel=1e-14)
    dim = run_json(capsys, "entropy", "--kappa", str(kappa), "--beta", str(beta), "--a", str(a))
    red = run_json(capsys, "entropy", "--x", str(kappa * a))
    assert dim["values"]["S_c"] == pytest.approx(red["values"]["S_reduced"] * thermo.K_B * kappa**2, rel=1e-14)


@pytest.mark.parametrize("argv", [
    ("force", "--x", "1", "--kappa", "1"),
    ("force", "--kappa", "1", "--beta", "1"),
    ("force",),
    ("force", "--x", "-1"),
    ("energy", "--kappa", "1", "--beta", "1", "--a", "1", "--reduced"),
    ("entropy", "--kappa", "-1", "--beta", "1", "--a", "1"),
    ("surface", "--x", "1", "--d", "0"),
    ("cutoff", "--epsilon-minus-1", "0.01", "--sigma", "0"),
    ("sweep", "--x-min", "0", "--x-max", "1", "--spacing", "log"),
    ("sweep", "--x-min", "1", "--x-max", "1"),
    ("sweep", "--x-min", "0", "--x-max", "1", "--points", "1"),
    ("sweep", "--x-min", "0", "--x-max", "1", "--outputs", "bogus"),
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_argparse_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["force", "--nope"])
    assert info.value.code == 2


def test_surface_command(capsys):
    d = run_json(capsys, "surface", "--x", "1")
    assert d["values"]["two_dU_a"] == pytest.approx(d["values"]["U_c"], rel=1e-8)
    assert d["values"]["U_inf"] == pytest.approx(LN2M1 / (32.0 * math.pi), rel=1e-8)


def test_cutoff_command(capsys):
    d = run_json(capsys, "cutoff", "--epsilon-minus-1", "0.01", "--sigma", "73")
    assert d["values"]["tau_c_angstrom"] == pytest.approx(0.75, abs=0.01)
    assert d["values"]["tau_s"] == pytest.approx(2.5e-19, rel=0.02)
    d8 = run_json(capsys, "cutoff", "--epsilon-minus-1", "0.01", "--sigma", str(8 * 73))
    assert d8["values"]["tau_c_cm"] == pytest.approx(0.5 * d["values"]["tau_c_cm"], rel=1e-14)


def _read_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


def test_sweep_log(capsys):
    code, out, _ = run(capsys, "sweep", "--x-min", "0.1", "--x-max", "10", "--points", "5", "--spacing", "log")
    assert code == 0
    header, rows = _read_csv(out)
    assert header == list(cli.CSV_COLUMNS)
    assert len(rows) == 5
    i_f = [float(r[1]) for r in rows]
    assert all(a > b for a, b in zip(i_f, i_f[1:]))


def test_sweep_endpoints(capsys):
    code, out, _ = run(capsys, "sweep", "--x-min", "0", "--x-max", "2", "--points", "2")
    _, rows = _read_csv(out)
    assert [float(r[0]) for r in rows] == [0.0, 2.0]


def test_sweep_csv_roundtrip(tmp_path, capsys):
    path = tmp_path / "sweep.csv"
    code, _, _ = run(capsys, "sweep", "--x-min", "0", "--x-max", "3", "--points", "4", "--out", str(path))
    assert code == 0
    header, rows = _read_csv(path.read_text())
    spec = cli.QuadratureSpec()
    for r in rows:
        ref = cli.reduced_row(float(r[0]), spec)
        for name, text in zip(header, r):
            assert float(text) == ref[name]
            digits = text.lstrip("-").split("e")[0].replace(".", "").lstrip("0")
            assert len(digits) <= 17


def test_sweep_output_subset(capsys):
    code, out, _ = run(capsys, "sweep", "--x-min", "1", "--x-max", "2", "--points", "3", "--outputs", "S_c,f")
    header, rows = _read_csv(out)
    assert header == ["x", "f_red", "S_red"]


def test_sweep_parallel_order(capsys):
    args = ("sweep", "--x-min", "0", "--x-max", "5", "--points", "12")
    _, serial, _ = run(capsys, *args)
    _, parallel, _ = run(capsys, *args, "--jobs", "4")
    assert serial == parallel


def test_sweep_unwritable(tmp_path, capsys):
    code, _, err = run(capsys, "sweep", "--x-min", "0", "--x-max", "1", "--points", "2",
                       "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 1
    assert "cannot write" in err


def test_sweep_values(capsys):
    _, out, _ = run(capsys, "sweep", "--x-min", "0", "--x-max", "1", "--points", "2")
    _, rows = _read_csv(out)
    first = dict(zip(cli.CSV_COLUMNS, map(float, rows[0])))
    assert first["I_f"] == pytest.approx(1.0 / 12.0, rel=1e-8)
    assert first["S_red"] == 0.0
    assert first["dU_surface_red"] == pytest.approx(first["U_red"] / 2.0, rel=1e-8)


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# sweep defaults\nx-min = 0.5\nx_max = 1.5\npoints = 3\nspacing = log\n")
    code, out, _ = run(capsys, "sweep", "--config", str(cfg))
    assert code == 0
    _, rows = _read_csv(out)
    assert [float(r[0]) for r in rows] == pytest.approx([0.5, math.sqrt(0.75), 1.5])
    # flags override the file
    code, out, _ = run(capsys, "sweep", "--config", str(cfg), "--points", "2")
    assert len(_read_csv(out)[1]) == 2


def test_config_json_flag(tmp_path, capsys):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("x = 0\njson = true\n")
    code, out, _ = run(capsys, "force", "--config", str(cfg))
    assert json.loads(out)["reduced_kernels"]["I_f"] == pytest.approx(1.0 / 12.0, rel=1e-8)


@pytest.mark.parametrize("text", ["colour = blue\n", "no equals sign\n"])
def test_config_errors(tmp_path, text):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text(text)
    with pytest.raises(SystemExit) as info:
        cli.main(["force", "--x", "1", "--config", str(cfg)])
    assert info.value.code == 2


def test_config_missing(tmp_path):
    with pytest.raises(SystemExit) as info:
        cli.main(["force", "--x", "1", "--config", str(tmp_path / "nope.cfg")])
    assert info.value.code == 2


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "surface_eq_casimir" in out
    assert "FAIL" not in out


def test_verify_impossible_tolerance(capsys):
    code, out, _ = run(capsys, "verify", "--rel-tol", "1e-30")
    assert code == 1
    assert "FAIL" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--json")
    d = json.loads(out)
    assert code == 0 and d["passed"]
    assert {"name", "expected", "got", "residual", "tol", "passed"} <= set(d["checks"][0])


def test_rel_tol_flag_reaches_quadrature(capsys):
    d = run_json(capsys, "force", "--x", "1", "--rel-tol", "1e-6", "--abs-tol", "1e-10")
    assert d["quadrature"]["rel_tol"] == 1e-6
    ref = thermo.kernel_force(1.0).value
    assert d["reduced_kernels"]["I_f"] == pytest.approx(ref, rel=1e-6)
