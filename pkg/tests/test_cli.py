import math
import os
import subprocess
import sys

import pytest

from planar3b import cli
from planar3b.errors import ConfigError
from planar3b.potentials import Branch


def run_cli(args, env_extra=None, cwd=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "planar3b.cli", *args],
        capture_output=True, text=True, env=env, cwd=cwd,
    )


# ------------------------------------------------------------- config parsing

def test_default_config_round_trip(tmp_path):
    cfg = cli.default_config()
    assert cfg.twobody.a0 == 10.0 and cfg.twobody.a1 == 100.0
    assert cfg.nu0_value == cfg.masses.nu0


def test_load_config_file(tmp_path):
    path = tmp_path / "run.ini"
    path.write_text(
        "[masses]\nm = 1.0\nM = 40.0\n"
        "[twobody]\na0 = 8.0\na1 = 200.0\n"
        "[wkb]\ntheta = 0.5\nphase_mode = full\n"
        "[sweep]\nr_min = 2.0\nr_max = 30.0\npoints = 50\nlog = true\n"
        "[output]\ndir = somewhere\n"
    )
    cfg = cli.load_config(str(path))
    assert cfg.masses.M == 40.0
    assert cfg.twobody.a0 == 8.0 and cfg.twobody.a1 == pytest.approx(200.0)
    assert cfg.wkb.theta == 0.5 and cfg.wkb.phase_mode == "full"
    assert cfg.sweep.points == 50
    assert cfg.output_dir == "somewhere"


def test_load_config_missing_file():
    with pytest.raises(ConfigError):
        cli.load_config("/nonexistent/path.ini")


def test_load_config_invalid_values(tmp_path):
    path = tmp_path / "bad.ini"
    path.write_text("[twobody]\na0 = -3.0\n")
    with pytest.raises(ConfigError):
        cli.load_config(str(path))


def test_config_hash_stable():
    assert cli.default_config().config_hash() == cli.default_config().config_hash()
    other = cli.default_config()
    other.nu0 = 77.0
    assert other.config_hash() != cli.default_config().config_hash()


# ------------------------------------------------------------- commands

def test_cmd_potentials_outputs(tmp_path):
    cfg = cli.default_config()
    cfg.output_dir = str(tmp_path)
    curves = cli.cmd_potentials(cfg, [Branch.SWAVE_PLUS, Branch.PWAVE_I_ZERO])
    assert set(curves) == {Branch.SWAVE_PLUS, Branch.PWAVE_I_ZERO}
    text = (tmp_path / "potential_s_plus.csv").read_text().splitlines()
    assert text[0].startswith("# planar3b 0.1.") and "potentials" in text[0]
    assert text[1] == "R,V,branch,converged,residual"
    assert len(text) == 2 + 400


def test_cmd_potentials_unconverged_rows_empty(tmp_path):
    cfg = cli.default_config()
    cfg.output_dir = str(tmp_path)
    cfg.sweep = cli.SweepConfig(r_min=0.5, r_max=3.0, points=7, log=False)
    cli.cmd_potentials(cfg, [Branch.SWAVE_MINUS])
    rows = (tmp_path / "potential_s_minus.csv").read_text().splitlines()[2:]
    first = rows[0].split(",")
    assert first[1] == "" and first[3] == "false" and first[4] == ""
    last = rows[-1].split(",")
    assert last[3] == "true" and float(last[1]) < 0


def test_cmd_spectrum_summary(tmp_path):
    cfg = cli.default_config()
    cfg.output_dir = str(tmp_path)
    spec = cli.cmd_spectrum(cfg, 12, mass_ratio=0.1)
    lines = (tmp_path / "spectrum.csv").read_text().splitlines()
    assert lines[1].startswith("# nu0 = 10.5")
    assert lines[2].startswith("# fit E0_fit=")
    assert lines[3] == "n,rho_n,E_n,ratio_next"
    nu0 = 10.5
    rows = [line.split(",") for line in lines[4:]]
    assert rows[-1][3] == ""  # no next level for the last row
    n3 = float(rows[2][0])
    ratio3 = float(rows[2][3])
    want = math.exp(-math.pi**2 * (n3 + 0.5) / nu0) * (n3 / (n3 + 1.0)) ** 2
    assert ratio3 == pytest.approx(want, rel=1e-12)


def test_cmd_resonances_with_cross_section(tmp_path, capsys):
    cfg = cli.default_config()
    cfg.nu0 = 100.0
    cfg.output_dir = str(tmp_path)
    cli.cmd_resonances(cfg, 5, k=1e-4)
    lines = (tmp_path / "resonances.csv").read_text().splitlines()
    assert lines[1] == "n,a1_n_exact,a1_n_asymptotic,A0_midpoint,sigma0_at_k"
    row = lines[2].split(",")
    assert float(row[1]) == pytest.approx(2.0 * math.exp(math.pi**2 * 2.25 / 200.0), rel=1e-12)
    assert float(row[4]) > 0


def test_cmd_wavefunction(tmp_path):
    cfg = cli.default_config()
    cfg.output_dir = str(tmp_path)
    root = cli.cmd_wavefunction(cfg, "I", +1, 10.0, 12.0, 11)
    lines = (tmp_path / "wavefunction_I_plus.csv").read_text().splitlines()
    assert lines[2] == "x,y,psi"
    assert len(lines) == 3 + 11 * 11
    assert root.converged


# ------------------------------------------------------------- subprocess level

def test_cli_exit_codes_and_env(tmp_path):
    out = tmp_path / "envdir"
    r = run_cli(["potentials", "--branch", "s+"], env_extra={"PLANAR3B_OUTPUT": str(out)})
    assert r.returncode == 0, r.stderr
    assert (out / "potential_s_plus.csv").exists()

    r = run_cli(["potentials", "--branch", "bogus", "--output", str(tmp_path)])
    assert r.returncode == 2
    assert "unknown branch" in r.stderr

    r = run_cli(["--version"])
    assert r.returncode == 0 and "planar3b" in r.stdout


def test_cli_byte_identical_outputs(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for out, jobs in ((a, "1"), (b, "2")):
        r = run_cli(["potentials", "--branch", "s+,I0", "--output", str(out),
                     "--jobs", jobs])
        assert r.returncode == 0, r.stderr
    for name in ("potential_s_plus.csv", "potential_I0.csv"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_cli_validate_corrupted_tolerance(tmp_path):
    ini = tmp_path / "bad_tol.ini"
    ini.write_text("[wkb]\nquad_tol = 1.0\n")
    r = run_cli(["validate", "--config", str(ini), "--only", "wkb"])
    assert r.returncode == 1
    assert "phi_correction" in r.stdout and "FAIL" in r.stdout


def test_cli_validate_only_specfun():
    r = run_cli(["validate", "--only", "specfun"])
    assert r.returncode == 0, r.stdout + r.stderr
    assert "specfun_oracle" in r.stdout
    assert "swave_branches" not in r.stdout


def test_cli_validate_unknown_module():
    r = run_cli(["validate", "--only", "nonsense"])
    assert r.returncode == 2


def test_cli_spectrum_too_few_levels(tmp_path):
    # an R_max cap tight enough to strangle the spectrum -> solver failure (3)
    ini = tmp_path / "cap.ini"
    ini.write_text("[model]\nnu0 = 2.0\n[wkb]\nr_max = 10.0\n")
    r = run_cli(["spectrum", "--config", str(ini), "--output", str(tmp_path)])
    assert r.returncode == 3
    assert "solver failure" in r.stderr


def test_spectrum_slope_invariant_under_theta(tmp_path):
    # shifting the short-range phase moves every rho_n but leaves the fitted
    # Gaussian-cutoff slope within the acceptance band (on the n = 5..25
    # regression window of the spectrum-law criterion)
    from planar3b import wkb

    cfg = cli.default_config()
    cfg.nu0 = 500.0
    cfg.output_dir = str(tmp_path)
    slopes, rhos = [], []
    for theta in (-math.pi / 2, 0.0, math.pi / 2):
        cfg.wkb = cli.WkbConfig(theta=theta)
        spec = cli.cmd_spectrum(cfg, 25)
        rhos.append(spec.levels[9][1])
        window = wkb.quantize_spectrum((5, 25), 500.0, cfg.wkb)
        slopes.append(window.slope_fit)
    theory = -math.pi**2 / (2.0 * 500.0)
    assert all(abs(s / theory - 1.0) < 0.02 for s in slopes)
    # larger theta shrinks (pi n - theta)^2, so rho_n decreases with theta
    assert rhos[0] > rhos[1] > rhos[2]
