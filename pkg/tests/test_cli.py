import io
import subprocess
import sys

import pytest

from dipolariton import cli
from dipolariton.output import read_csv

from conftest import ROOT


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def test_resonance_default():
    code, text = run("resonance")
    assert code == 0
    assert "closed-form F* = -5.75 kV/cm" in text
    assert "gap = 0.828 meV" in text


def test_resonance_other_detuning(tmp_path):
    conf = tmp_path / "c.conf"
    conf.write_text((ROOT / "configs" / "reference.conf").read_text().replace("delta_ix_dx_meV = -8.625", "delta_ix_dx_meV = 80"))
    code, text = run("resonance", "--config", str(conf))
    assert code == 0 and "closed-form F* = 53.3333333 kV/cm" in text


def test_sweep_writes_csv(tmp_path):
    code, text = run("sweep", "--outdir", str(tmp_path), "--out", "s.csv", "--labeling", "energy")
    assert code == 0
    meta, data = read_csv(tmp_path / "s.csv")
    assert len(data) == 801
    assert "labeling policy = energy" in meta and "mode = effective" in meta
    assert "trk_E_LP_meV" not in data[0]


def test_sweep_hermitian(tmp_path):
    code, _ = run("sweep", "--hermitian", "--out", str(tmp_path / "h.csv"))
    assert code == 0
    meta, data = read_csv(tmp_path / "h.csv")
    assert "mode = hermitian" in meta
    assert all(r["Gamma_MP_GHz"] == "0" for r in data)


def test_eigen_dump():
    code, text = run("eigen", "--f", "-5.75")
    assert code == 0
    for word in ("LP:", "MP:", "UP:", "residual", "BPD", "EDM", "tau", "regime"):
        assert word in text


def test_validate_passes():
    code, text = run("validate")
    assert code == 0
    assert "FAIL" not in text and text.count("PASS") == 8


def test_validate_failure_exit_code(monkeypatch):
    from dipolariton import checks

    monkeypatch.setattr(checks, "run_all", lambda p: [checks.CheckResult("x", False, "broken")])
    code, text = run("validate")
    assert code == 2 and "FAIL x" in text


def test_config_error_is_usage(tmp_path, capsys):
    bad = tmp_path / "bad.conf"
    bad.write_text("J = 1\n")
    code, _ = run("resonance", "--config", str(bad))
    assert code == 1
    assert "unit suffix" in capsys.readouterr().err


def test_numerical_failure_exit_code(monkeypatch, capsys):
    from dipolariton import sweep
    from dipolariton.spectral import NumericalError

    def boom(h):
        raise NumericalError("residual too large", residual=1.0)

    monkeypatch.setattr(sweep, "eig3", boom)
    code, _ = run("sweep", "--out", "/dev/null")
    assert code == 2
    assert "F = " in capsys.readouterr().err


@pytest.mark.parametrize("argv", [[], ["nope"], ["eigen"], ["sweep", "--labeling", "x"],
                                  ["sweep", "--hermitian", "--effective"]])
def test_usage_errors_exit_one(argv):
    with pytest.raises(SystemExit) as info:
        cli.main(argv)
    assert info.value.code == 1


def test_bad_workers():
    code, _ = run("sweep", "--workers", "0", "--out", "/dev/null")
    assert code == 1


def test_console_script_entry(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "dipolariton.cli", "resonance"], capture_output=True, text=True)
    assert proc.returncode == 0 and "-5.75" in proc.stdout
