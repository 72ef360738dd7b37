"""Command line interface."""

import subprocess
import sys

import pytest

from fitlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_s3(capsys):
    code, out, _ = run_cli(capsys, "info", "--group", "S3")
    assert code == 0
    assert "group S3" in out
    assert "order 6" in out
    assert "soluble yes" in out
    assert "h = 2" in out
    assert "h* = 2" in out
    assert "h~ = 2" in out
    assert "lambda_2 = 0" in out


def test_info_unbounded_height(capsys):
    code, out, _ = run_cli(capsys, "info", "--group", "A5")
    assert code == 0
    assert "soluble no" in out
    assert "h = inf" in out
    assert "h* = 1" in out
    assert "lambda_5 = 1" in out


def test_info_htilde_over_cap(capsys):
    code, out, _ = run_cli(
        capsys, "info", "--group", "PSL(2,7)", "--lattice-cap", "60"
    )
    assert code == 0
    assert "h~ = n/a (lattice cap)" in out


def test_info_custom_primes(capsys):
    code, out, _ = run_cli(capsys, "info", "--group", "S3", "--primes", "2,3")
    assert code == 0
    assert "lambda_3 = 0" in out
    assert "lambda_5" not in out


def test_series_fstar_s4(capsys):
    code, out, _ = run_cli(
        capsys, "series", "--group", "S4", "--functorial", "Fstar"
    )
    assert code == 0
    assert "series Fstar on S4" in out
    assert "term 0 order 1" in out
    assert "term 3 order 24" in out
    assert "height 3" in out


def test_series_stalls(capsys):
    code, out, _ = run_cli(capsys, "series", "--group", "A5", "--functorial", "Fit")
    assert code == 0
    assert "height inf (stalled)" in out


def test_factorize_s3_mutually(capsys):
    code, out, _ = run_cli(capsys, "factorize", "--group", "S3", "--mutually")
    assert code == 0
    assert "factorizations of S3 mode mutually: 3" in out
    assert "(order 3)" in out and "(order 2)" in out
    assert "mutually" in out and "totally" in out


def test_factorize_default_mode(capsys):
    code, out, _ = run_cli(capsys, "factorize", "--group", "C6")
    assert code == 0
    assert "mode all" in out


def test_corpus_listing(capsys):
    code, out, _ = run_cli(capsys, "corpus", "--order-cap", "60")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "total 125"
    assert "S3 6" in out


def test_verify_small_clean(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--theorem", "thm1.2.1", "--order-cap", "24"
    )
    assert code == 0
    assert "STATUS fail" not in out
    assert out.rstrip().splitlines()[-1].startswith("SUMMARY ")


def test_verify_mutation_fails(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--theorem", "thm1.2.1", "--order-cap", "24",
        "--mutate", "tight-bound",
    )
    assert code == 1
    assert "STATUS fail" in out


def test_verify_report_and_figures(capsys, tmp_path):
    report = tmp_path / "report.txt"
    code, out, err = run_cli(
        capsys,
        "verify", "--theorem", "lem2.2", "--order-cap", "24",
        "--report", str(report),
    )
    assert code == 0
    assert report.exists()
    text = report.read_text(encoding="utf-8")
    assert text.startswith("THEOREM lem2.2")
    # Only the summary is echoed; the full table lives in the file.
    assert out.strip().startswith("SUMMARY ")
    assert "figure" in err
    assert (tmp_path / "report-verdicts.png").exists()


def test_verify_unknown_theorem(capsys):
    code, _, err = run_cli(capsys, "verify", "--theorem", "thm0.0")
    assert code == 2
    assert "fitlab:" in err


def test_unknown_group(capsys):
    code, _, err = run_cli(capsys, "info", "--group", "M11")
    assert code == 2
    assert "fitlab:" in err


def test_unwritable_report(capsys, tmp_path):
    code, _, err = run_cli(
        capsys,
        "verify", "--theorem", "lem2.2", "--order-cap", "12",
        "--report", str(tmp_path / "missing" / "report.txt"),
    )
    assert code == 2
    assert "fitlab:" in err


def test_group_file_input(capsys, tmp_path):
    path = tmp_path / "klein.grp"
    path.write_text("degree 4\ngen 2 1 4 3\ngen 3 4 1 2\n", encoding="utf-8")
    code, out, _ = run_cli(capsys, "info", "--group", f"file:{path}")
    assert code == 0
    assert "group klein" in out
    assert "order 4" in out


def test_lattice_cap_error_exit(capsys):
    code, _, err = run_cli(
        capsys, "factorize", "--group", "S5", "--lattice-cap", "60"
    )
    assert code == 2
    assert "lattice cap" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fitlab", "info", "--group", "S3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "h* = 2" in proc.stdout
