import io
import json
import subprocess
import sys

import pytest

from milnorreg.cli import EXIT_ERROR, EXIT_OK, EXIT_VERIFY, JACOBIAN_DIRECTIVE, main


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_gb(capsys):
    code, out, _ = run(["gb", "x0^2+x1*x2", "x0*x1", "x1^3"], capsys)
    assert code == EXIT_OK
    assert "x1^3" in out


def test_gb_json_has_config(capsys):
    code, out, _ = run(["gb", "x0*x1", "--format", "json", "--seed", "5"], capsys)
    data = json.loads(out)
    assert data["config"]["seed"] == 5 and data["config"]["field"]


def test_hilbert_jacobian(capsys):
    code, out, _ = run(["hilbert", "--jacobian", "x0^3+x1^3+x2^3+x3^3"], capsys)
    assert code == EXIT_OK
    assert "= 1 4 6 4 1 0 0" in out and "st = 5" in out


def test_resolve_jacobian(capsys):
    code, out, _ = run(["resolve", "--jacobian", "x0^3+x1^3+x2^3+x3^3"], capsys)
    assert code == EXIT_OK
    assert "reg = 4" in out and "pd = 4" in out


def test_milnor_report_text_and_json(capsys):
    code, out, _ = run(["milnor-report", "x0^3+x1^3+x2^3+x3^3"], capsys)
    assert code == EXIT_OK and "reg = 4" in out and "st = 5" in out
    code, out, _ = run(["milnor-report", "--format", "json", "x0^3+x1^3+x2^3+x3^3"], capsys)
    data = json.loads(out)
    assert data["reg"] == 4 and data["st"] == 5 and data["T"] == 4
    assert data["isolated_bounds"]["ok"]


def test_milnor_report_strict_ok(capsys):
    code, _, _ = run(["milnor-report", "--strict", "x0*x1*x2*x3"], capsys)
    assert code == EXIT_OK


def test_free_classification_in_report(capsys):
    code, out, _ = run(["milnor-report", "--format", "json", "x0*x1*x2*x3"], capsys)
    assert json.loads(out)["freeness"] == {"kind": "free", "exponents": [1, 1, 1]}


def test_family_output_has_directive(capsys):
    code, out, _ = run(["family", "arrangement", "--d", "5"], capsys)
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert JACOBIAN_DIRECTIVE in lines and not lines[-1].startswith("#")


def test_family_pipe_into_resolve(capsys, monkeypatch):
    _, out, _ = run(["family", "arrangement", "--d", "5"], capsys)
    code, out2, _ = run(["resolve"], capsys, stdin=out, monkeypatch=monkeypatch)
    assert code == EXIT_OK and "reg = 4" in out2


def test_determinantal_pipe_keeps_names(capsys, monkeypatch):
    _, out, _ = run(["family", "determinantal", "--symmetric"], capsys)
    assert "variables: x00,x01,x02,x11,x12,x22" in out
    code, out2, _ = run(["resolve", "--format", "json"], capsys, stdin=out, monkeypatch=monkeypatch)
    assert code == EXIT_OK and json.loads(out2)["reg"] == 1


def test_cone_family(capsys):
    code, out, _ = run(["family", "cone", "--g", "x0^3+x1^3+x2^3"], capsys)
    assert out.strip().splitlines()[-1] == "x1^3 + x2^3 + x3^3"


def test_bigraded_syzygy(capsys):
    code, out, _ = run(["bigraded-syzygy", "--k", "2", "--d", "5", "--check-resolution"], capsys)
    assert code == EXIT_OK
    assert "bidegree = (8, 3)" in out and "[((2, 3), 1), ((8, 3), 1)]" in out and "match: True" in out


def test_bigraded_syzygy_degenerate_exits_2(capsys):
    code, _, err = run(["bigraded-syzygy", "--poly", "x0*x2^5 + x1*x3^5"], capsys)
    assert code == EXIT_VERIFY and "verification failed" in err


def test_syntax_error_exit_1(capsys):
    code, _, err = run(["gb", "x0^2 +"], capsys)
    assert code == EXIT_ERROR and err.startswith("syntax error")


def test_bad_input_exit_1(capsys):
    code, _, err = run(["milnor-report", "x0^3+x1"], capsys)
    assert code == EXIT_ERROR


def test_verify_single_item(capsys):
    code, out, _ = run(["verify", "--items", "1"], capsys)
    assert code == EXIT_OK and "[PASS] 1." in out


def test_verify_failing_item_exits_2(capsys):
    code, out, _ = run(["verify", "--items", "6"], capsys)
    assert code == EXIT_VERIFY and "[FAIL] 6." in out


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "milnorreg", "milnor-report", "x0^3+x1^3+x2^3+x3^3"], capture_output=True, text=True)
    assert p.returncode == 0 and "reg = 4" in p.stdout
