"""Command-line surface: frozen rows, exit codes, determinism, file output.

Frozen row strings reproduce the published packing table at the default
5-decimal precision; the optimizer line is stable because golden-section
search is deterministic for fixed tolerance.
"""

import math

import pytest

from hyperball import ConvergenceError
from hyperball.cli import EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, main

TABLE_ROW_7 = "7,0.78871,0.08856,0.07284,0.82251"
TABLE_ROW_100 = "100,0.03147,0.15241,0.01549,0.10165"
TABLE_HEADER = "p,h,vol_orthoscheme,vol_hyperball_piece,density"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_single_row(capsys):
    code, out, err = run(capsys, "table", "--p", "7")
    assert code == EXIT_OK
    assert err == ""
    assert out == f"{TABLE_HEADER}\n{TABLE_ROW_7}\n"


def test_table_published_rows(capsys):
    code, out, _ = run(capsys, "table", "--p", "7,8,9,20,50,100")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == TABLE_HEADER
    assert lines[1] == TABLE_ROW_7
    assert lines[-1] == TABLE_ROW_100
    assert len(lines) == 7


def test_table_empty_list(capsys):
    code, out, _ = run(capsys, "table", "--p", "")
    assert code == EXIT_OK
    assert out == f"{TABLE_HEADER}\n"


def test_table_preserves_input_order(capsys):
    code, out, _ = run(capsys, "table", "--p", "9,7")
    first_col = [line.split(",")[0] for line in out.splitlines()[1:]]
    assert code == EXIT_OK
    assert first_col == ["9", "7"]


def test_table_p_range(capsys):
    code, out, _ = run(capsys, "table", "--p-range", "7:9:1")
    first_col = [line.split(",")[0] for line in out.splitlines()[1:]]
    assert code == EXIT_OK
    assert first_col == ["7", "8", "9"]


def test_table_combines_list_and_range(capsys):
    code, out, _ = run(capsys, "table", "--p", "20", "--p-range", "7:8:1")
    first_col = [line.split(",")[0] for line in out.splitlines()[1:]]
    assert code == EXIT_OK
    assert first_col == ["20", "7", "8"]


def test_table_rejects_low_p_without_partial_output(capsys, tmp_path):
    target = tmp_path / "t.csv"
    code, out, err = run(
        capsys, "table", "--p", "7,5", "--out", str(target)
    )
    assert code == EXIT_USAGE
    assert out == ""
    assert "5" in err
    assert not target.exists()


def test_table_determinism(capsys):
    outs = set()
    for _ in range(2):
        _, out, _ = run(capsys, "table", "--p", "7,8,9", "--precision", "11")
        outs.add(out)
    assert len(outs) == 1


def test_csv_well_formed(capsys):
    _, out, _ = run(capsys, "table", "--p-range", "6.5:10:0.5")
    lines = out.splitlines()
    assert all(line.count(",") == 4 for line in lines)
    assert "\r" not in out


def test_out_file_matches_stdout(capsys, tmp_path):
    target = tmp_path / "table.csv"
    code, out, _ = run(capsys, "table", "--p", "7,8")
    code2, out2, _ = run(capsys, "table", "--p", "7,8", "--out", str(target))
    assert code == code2 == EXIT_OK
    assert out2 == ""
    data = target.read_bytes()
    assert data.decode("utf-8") == out
    assert b"\r" not in data
    assert data.endswith(b"\n")


def test_curve_bounds(capsys):
    code, out, _ = run(capsys, "curve", "--from", "6.01", "--to", "7", "--samples", "2")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "p,density"
    assert len(lines) == 3
    for line in lines[1:]:
        density = float(line.split(",")[1])
        assert 0.0 < density < 1.0


def test_curve_maximum_near_optimum(capsys):
    code, out, _ = run(
        capsys,
        "curve", "--from", "6.01", "--to", "12", "--samples", "500",
        "--precision", "9",
    )
    assert code == EXIT_OK
    rows = [line.split(",") for line in out.splitlines()[1:]]
    best_p = max(rows, key=lambda r: float(r[1]))[0]
    step = (12.0 - 6.01) / 499.0
    assert abs(float(best_p) - 6.13499) <= step


def test_curve_continuity(capsys):
    code, out, _ = run(
        capsys, "curve", "--from", "7", "--to", "7.0001", "--samples", "2"
    )
    assert code == EXIT_OK
    d1, d2 = (float(line.split(",")[1]) for line in out.splitlines()[1:])
    assert abs(d1 - 0.82251) <= 1e-4
    assert abs(d1 - d2) <= 1e-4


def test_curve_rejects_bad_range(capsys):
    code, _, err = run(capsys, "curve", "--from", "6", "--to", "7", "--samples", "2")
    assert code == EXIT_USAGE
    assert err != ""
    code, _, _ = run(capsys, "curve", "--from", "6.5", "--to", "7", "--samples", "1")
    assert code == EXIT_USAGE


def test_optimize_default(capsys):
    code, out, _ = run(capsys, "optimize")
    assert code == EXIT_OK
    fields = dict(tok.split("=") for tok in out.split())
    assert fields["p_opt"] == "6.13499"
    assert fields["delta_opt"] == "0.86338"
    assert int(fields["iterations"]) > 0


def test_optimize_precision_3(capsys):
    code, out, _ = run(capsys, "optimize", "--precision", "3")
    assert code == EXIT_OK
    assert out.startswith("p_opt=6.135 delta_opt=0.863 ")


def test_optimize_loose_tol(capsys):
    code, out, _ = run(capsys, "optimize", "--tol", "1e-2", "--precision", "9")
    assert code == EXIT_OK
    fields = dict(tok.split("=") for tok in out.split())
    assert abs(float(fields["p_opt"]) - 6.13499) <= 1e-2


def test_optimize_numeric_failure_exit_code(capsys, monkeypatch):
    def explode(tol):
        raise ConvergenceError("no bracket", bracket=(6.0, 12.0))

    monkeypatch.setattr("hyperball.cli.find_optimal_p", explode)
    code, out, err = run(capsys, "optimize")
    assert code == EXIT_NUMERIC
    assert out == ""
    assert "no bracket" in err


def test_volume_report(capsys):
    code, out, _ = run(capsys, "volume", "--p", "7")
    assert code == EXIT_OK
    fields = dict(line.split("=") for line in out.splitlines())
    assert list(fields) == [
        "p",
        "h",
        "vol_orthoscheme",
        "vol_tetra",
        "tri_area",
        "hexagon_area",
        "surface_area",
        "omega",
    ]
    assert fields["h"] == "0.78871"
    assert abs(float(fields["vol_tetra"]) - 24.0 * float(fields["vol_orthoscheme"])) <= 1e-3
    assert abs(float(fields["surface_area"]) - 32.0 * math.pi / 7.0) <= 1e-4


def test_volume_rejects_low_p(capsys):
    code, _, err = run(capsys, "volume", "--p", "6")
    assert code == EXIT_USAGE
    assert "6" in err


def test_lob_values(capsys):
    for arg, expected in (
        ("0", "0.00000"),
        (str(math.pi / 2.0), "0.00000"),
        (str(math.pi / 6.0), "0.50747"),
    ):
        code, out, _ = run(capsys, "lob", arg)
        assert code == EXIT_OK
        assert out == expected + "\n"


def test_lob_rejects_nonfinite(capsys):
    code, _, err = run(capsys, "lob", "inf")
    assert code == EXIT_USAGE
    assert err != ""


def test_precision_out_of_range(capsys):
    code, _, _ = run(capsys, "table", "--p", "7", "--precision", "0")
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "table", "--p", "7", "--precision", "16")
    assert code == EXIT_USAGE


def test_missing_subcommand_exits_2():
    with pytest.raises(SystemExit) as excinfo:
        main([])
    assert excinfo.value.code == 2
