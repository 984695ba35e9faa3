from pathlib import Path

from mtckit import cli

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_vec(capsys):
    code, out, _ = run(capsys, "validate", "catalog:vec")
    assert code == 0
    assert "pass  S unitary" in out


def test_validate_structured_schema(capsys):
    code, out, _ = run(capsys, "validate", "catalog:toric-code", "--format", "structured")
    assert code == 0
    assert out.startswith("mtckit-report 1\nkind: validation\nok: yes\n")


def test_report_haagerup_sigma_x6(capsys):
    code, out, _ = run(
        capsys, "report", "catalog:haagerup-center", "--braid-sigma", "--object", "x6"
    )
    assert code == 0
    assert "x6     | (e^(i*pi*1/3), -e^(i*pi*1/3))     | (0, 2)" in out
    assert "x10    | (e^(i*pi*2/39), -e^(i*pi*2/39))   | (0, 1)" in out
    assert out.count("\n") == 15  # title + header + rule + 12 rows


def test_report_structured_matches_golden(capsys):
    code, out, _ = run(
        capsys,
        "report", "catalog:haagerup-center", "--braid-sigma", "--object", "x6",
        "--format", "structured",
    )
    assert code == 0
    assert out == (GOLDEN / "haagerup_sigma_x6.txt").read_text()


def test_byte_determinism(capsys):
    args = ("report", "catalog:toric-code", "--braid-sigma-triple", "--object", "f")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_object_by_index_matches_label(capsys):
    _, by_label, _ = run(capsys, "report", "catalog:haagerup-center", "--braid-sigma", "--object", "x6")
    _, by_index, _ = run(capsys, "report", "catalog:haagerup-center", "--braid-sigma", "--object", "6")
    assert by_label == by_index


def test_fusion_pair(capsys):
    code, out, _ = run(capsys, "fusion", "catalog:toric-code", "--object", "e", "--object", "m")
    assert code == 0
    assert out == "e (x) m = f\n"


def test_fusion_full_table_structured(capsys):
    code, out, _ = run(capsys, "fusion", "catalog:semion", "--format", "structured")
    assert code == 0
    assert out.startswith("mtckit-report 1\nkind: fusion\n")
    assert "fuse s s: 1:1" in out


def test_fusion_haagerup_x6(capsys):
    code, out, _ = run(capsys, "fusion", "catalog:haagerup-center", "--object", "x6", "--object", "x6")
    assert code == 0
    assert out == "x6 (x) x6 = x1 + 2*x2 + x3 + x4 + x5 + 2*x6 + x7 + x8 + x9 + x10 + x11 + x12\n"


def test_indicators_table(capsys):
    code, out, _ = run(capsys, "indicators", "catalog:semion", "--m", "2", "--l", "1")
    assert code == 0
    assert "(1,1): 1, -1" in out


def test_indicators_structured(capsys):
    code, out, _ = run(
        capsys, "indicators", "catalog:toric-code", "--m", "1", "--l", "0",
        "--format", "structured",
    )
    assert code == 0
    assert out.startswith("mtckit-report 1\nkind: indicator-table\n")


def test_rotation_single_row(capsys):
    code, out, _ = run(
        capsys, "rotation", "catalog:toric-code", "--object", "e", "--n", "2",
        "--b", "1,1",
    )
    assert code == 0
    assert "(1, -1)" in out and "(1, 0)" in out


def test_rotation_all_rows_structured(capsys):
    code, out, _ = run(
        capsys, "rotation", "catalog:semion", "--object", "s", "--n", "2",
        "--format", "structured",
    )
    assert code == 0
    assert out.startswith("mtckit-report 1\nkind: rotation\n")
    assert "rows: 4" in out


def test_braid_toric(capsys):
    code, out, _ = run(capsys, "braid", "catalog:toric-code", "--object", "e", "--n", "2")
    assert code == 0
    assert "braid-jm" in out
    # one eigenvalue with multiplicity 1 on the unit row, zero rows elsewhere
    assert "1      | (1, -1)" in out


def test_braid_under_flag(capsys):
    code_over, over, _ = run(capsys, "braid", "catalog:semion", "--object", "s", "--n", "2")
    code_under, under, _ = run(
        capsys, "braid", "catalog:semion", "--object", "s", "--n", "2", "--under"
    )
    assert code_over == code_under == 0
    assert over != under


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "report.txt"
    code, out, _ = run(
        capsys, "validate", "catalog:vec", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert "pass  S unitary" in target.read_text()


def test_unknown_catalog_is_usage_error(capsys):
    code, _, err = run(capsys, "validate", "catalog:ising")
    assert code == 2
    assert "unknown catalog" in err


def test_bad_file_syntax_is_usage_error(tmp_path, capsys):
    path = tmp_path / "bad.mtc"
    path.write_text("rank 1\nS:\n1//\nT:\n1\n")
    code, _, err = run(capsys, "validate", str(path))
    assert code == 2


def test_failing_relations_exit_one(tmp_path, capsys):
    from mtckit import dataio

    md = dataio.catalog("toric-code")
    text = dataio.format_modular_data(md).replace("T:\n1, 1, 1, -1", "T:\n1, -1, -1, 1")
    path = tmp_path / "broken.mtc"
    path.write_text(text)
    code, _, err = run(capsys, "validate", str(path))
    assert code == 1
    assert "validation failed" in err


def test_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "validate", "no/such/file.mtc")
    assert code == 2


def test_bad_braid_params(capsys):
    code, _, err = run(
        capsys, "braid", "catalog:vec", "--object", "1", "--n", "2", "--l", "1", "--m", "1"
    )
    assert code == 2


def test_unknown_object(capsys):
    code, _, err = run(capsys, "report", "catalog:vec", "--braid-sigma", "--object", "zz")
    assert code == 1 or code == 2  # ModularDataError maps to validation class
