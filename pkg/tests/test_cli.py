import csv
import io
import json
import subprocess
import sys

import pytest

from hpexp.cli import EXIT_CONSTRUCT, EXIT_OK, EXIT_REGION, EXIT_ROOTS, EXIT_SELFTEST, Grid, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_type1_zero_indices(capsys):
    code, out, _ = run(capsys, "construct", "--type", "type1", "--indices", "0,0,0")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["family"] == "type1"
    assert [doc["polys"][k][0] for k in "pqr"] == [{"num": n, "den": "1"} for n in ("1", "-2", "1")]


def test_construct_scaled_family(capsys):
    code, out, _ = run(capsys, "construct", "--scaled", "--n", "3")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["n"] == 3
    assert len(doc["polys"]["A"]) == 9 and doc["polys"]["A"][-1] == {"num": "1", "den": "1"}


def test_construct_without_indices_fails(capsys):
    code, _, err = run(capsys, "construct")
    assert code == EXIT_CONSTRUCT and err


def test_construct_degenerate_normalization_fails(capsys):
    code, _, err = run(capsys, "construct", "--indices", "0,0,0", "--normalization", "B_monic")
    assert code == EXIT_CONSTRUCT and "degree" in err


def test_zeros_json_and_csv(capsys):
    code, out, _ = run(capsys, "zeros", "--family", "a", "--n", "5")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["count"] == 12
    code, out, _ = run(capsys, "zeros", "--family", "a", "--n", "5", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["index", "re", "im"] and len(rows) == 13
    # values carry more digits than double precision
    assert max(len(r[1]) for r in rows[1:]) > 25


def test_zeros_beyond_the_supported_degree(capsys):
    code, _, err = run(capsys, "zeros", "--family", "a", "--n", "90")
    assert code == EXIT_ROOTS and err


def test_measures_table(capsys):
    code, out, _ = run(capsys, "measures")
    table = {row["measure"]: row for row in json.loads(out)["masses"]}
    assert code == EXIT_OK
    assert abs(table["A"]["mass_re"] - 2) < 1e-8 and abs(table["A"]["mass_im"]) < 1e-8


def test_curves_export_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["curves", "--format", "csv", "--out", str(a)]) == EXIT_OK
    assert main(["curves", "--format", "csv", "--out", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_curves_with_region_grid(capsys):
    code, out, _ = run(capsys, "curves", "--grid=-1,1,-1,1,3,3")
    doc = json.loads(out)
    assert code == EXIT_OK and len(doc["regions"]) == 9
    names = {tuple(r["z"]): r["region"] for r in doc["regions"]}
    assert names[(0.0, 0.0)].startswith("undefined")
    assert "D_inf_P" in names[(-1.0, 0.0)]


def test_compare_strong(capsys):
    code, out, _ = run(capsys, "compare", "--family", "a", "--formula", "strong", "--n", "10", "20", "--points", "2;1.5j")
    doc = json.loads(out)
    assert code == EXIT_OK and len(doc["records"]) == 4


def test_compare_wrong_region_exit_code(capsys):
    code, _, err = run(capsys, "compare", "--family", "b", "--formula", "curve", "--n", "20", "--points", "-2")
    assert code == EXIT_REGION and "region" in err


def test_compare_rejects_small_n(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compare", "--family", "a", "--n", "5"])
    assert exc.value.code == 2


def test_precision_floor(capsys):
    with pytest.raises(SystemExit):
        main(["measures", "--precision-bits", "64"])


def test_grid_parse():
    g = Grid.parse("0,1,0,2,2,3")
    assert len(g.points()) == 6
    with pytest.raises(Exception):
        Grid.parse("0,1,0,1,2000,2000")


def test_branch_report(capsys):
    code, out, _ = run(capsys, "branch", "--family", "a", "--n", "20", "--count", "2")
    doc = json.loads(out)
    assert code == EXIT_OK and len(doc["results"]) == 2
    assert all(r["error_times_n"] < 5 for r in doc["results"])


def test_selftest_single_check_passes(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "N")
    assert code == EXIT_OK and "[PASS]" in out and "1/1 checks passed" in out


def test_selftest_negative_control(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "N", "--corrupt-anchor")
    assert code == EXIT_SELFTEST and "[FAIL]" in out


def test_entry_point_runs(tmp_path):
    res = subprocess.run([sys.executable, "-m", "hpexp.cli", "construct", "--indices", "1,1,1"],
                         capture_output=True, text=True, cwd=tmp_path, check=False)
    assert res.returncode == 0
    assert len(json.loads(res.stdout)["polys"]["a"]) == 5
