import csv
import io
import json

import pytest

from reflectpush.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_optimize_square(capsys):
    code, out, _ = run(capsys, "optimize", "--shape", "3,3", "--size", "3", "--weight", "standard")
    cert = json.loads(out)
    assert code == 0
    assert list(cert) == ["schema", "shape", "m", "weight", "max_weight", "optimal_sets", "classifications"]
    assert cert["schema"] == "downset-cert/1"
    assert cert["max_weight"] == 3 and len(cert["optimal_sets"]) == 2


def test_optimize_empty(capsys):
    code, out, _ = run(capsys, "optimize", "--shape", "4,2", "--size", "0")
    cert = json.loads(out)
    assert code == 0 and cert["max_weight"] == 0 and cert["optimal_sets"] == [[0, 0, 0, 0]]


def test_optimize_3x5_has_no_colex(capsys):
    _, out, _ = run(capsys, "optimize", "--shape", "3,5", "--size", "6")
    cert = json.loads(out)
    kinds = {c["kind"] for cs in cert["classifications"] for c in cs}
    assert "ColexSegment" not in kinds
    assert [2, 2, 2] not in cert["optimal_sets"]


def test_optimize_triangle_and_box(capsys):
    _, out, _ = run(capsys, "optimize", "--triangle", "6", "--size", "9")
    cert = json.loads(out)
    assert all(cs[0]["kind"] != "Unstructured" for cs in cert["classifications"])
    _, out, _ = run(capsys, "optimize", "--box", "2,2,2", "--size", "4")
    cert = json.loads(out)
    assert cert["max_weight"] == 4 and cert["classifications"][0][0]["kind"] == "Segment"


def test_certificates_are_byte_identical(capsys):
    a = run(capsys, "optimize", "--shape", "4,5", "--size", "9")[1]
    b = run(capsys, "optimize", "--shape", "4,5", "--size", "9")[1]
    assert a == b


def test_weight_file(tmp_path, capsys):
    f = tmp_path / "w.txt"
    f.write_text("0\n1\n4\n9\n16\n")
    code, out, _ = run(capsys, "optimize", "--shape", "3,3", "--size", "3", "--weight", str(f))
    assert code == 0 and json.loads(out)["weight"] == [0, 1, 4, 9, 16]
    f.write_text("0\n1\n")
    assert run(capsys, "optimize", "--shape", "3,3", "--size", "3", "--weight", str(f))[0] == 2
    f.write_text("0\n2\n1\n3\n4\n")
    assert run(capsys, "optimize", "--shape", "3,3", "--size", "3", "--weight", str(f))[0] == 2
    assert run(capsys, "optimize", "--shape", "3,3", "--size", "3", "--weight", str(tmp_path / "nope"))[0] == 2


def test_usage_and_guard_codes(capsys):
    with pytest.raises(SystemExit) as info:
        main(["optimize", "--size", "3"])
    assert info.value.code == 2
    capsys.readouterr()
    assert run(capsys, "optimize", "--shape", "3", "--size", "1")[0] == 2
    assert run(capsys, "optimize", "--shape", "3,3", "--size", "12")[0] == 2
    assert run(capsys, "optimize", "--box", "5,5,5", "--size", "1")[0] == 3
    assert run(capsys, "optimize", "--triangle", "9", "--size", "1")[0] == 3
    assert run(capsys, "verify", "--theorem", "ak", "--n", "8")[0] == 3


def _csv(text):
    return list(csv.reader(io.StringIO(text)))


def test_verify_exact_criteria(capsys):
    code, out, err = run(capsys, "verify", "--theorem", "exact-criteria", "--lmax", "6", "--jobs", "1")
    rows = _csv(out)
    assert code == 0 and rows[0] == ["theorem", "cell", "result", "detail"]
    assert all(r[2] == "PASS" for r in rows[1:])
    assert "FAIL" not in out and "0 FAIL" in err


def test_verify_ak_json(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "ak", "--n", "5", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["all_pass"] and len(data["cells"]) == 11


def test_verify_empty_range(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "rect-structure", "--lmax", "0")
    assert code == 0 and _csv(out) == [["theorem", "cell", "result", "detail"]]


@pytest.mark.parametrize(
    "argv",
    [
        ["--theorem", "rect-structure", "--lmax", "4"],
        ["--theorem", "triangle-structure", "--lmax", "6"],
        ["--theorem", "nested-unique", "--lmax", "5"],
        ["--theorem", "lindsay", "--dims", "3,4"],
        ["--theorem", "local-global", "--n", "3", "--d", "3"],
        ["--theorem", "box-formulas", "--lmax", "5"],
        ["--theorem", "weight-class", "--lmax", "4"],
    ],
)
def test_verify_campaigns_pass(capsys, argv):
    code, out, _ = run(capsys, "verify", *argv, "--jobs", "1")
    assert code == 0, out


def test_verify_parallel_matches_serial(capsys):
    a = run(capsys, "verify", "--theorem", "rect-structure", "--lmax", "4", "--jobs", "1")[1]
    b = run(capsys, "verify", "--theorem", "rect-structure", "--lmax", "4", "--jobs", "2")[1]
    assert a == b


def test_table_ak(capsys):
    code, out, _ = run(capsys, "table", "--ak", "4")
    rows = _csv(out)
    assert code == 0 and rows[0] == ["m", "P_n(m)", "argmax"]
    assert rows[1][:2] == ["0", "0"] and rows[4][:2] == ["3", "3"]


def test_table_delta(capsys):
    code, out, _ = run(capsys, "table", "--delta", "K4")
    assert code == 0 and [r[1] for r in _csv(out)[1:]] == ["0", "1", "2", "3"]
    assert run(capsys, "table", "--delta", "Z9")[0] == 2


def test_table_catalogue(capsys):
    code, out, _ = run(capsys, "table", "--triangle-catalogue", "6")
    rows = _csv(out)
    assert code == 0 and rows[0][0] == "ell" and len(rows) > 1
