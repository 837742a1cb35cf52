import json
from pathlib import Path

from curveorbits.cli import main
from curveorbits.poly import Poly

REPO_ROOT = Path(__file__).resolve().parent.parent
KAZ_FILE = str(REPO_ROOT / "data" / "kazarian_a2.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_class_a6_text(capsys):
    code, out, _ = run(capsys, "class", "A6")
    assert code == 0
    assert "p = 3*112*(9c1^3 + 12c1c2 - 11c3)*(2c1^3 + c1c2 + c3)" in out
    assert "predegree = 1785" in out


def test_class_points_text(capsys):
    code, out, _ = run(capsys, "class", "points:1,1,1")
    assert code == 0
    assert "p(-u,-v) = 6" in out


def test_unknown_identifier_exits_2(capsys):
    code, _, err = run(capsys, "class", "bogus")
    assert code == 2
    assert "unknown curve identifier" in err


def test_missing_kazarian_row_exits_2(capsys):
    code, _, err = run(capsys, "class", "cubic:cuspidal")
    assert code == 2
    assert "kazarian" in err.lower()


def test_class_with_kazarian_file(capsys):
    code, out, _ = run(capsys, "class", "cubic:cuspidal", "--kazarian-file", KAZ_FILE)
    assert code == 0
    assert "24*c1^2" in out


def test_verify_quartics_passes(capsys):
    code, out, _ = run(capsys, "verify", "quartics")
    assert code == 0
    assert "PASS: 3 checks, 0 failures" in out


def test_verify_suite_flag(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "quartics")
    assert code == 0
    assert "(quartics)" in out


def test_verify_cubics_with_file(capsys):
    code, out, _ = run(capsys, "verify", "cubics", "--kazarian-file", KAZ_FILE)
    assert code == 0
    assert "cubic:cuspidal: orbit class" in out
    assert "conic+tangent: skipped" in out


def test_verify_corrupted_constant_exits_1(capsys, monkeypatch):
    import curveorbits.verify as verify_mod

    monkeypatch.setattr(verify_mod, "EXPECTED_A6", verify_mod.EXPECTED_A6 * 2)
    code, out, _ = run(capsys, "verify", "quartics")
    assert code == 1
    assert "FAIL" in out
    # both sides are serialized in the failure detail
    assert "expected" in out


def test_table_quartics_json_relation_check(capsys):
    code, out, _ = run(capsys, "table", "quartics", "--format", "json")
    assert code == 0
    table = json.loads(out)
    rows = {row["name"]: row for row in table["rows"]}
    flex = Poly.from_json_dict(rows["flex"]["affine"])
    an = Poly.from_json_dict(rows["AN"]["affine"])
    d6 = Poly.from_json_dict(rows["D6"]["affine"])
    assert flex == an + 2 * d6
    assert rows["flex"]["provenance"] == "relation: flex = AN + 2*D6"


def test_table_sections_contains_general(capsys):
    code, out, _ = run(capsys, "table", "sections")
    assert code == 0
    assert "name=general" in out and "weighted_sections=510720" in out


def test_table_cubics_conic_plus_line(capsys):
    code, out, _ = run(capsys, "table", "cubics")
    assert code == 0
    assert "cubic:conic+line" in out
    assert "18*c1^2 + 9*c2" in out


def test_json_round_trips_canonical_form(capsys):
    code, out, _ = run(capsys, "class", "D6", "--format", "json")
    assert code == 0
    body = json.loads(out)
    p = Poly.from_json_dict(body["affine"])
    assert p.to_json_dict() == body["affine"]


def test_output_determinism(capsys):
    _, out1, _ = run(capsys, "table", "quartics", "--format", "json")
    _, out2, _ = run(capsys, "table", "quartics", "--format", "json")
    assert out1 == out2


def test_projective_and_affine_flags(capsys):
    _, both, _ = run(capsys, "class", "E6")
    _, proj, _ = run(capsys, "class", "E6", "--projective")
    _, aff, _ = run(capsys, "class", "E6", "--affine")
    assert "P = " in both and "p = " in both
    assert "P = " in proj
    assert "p expanded" not in proj
    assert "P = " not in aff


def test_flip_sign_flag(capsys):
    code, out, _ = run(capsys, "class", "points:1,1,1,1", "--flip-sign")
    assert code == 0
    assert "p(u,v) = -48*u - 48*v" in out


def test_csv_format(capsys):
    code, out, _ = run(capsys, "class", "A6", "--format", "csv")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header.startswith("name,aut,")
    assert row.startswith("A6,3,")


def test_latex_format(capsys):
    code, out, _ = run(capsys, "class", "A6", "--format", "latex")
    assert code == 0
    assert "c_{1}" in out


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "class", "A6", "--kazarian-file", "/nope.json")
    assert code == 2


def test_towers_command(capsys):
    code, out, _ = run(capsys, "towers")
    assert code == 0
    assert "triple-tangency" in out
