"""Exit codes, report bytes, and input handling of the command line."""

import json

import pytest

from doublesix.cli import main
from doublesix.plane import REF6
from doublesix.report import SCHEMA
from doublesix.torsion import conic_product_pencil

COLLINEAR_PAYLOAD = {
    "points": [
        ["1", "0", "0"],
        ["0", "1", "0"],
        ["1", "1", "0"],
        ["1", "1", "1"],
        ["1", "2", "3"],
        ["2", "5", "1"],
    ]
}


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_position_passes_on_the_default_configuration(capsys):
    code, out, err = run(capsys, ["check-position", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == SCHEMA
    assert data["command"] == "check-position"
    assert data["summary"]["status"] == "pass"
    assert err.startswith("elapsed:")


def test_check_position_reports_the_collinear_witness(tmp_path, capsys):
    path = tmp_path / "collinear.json"
    path.write_text(json.dumps(COLLINEAR_PAYLOAD))
    code, out, _ = run(capsys, ["check-position", "--input", str(path), "--json"])
    assert code == 1
    data = json.loads(out)
    assert data["summary"]["status"] == "fail"
    check = data["checks"][0]
    assert check["status"] == "fail"
    assert check["details"]["collinear_triple"] == [1, 2, 3]


def test_malformed_json_exits_two(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, out, err = run(capsys, ["check-position", "--input", str(path)])
    assert code == 2
    assert out == ""
    assert "invalid JSON" in err


def test_duplicate_points_exit_two(tmp_path, capsys):
    payload = {"points": [["1", "0", "0"]] * 6}
    path = tmp_path / "dupes.json"
    path.write_text(json.dumps(payload))
    code, _, err = run(capsys, ["check-position", "--input", str(path)])
    assert code == 2
    assert "invalid configuration" in err


def test_missing_file_exits_two(tmp_path, capsys):
    code, _, err = run(capsys, ["coble", "--input", str(tmp_path / "absent.json")])
    assert code == 2
    assert "cannot read" in err


def test_trials_must_be_positive(capsys):
    code, _, err = run(capsys, ["verify-paper", "--trials", "0"])
    assert code == 2
    assert "--trials" in err


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["check-position", "--bogus"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2


def test_text_rendering_is_the_default(capsys):
    code, out, _ = run(capsys, ["lattice"])
    assert code == 0
    assert out.startswith("[lattice]")
    assert "PASS" in out and "-> pass" in out


def test_output_file_matches_json_stdout(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, ["conics", "--json", "--output", str(target)])
    assert code == 0
    assert target.read_text() == out
    data = json.loads(out)
    assert len(data["checks"][0]["details"]["conics"]) == 6


def test_second_model_reports_the_involution(capsys):
    code, out, _ = run(capsys, ["second-model", "--json"])
    assert code == 0
    data = json.loads(out)
    ids = [c["id"] for c in data["checks"]]
    assert ids == ["quintic-dimension", "associated-general-position", "involution"]
    assert data["summary"]["failed"] == 0


def test_second_model_rejects_degenerate_input(tmp_path, capsys):
    path = tmp_path / "collinear.json"
    path.write_text(json.dumps(COLLINEAR_PAYLOAD))
    code, out, _ = run(capsys, ["second-model", "--input", str(path), "--json"])
    assert code == 1
    data = json.loads(out)
    assert data["checks"][0]["id"] == "general-position"


def test_torsion_pencil_accepts_the_default_configuration(capsys):
    code, out, _ = run(capsys, ["torsion", "--json"])
    assert code == 0
    data = json.loads(out)
    details = data["checks"][0]["details"]
    assert details["accepted"] is True
    assert details["member"] == ["1", "1"]
    assert details["rank_node_side"] == details["rank_conic_side"] == 2
    assert "note" in details


def test_torsion_form_flag_certifies_a_supplied_sextic(tmp_path, capsys):
    member = conic_product_pencil(REF6).member(1, 1).canonical()
    path = tmp_path / "member.json"
    path.write_text(json.dumps(member.to_json()))
    code, out, _ = run(capsys, ["torsion", "--form", str(path), "--json"])
    assert code == 0
    data = json.loads(out)
    details = data["checks"][0]["details"]
    assert details["accepted"] is True
    assert "member" not in details


def test_torsion_form_and_pencil_flags_conflict(capsys):
    with pytest.raises(SystemExit) as info:
        main(["torsion", "--pencil", "--form", "x.json"])
    assert info.value.code == 2


def test_coble_flags_vanishing_generators_without_failing(tmp_path, capsys):
    path = tmp_path / "collinear.json"
    path.write_text(json.dumps(COLLINEAR_PAYLOAD))
    code, out, _ = run(capsys, ["coble", "--input", str(path), "--json"])
    assert code == 0
    data = json.loads(out)
    evaluation = data["checks"][0]["details"]
    assert evaluation["zero_coordinates"] == [0]
    relation = data["checks"][1]["details"]
    assert relation["residual"] == "0"


def test_action_table_smoke(capsys):
    code, out, _ = run(capsys, ["action-table", "--json", "--trials", "2"])
    assert code == 0
    data = json.loads(out)
    assert data["checks"][0]["id"] == "permutation-action"


def test_verify_paper_reports_are_byte_identical(capsys):
    argv = ["verify-paper", "--seed", "11", "--trials", "2", "--json"]
    first_code, first_out, _ = run(capsys, argv)
    second_code, second_out, _ = run(capsys, argv)
    assert first_code == second_code == 0
    assert first_out == second_out
    data = json.loads(first_out)
    assert data["summary"]["total"] == 9
    assert data["summary"]["status"] == "pass"
