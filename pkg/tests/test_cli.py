import json

import pytest

from extremal_lie.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_present_family(capsys):
    code, out, _ = run(capsys, "present", "--family", "D", "--n", "5")
    assert code == 0
    assert "dim 45 (expected 45)" in out


def test_present_custom_edges(capsys):
    code, out, _ = run(capsys, "present", "--edges", "1-2")
    assert code == 0
    assert "dim 3" in out


def test_present_json_schema(capsys):
    code, out, _ = run(capsys, "present", "--family", "C", "--n", "4",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["dim"] == 10 and payload["dim_expected"] == 10
    assert len(payload["basis"]) == 10


def test_present_structure_export(capsys, tmp_path):
    path = tmp_path / "sc.txt"
    code, _, _ = run(capsys, "present", "--edges", "1-2",
                     "--structure", str(path))
    assert code == 0
    assert path.read_text() == "0 1 2 1\n"


def test_present_bad_family_n(capsys):
    code, _, err = run(capsys, "present", "--family", "D", "--n", "4")
    assert code == 2 and "parameter error" in err


def test_realize_pass(capsys):
    code, out, _ = run(capsys, "realize", "--family", "C", "--n", "6",
                       "--field", "gf", "2147483629")
    assert code == 0
    assert "dim 21 (expected 21)" in out and out.strip().endswith("pass")


def test_realize_parameter_error(capsys):
    code, _, err = run(capsys, "realize", "--family", "D", "--n", "5",
                       "--alpha", "-2", "--beta", "3")
    assert code == 2 and "parameter error" in err


def test_realize_missing_parameter(capsys):
    code, _, err = run(capsys, "realize", "--family", "B", "--n", "5")
    assert code == 2


def test_rational_literal_rejects_floats(capsys):
    with pytest.raises(SystemExit) as info:
        main(["realize", "--family", "B", "--n", "5", "--gamma", "0.5"])
    assert info.value.code == 2


def test_field_flag_rejects_unknown(capsys):
    code, _, err = run(capsys, "realize", "--family", "C", "--n", "6",
                       "--field", "reals")
    assert code == 2


def test_certify_json_and_exit_code(capsys):
    code, out, _ = run(capsys, "certify", "--family", "A", "--n", "5",
                       "--field", "gf", "2147483629")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "pass" and payload["dim"] == 24


def test_certify_seed_env_override(capsys, monkeypatch):
    monkeypatch.setenv("EXTREMAL_LIE_SEED", "11")
    _, out1, _ = run(capsys, "certify", "--family", "C", "--n", "4",
                     "--field", "gf", "2147483629", "--seed", "5")
    _, out2, _ = run(capsys, "certify", "--family", "C", "--n", "4",
                     "--field", "gf", "2147483629", "--seed", "6")
    assert out1 == out2  # the env seed wins over both --seed values


def test_certify_rational_parameters(capsys):
    code, out, _ = run(capsys, "certify", "--family", "B", "--n", "5",
                       "--gamma", "1/2", "--field", "gf", "2147483629")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "pass" and payload["dim"] == 36


def test_certify_match_against(capsys):
    code, out, _ = run(capsys, "certify", "--family", "B", "--n", "5",
                       "--gamma", "1", "--field", "gf", "2147483629",
                       "--match-against", "gamma=2")
    assert code == 0
    payload = json.loads(out)
    assert payload["match"]["verdict"] == "pass"
    assert payload["match"]["params1"] != payload["match"]["params2"]


def test_certify_match_against_bad_key(capsys):
    code, _, err = run(capsys, "certify", "--family", "B", "--n", "5",
                       "--gamma", "1", "--match-against", "alpha=2")
    assert code == 2


def test_output_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "certify", "--family", "C", "--n", "4",
                       "--field", "gf", "2147483629",
                       "--output", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["verdict"] == "pass"
