import json

import pytest

from hktwist.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_threshold_text_k3(capsys):
    code, out, err = run(capsys, "threshold", "--family", "K3")
    assert code == 0 and err == ""
    assert "p(t) = 3t - 24" in out
    assert "C = 8 exactly" in out
    assert "note:" in out


def test_threshold_text_k3_2(capsys):
    code, out, _ = run(capsys, "threshold", "--family", "K3_2")
    assert code == 0
    assert "p(t) = 105t^2 - 630t + 504" in out
    assert "C = 5.04939 (largest root of 105t^2 - 630t + 504)" in out


def test_threshold_json_k3_3(capsys):
    code, out, _ = run(capsys, "threshold", "--family", "k3_3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "1"
    assert doc["polynomial"] == ["-10560", "-31680", "-35640", "6930"]
    assert doc["constant"]["decimal"] == "5.95368"
    assert doc["rational"] is None
    assert doc["notes"]
    lo, hi = doc["constant"]["interval"]
    assert "/" in lo or lo.isdigit()


def test_poly_command(capsys):
    code, out, _ = run(capsys, "poly", "--family", "K3_2", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["segre_pairings"] == ["504", "-30", "3"]
    assert "constant" not in doc


def test_gamma_p_rational(capsys):
    code, out, _ = run(capsys, "gamma-p", "--family", "K3", "--q", "32")
    assert code == 0
    assert "gamma_p = 1/2 exactly" in out


def test_gamma_p_json(capsys):
    code, out, _ = run(capsys, "gamma-p", "--family", "K3_2", "--q", "6", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["gamma_p"]["decimal"] == "0.917369"
    assert doc["rational"] is None


def test_cone_test(capsys):
    code, out, _ = run(capsys, "cone-test", "--family", "K3", "--a", "2", "--q-delta", "32")
    assert code == 0 and "pseff-cone member: yes" in out
    code, out, _ = run(capsys, "cone-test", "--family", "K3", "--a", "2", "--q-delta", "31")
    assert code == 0 and "pseff-cone member: no" in out
    code, out, _ = run(
        capsys, "cone-test", "--family", "K3", "--a", "2", "--q-delta", "32", "--not-nef"
    )
    assert code == 0 and "pseff-cone member: no" in out


def test_square_table(capsys):
    code, out, _ = run(capsys, "square", "table")
    assert code == 0
    assert "alpha^4" in out and "3a^2" in out
    assert "zeta^7" in out and "504" in out
    rows = {
        line.split("=")[0].strip(): line.split("=", 1)[1].strip()
        for line in out.splitlines()
        if "=" in line and not line.startswith("note")
    }
    assert rows["zeta^5*alpha^2"] == "-30a"
    assert rows["zeta^5*sbar"] == "-27"
    assert rows["zeta^3*sbar*delta^2"] == "-1"
    assert rows["delta^4"] == "12"


def test_square_z_pairing(capsys):
    code, out, _ = run(capsys, "square", "z-pairing")
    assert code == 0
    assert "z-pairing(a) = 30a^2 - 240a - 480" in out
    assert "9.65685" in out
    # the discrepancy note names both printed variants
    assert "15(a^2 - 8a - 56)" in out
    assert "sqrt(288)" in out


def test_square_z_pairing_at_zero(capsys):
    code, out, _ = run(capsys, "square", "z-pairing", "--alpha-sq", "0")
    assert code == 0
    assert "z-pairing(0) = -480" in out


def test_square_kahler(capsys):
    code, out, _ = run(capsys, "square", "kahler", "--alpha-sq", "3")
    assert code == 0
    assert "all positive: yes" in out
    code, out, _ = run(capsys, "square", "kahler", "--alpha-sq", "2")
    assert code == 0
    assert "all positive: no" in out


def test_derive_command(capsys):
    code, out, _ = run(capsys, "derive-k3-3")
    assert code == 0
    assert "3*A - B = 3120" in out
    assert "7/4*A - B = 810" in out
    assert "c2^2 = 1848" in out and "c4 = 2424" in out


def test_derive_json(capsys):
    code, out, _ = run(capsys, "derive-k3-3", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["constants"] == {"1": "15", "c2": "108", "c2^2": "1848", "c4": "2424"}
    assert doc["equation1"] == ["3", "-1", "3120"]
    assert doc["equation2"] == ["7/4", "-1", "810"]
    assert doc["lambda"] == "1/3"
    assert doc["sqrt_todd_c2sq"] == "7/5760"
    assert doc["todd_constant"] == "4"
    assert any("5650" in note for note in doc["notes"])


def test_digits_flag(capsys):
    code, out, _ = run(capsys, "threshold", "--family", "K3_3", "--digits", "12")
    assert code == 0
    assert "5.95367895498" in out


def test_unknown_family_is_domain_error(capsys):
    code, out, err = run(capsys, "threshold", "--family", "K5")
    assert code == 1
    assert out == "" and "unknown family" in err


def test_negative_q_is_domain_error(capsys):
    code, _, err = run(capsys, "gamma-p", "--family", "K3", "--q", "-4")
    assert code == 1 and "positive" in err


def test_bad_rational_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["gamma-p", "--family", "K3", "--q", "watermelon"])
    assert info.value.code == 2


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_family_file_roundtrip(tmp_path, capsys):
    from hktwist.family import preset

    path = tmp_path / "fam.json"
    path.write_text(json.dumps(preset("K3_2").to_json()))
    code, out, _ = run(capsys, "threshold", "--family", f"@{path}")
    assert code == 0
    assert "C = 5.04939" in out


def test_family_file_errors(tmp_path, capsys):
    missing = tmp_path / "missing.json"
    code, _, err = run(capsys, "threshold", "--family", f"@{missing}")
    assert code == 1 and "No such file" in err
    bad = tmp_path / "bad.json"
    bad.write_text("not json")
    code, _, err = run(capsys, "threshold", "--family", f"@{bad}")
    assert code == 1 and "not valid JSON" in err
    incomplete = tmp_path / "incomplete.json"
    incomplete.write_text(json.dumps({"name": "x", "n": 1}))
    code, _, err = run(capsys, "threshold", "--family", f"@{incomplete}")
    assert code == 1


def test_json_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "threshold", "--family", "K3_3", "--json")
    _, second, _ = run(capsys, "threshold", "--family", "K3_3", "--json")
    assert first == second
