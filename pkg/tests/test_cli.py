"""Command-line behavior, the JSON format, and its loader's validation."""

import json

import pytest

from lrcodes.cli import load_spec_file, main, spec_to_dict, write_spec_file
from lrcodes.construction import build_code, validate_params
from lrcodes.errors import LrcError


@pytest.fixture
def code_file(tmp_path):
    path = tmp_path / "code.json"
    write_spec_file(build_code(validate_params(13, 10, 5, 3)), path)
    return path


def test_params_valid(capsys):
    assert main(["params", "--q", "13", "--n", "10", "--k", "5", "--r", "3"]) == 0
    out = capsys.readouterr().out
    doc = json.loads(out[out.index("{"):])
    assert doc["d_predicted"] == 4
    assert doc["d_improved"] == 4
    assert doc["delta"] == 1
    assert doc["optimal"] is True


def test_params_s_equals_one(capsys):
    assert main(["params", "--q", "13", "--n", "9", "--k", "4", "--r", "3"]) == 2
    assert "s = 1 not supported" in capsys.readouterr().err


def test_params_rate_bound(capsys):
    assert main(["params", "--q", "13", "--n", "10", "--k", "8", "--r", "3"]) == 2
    assert "exceeds" in capsys.readouterr().err


def test_construct_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["construct", "--q", "13", "--n", "10", "--k", "5", "--r", "3",
                     "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_spec_file_schema(code_file):
    doc = json.loads(code_file.read_text())
    assert list(doc) == [
        "version", "q", "n", "k", "r", "s", "t", "m", "n_bar", "subgroup",
        "blocks", "B", "gamma", "g_tilde", "h_B", "eval_points", "generator_matrix",
    ]
    assert doc["version"] == 1
    assert doc["subgroup"] == {"kind": "multiplicative", "elements": [1, 5, 8, 12]}
    assert doc["B"] == [7, 9]
    assert doc["g_tilde"] == [4, 0, 0, 0, 1]
    assert doc["h_B"] == [11, 10, 1]


def test_load_round_trip(code_file):
    built = build_code(validate_params(13, 10, 5, 3))
    loaded = load_spec_file(code_file)
    assert loaded == built


def test_load_rejects_corruption(tmp_path, code_file):
    def corrupted(mutate):
        doc = json.loads(code_file.read_text())
        mutate(doc)
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        return path

    cases = [
        lambda d: d.update(version=2),
        lambda d: d.update(s=3),
        lambda d: d["subgroup"]["elements"].reverse(),
        lambda d: d["subgroup"].update(elements=[1, 5, 8, 11]),
        lambda d: d["blocks"][1].__setitem__(0, 4),
        lambda d: d.update(B=[6, 9]),
        lambda d: d.update(h_B=[1, 10, 1]),
        lambda d: d.update(g_tilde=[5, 0, 0, 0, 1]),
        lambda d: d.update(eval_points=sorted(d["eval_points"], reverse=True)),
        lambda d: d["generator_matrix"].pop(),
    ]
    for mutate in cases:
        with pytest.raises(LrcError):
            load_spec_file(corrupted(mutate))


def test_encode_command(capsys, code_file):
    assert main(["encode", "--spec", str(code_file), "0", "0", "0", "0", "1"]) == 0
    assert capsys.readouterr().out.strip() == "9 9 11 2 8 3 12 3 8 2"


def test_encode_rejects_bad_symbols(capsys, code_file):
    assert main(["encode", "--spec", str(code_file), "0", "0", "0", "0", "13"]) == 2
    assert main(["encode", "--spec", str(code_file), "0", "0", "x", "0", "1"]) == 2
    assert main(["encode", "--spec", str(code_file), "1", "2"]) == 2
    capsys.readouterr()


def test_encode_from_file(capsys, code_file, tmp_path):
    msg = tmp_path / "msg.txt"
    msg.write_text("0 0 0 0 1\n")
    assert main(["encode", "--spec", str(code_file), "--file", str(msg)]) == 0
    assert capsys.readouterr().out.strip() == "9 9 11 2 8 3 12 3 8 2"


def test_repair_command(capsys, code_file):
    word = "9 9 11 ? 8 3 12 3 8 2".split()
    assert main(["repair", "--spec", str(code_file), "--index", "4", *word]) == 0
    out = capsys.readouterr().out
    assert "repaired value: 2" in out
    assert "6=3" in out and "7=0" in out and "9=0" in out


def test_decode_command(capsys, code_file):
    word = "9 ? 11 2 ? 3 12 ? 8 2".split()
    assert main(["decode", "--spec", str(code_file), *word]) == 0
    assert capsys.readouterr().out.strip() == "0 0 0 0 1"


def test_decode_unrecoverable_exit(capsys, code_file):
    word = "? ? ? ? ? ? 12 3 8 2".split()
    assert main(["decode", "--spec", str(code_file), *word]) == 3
    capsys.readouterr()


def test_verify_command(capsys, code_file):
    assert main(["verify", "--spec", str(code_file)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["all_ok"] is True
    assert doc["distance_found"] == 4


def test_verify_detects_tampering(capsys, tmp_path, code_file):
    doc = json.loads(code_file.read_text())
    doc["generator_matrix"][1] = doc["generator_matrix"][0]
    bad = tmp_path / "tampered.json"
    bad.write_text(json.dumps(doc))
    assert main(["verify", "--spec", str(bad)]) == 3
    report = json.loads(capsys.readouterr().out)
    assert report["rank_ok"] is False
    assert report["all_ok"] is False


def test_verify_budget_exit(capsys, code_file):
    assert main(["verify", "--spec", str(code_file), "--budget", "1000"]) == 2
    capsys.readouterr()


def test_bounds_command(capsys):
    assert main(["bounds", "--n", "10", "--k", "5", "--r", "3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {
        "n": 10, "k": 5, "r": 3,
        "d_singleton": 5, "d_improved": 4, "rate_bound_holds": True,
    }


def test_missing_file_is_exit_2(capsys, tmp_path):
    assert main(["encode", "--spec", str(tmp_path / "nope.json"), "1"]) == 2
    capsys.readouterr()


def test_spec_to_dict_and_write_are_stable(tmp_path):
    spec = build_code(validate_params(16, 10, 5, 3))
    d1 = spec_to_dict(spec)
    d2 = spec_to_dict(build_code(validate_params(16, 10, 5, 3)))
    assert d1 == d2
    p1, p2 = tmp_path / "x.json", tmp_path / "y.json"
    write_spec_file(spec, p1)
    write_spec_file(spec, p2)
    assert p1.read_bytes() == p2.read_bytes()
