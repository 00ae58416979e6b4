import json
from importlib import resources

import jsonschema
import pytest

from qmds.cli import main

SCHEMA = json.loads(resources.files("qmds").joinpath("data/cli_schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    assert json.loads(json.dumps(data)) == data
    return code, data, err


@pytest.mark.parametrize(
    "argv",
    [
        ("coset", "--q", "3", "--n", "5", "--r", "4"),
        ("coset", "--q", "41", "--a", "29", "--r", "1"),
        ("check", "--q", "31", "--a", "13", "--delta", "5"),
        ("check", "--q", "3", "--n", "5", "--r", "4", "--delta", "0"),
        ("construct", "--q", "31", "--a", "13", "--d", "12"),
        ("family", "--q", "47"),
        ("search", "--q", "31", "--a", "13"),
        ("search", "--q", "5", "--a", "13"),
        ("verify", "--q", "3", "--n", "5", "--r", "4", "--delta", "1"),
    ],
)
def test_json_validates(capsys, argv):
    code, data, _ = run_json(capsys, *argv)
    assert code == 0
    assert data["command"] == argv[0]


def test_construct_certificate(capsys):
    code, data, _ = run_json(capsys, "construct", "--q", "31", "--a", "13", "--d", "12")
    assert code == 0
    q = data["quantum"]
    assert (q["n"], q["k"], q["d"], q["mds"]) == (74, 52, 12, True)
    assert data["coset_dual_containing"] and data["matrix_dual_containing"]
    assert len(data["code"]["generator"]) == 12
    assert data["code"]["defining_set"] == list(range(321, 642, 32))
    assert data["code"]["d_bch"] == 12


def test_construct_small_d(capsys):
    code, data, _ = run_json(capsys, "construct", "--q", "31", "--a", "13", "--d", "2")
    assert code == 0
    assert (data["quantum"]["n"], data["quantum"]["k"], data["quantum"]["d"]) == (74, 72, 2)


def test_construct_skips_matrix_for_large_n(capsys):
    code, data, _ = run_json(capsys, "construct", "--q", "73", "--a", "41", "--d", "4",
                             "--max-matrix-n", "100")
    assert code == 0 and data["matrix_dual_containing"] is None


@pytest.mark.parametrize(
    "argv, message",
    [
        (("construct", "--q", "31", "--a", "13", "--d", "13"), "d must be even"),
        (("construct", "--q", "31", "--a", "13", "--d", "14"), "not dual-containing"),
        (("construct", "--q", "31", "--a", "17", "--d", "4"), "not in any family"),
        (("construct", "--q", "31", "--a", "13"), "--d"),
        (("search", "--q", "31", "--a", "7"), "does not divide q^2+1=962"),
        (("search", "--q", "31"), "--a"),
        (("check", "--q", "3", "--n", "3", "--r", "4", "--delta", "0"), "gcd"),
        (("check", "--q", "31", "--a", "13"), "--delta or --d"),
        (("coset", "--q", "12", "--n", "5"), "prime power"),
        (("verify", "--q", "3", "--n", "5", "--r", "4", "--d", "3"), "even"),
    ],
)
def test_invalid_arguments_exit_2(capsys, argv, message):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert message in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["check", "--format", "xml"])
    assert exc.value.code == 2


def test_search_text(capsys):
    code, out, _ = run(capsys, "search", "--q", "41", "--a", "29")
    assert code == 0
    assert "delta*=4, lemma bound=4 (equal)" in out


def test_search_unclassified(capsys):
    code, data, _ = run_json(capsys, "search", "--q", "5", "--a", "13")
    assert code == 0
    assert data["comparison"] == "equal" and data["lemma_bound"] == 0


def test_verify_mismatch_free(capsys):
    code, data, _ = run_json(capsys, "verify", "--q", "3", "--n", "5", "--r", "4", "--delta", "1")
    assert code == 0
    assert data["agree"] and data["min_distance"] == 4 and data["bch_sound"]


def test_verify_uses_supports_past_budget(capsys):
    code, data, _ = run_json(capsys, "verify", "--q", "5", "--n", "13", "--r", "6", "--delta", "1")
    assert code == 0
    assert data["min_distance_method"] == "supports" and data["min_distance"] >= data["d_bch"]


def test_family_csv(capsys):
    code, out, _ = run(capsys, "family", "--q", "41", "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "q,a,t,m,n,k,d,delta,mds"
    assert lines[1:] == [f"41,29,41,0,58,{60 - 2 * d},{d},{d // 2 - 1},True" for d in range(2, 11, 2)]


def test_coset_text(capsys):
    code, out, _ = run(capsys, "coset", "--q", "3", "--n", "5", "--r", "4")
    assert code == 0
    assert "C_5 = {5}  skew symmetric" in out
    assert "C_1 = {1, 9}  paired with C_13" in out


def test_out_file(tmp_path, capsys):
    path = tmp_path / "cert.json"
    code, out, _ = run(capsys, "construct", "--q", "41", "--a", "29", "--d", "10", "--format",
                       "json", "--out", str(path))
    assert code == 0 and out == ""
    jsonschema.validate(json.loads(path.read_text()), SCHEMA)


def test_output_is_deterministic(capsys):
    argv = ("family", "--q", "43", "--format", "json")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


@pytest.mark.slow
def test_tables_command(capsys):
    code, data, _ = run_json(capsys, "tables")
    assert code == 0 and data["ok"]
    assert len(data["rows"]) == 14 and len(data["summary"]) == 12


@pytest.mark.slow
def test_tables_text_rows(capsys):
    code, out, _ = run(capsys, "tables", "--jobs", "2")
    assert code == 0
    assert "[[74,76-2d,d]]_31, 26m+5, m=1, r=32, 2≤d≤12 even" in out
    assert "[[74,76-2d,d]]_43, 50m+43, m=0, r=44, 2≤d≤12 even" in out
    assert "[[730,732-2d,d]]_173, 82m+9, m=2, r=174, 2≤d≤38 even" in out


def test_tables_mismatch_exits_1(capsys, monkeypatch):
    from qmds import tables

    golden = json.loads(json.dumps(tables.load_golden()))
    golden["tables"][0]["rows"][0]["d_max"] = 14
    golden["tables"] = golden["tables"][:1]
    monkeypatch.setattr(tables, "load_golden", lambda: golden)
    code, out, err = run(capsys, "tables")
    assert code == 1
    assert "d_max expected 14, got 12" in err
