import json

from pytest import mark, raises

from orbivertex.cli import InputError, main, parse_window


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_parse_window():
    assert parse_window("4") == (-4, 4)
    assert parse_window("-2,3") == (-2, 3)
    assert parse_window("[-1,1]") == (-1, 1)
    with raises(InputError):
        parse_window("a,b")


def test_quotient_round_trip(capsys):
    code, doc, _ = run(capsys, "quotient", "--n", "2", "--quotient", "[[1],[]]")
    assert code == 0 and doc["schema"] == "orbivertex/1"
    code, back, _ = run(capsys, "quotient", "--n", "2", "--diagram", json.dumps(doc["diagram"]))
    assert back["quotient"] == [[1], []] and back["core"] == []


def test_vertex_dt(capsys):
    legs = json.dumps({"rho_plus": [1], "rho_minus": [], "lambda": [[], []]})
    code, doc, _ = run(capsys, "vertex-dt", "--n", "2", "--legs", legs, "--window=0,2")
    assert code == 0
    assert {"coeff": "1", "exp": {}} in doc["series"]["terms"]
    code, doc, _ = run(capsys, "vertex-dt", "--n", "2", "--legs", legs, "--framed", "--window=0,2")
    assert doc["framed"] and doc["prefactor"]["coeff"] == "-1"


def test_bad_input_exits_2(capsys):
    code, doc, err = run(capsys, "vertex-dt", "--n", "2", "--legs", "{not json")
    assert code == 2 and doc is None and "error" in json.loads(err)
    code, _, err = run(capsys, "vertex-dt", "--n", "2", "--legs", '{"lambda": [[1]]}')
    assert code == 2
    code, _, err = run(capsys, "vertex-gw", "--n", "2", "--legs", "[[1]]")
    assert code == 2 and "JSON object" in err


def test_char_table(capsys):
    code, doc, _ = run(capsys, "char-table", "--n", "2", "--max-size", "1")
    assert code == 0 and doc["dimensions"] == [1, 1]


def test_crc_map(capsys):
    code, doc, _ = run(capsys, "crc-map", "--geometry", "[[1, 0]]")
    assert doc["map"]["T_C1"] == {"t_A1": "1"}


def test_oracle(capsys):
    legs = json.dumps({"rho_plus": [1], "rho_minus": [], "diagram": []})
    code, doc, _ = run(capsys, "oracle", "--n", "1", "--legs", legs, "--max-size", "4")
    assert code == 0 and doc["matched"]


def test_verify_lemma1(capsys):
    code, doc, _ = run(capsys, "verify", "lemma1", "--n", "3", "--max-size", "6")
    assert code == 0 and doc["failed"] == 0 and doc["instances"] == 13


def test_config_file(tmp_path, capsys):
    conf = tmp_path / "c.json"
    conf.write_text(json.dumps({"n": 3, "max-size": 1}))
    code, doc, _ = run(capsys, "char-table", "--config", str(conf))
    assert doc["n"] == 3 and len(doc["classes"]) == 3


@mark.parametrize("cmd", ["glue", "subst", "vertex-gw"])
def test_other_commands_run(capsys, cmd):
    legs = {"glue": {"lambda": [[], []]}, "subst": {"lambda": [[1], []]},
            "vertex-gw": {"mu": [[1], []]}}[cmd]
    code, doc, _ = run(capsys, cmd, "--n", "2", "--legs", json.dumps(legs), "--u-order", "1", "--window=2", "--dv", "1")
    assert code == 0 and doc["command"] == cmd
