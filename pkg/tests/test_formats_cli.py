"""Serialization formats and the command line surface."""

import json
from fractions import Fraction

import pytest

from latdefect import (
    FormatError,
    format_fraction,
    gram_from_json,
    gram_to_json,
    negative_e8_tree,
    parse_fraction,
    tree_from_json,
    tree_to_json,
    validate_lattice,
)
from latdefect.cli import main

A1_DOC = '{"rank": 1, "gram": [[2]]}'
I3_DOC = json.dumps({"rank": 3, "gram": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})


def test_format_fraction():
    assert format_fraction(3) == "3"
    assert format_fraction(Fraction(-31, 4)) == "-31/4"
    assert format_fraction(Fraction(4, 2)) == "2"


def test_parse_fraction():
    assert parse_fraction("3") == 3
    assert parse_fraction("-31/4") == Fraction(-31, 4)
    assert parse_fraction(" 7/2 ") == Fraction(7, 2)
    for bad in ("a", "1/0", "1/2/3", ""):
        with pytest.raises(FormatError) as info:
            parse_fraction(bad)
        assert info.value.exit_code == 1


def test_gram_json_roundtrip():
    rows = [[2, 1], [1, 3]]
    doc = gram_to_json(rows)
    assert json.loads(doc) == {"rank": 2, "gram": rows}
    assert gram_from_json(doc) == rows


def test_gram_json_diagnostics():
    cases = [
        ("not json", "invalid JSON"),
        ("[1]", "expected an object"),
        ("{}", "missing 'gram'"),
        ('{"gram": []}', "nonempty list"),
        ('{"gram": [[1, 2], [1]]}', "row 1 has length 1"),
        ('{"gram": [[1.5]]}', "row 0, column 0"),
        ('{"gram": [[true]]}', "row 0, column 0"),
        ('{"rank": 3, "gram": [[1]]}', "'rank' is 3"),
    ]
    for text, fragment in cases:
        with pytest.raises(FormatError, match=fragment):
            gram_from_json(text)


def test_tree_json_roundtrip():
    tree = negative_e8_tree()
    back = tree_from_json(tree_to_json(tree))
    assert back.weights == tree.weights
    assert back.edges == tree.edges


def test_tree_json_diagnostics():
    with pytest.raises(FormatError, match="missing 'weights' or 'edges'"):
        tree_from_json('{"weights": [-2]}')
    with pytest.raises(FormatError, match="list of integers"):
        tree_from_json('{"weights": [true], "edges": []}')
    with pytest.raises(FormatError, match="pairs"):
        tree_from_json('{"weights": [-2, -2], "edges": [[0, 1, 2]]}')
    with pytest.raises(FormatError, match="disconnected"):
        tree_from_json('{"weights": [-2, -2, -2, -2], "edges": [[0, 1], [1, 2], [0, 2]]}')


@pytest.fixture()
def gram_files(tmp_path):
    files = {}
    for name, doc in (("a1", A1_DOC), ("a1b", A1_DOC), ("i3", I3_DOC)):
        path = tmp_path / f"{name}.json"
        path.write_text(doc)
        files[name] = str(path)
    files["delta2"] = str(tmp_path / "delta2.json")
    (tmp_path / "delta2.json").write_text(
        json.dumps({"rank": 2, "gram": [[1, 0], [0, 2]]})
    )
    files["bad"] = str(tmp_path / "bad.json")
    (tmp_path / "bad.json").write_text('{"rank": 1, "gram": [[0]]}')
    return files


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_defect_unimodular(capsys, gram_files):
    code, out, _ = run_cli(capsys, ["defect", "--gram", gram_files["i3"]])
    assert code == 0
    assert out == "defect = 0\n"


def test_cli_defect_pair(capsys, gram_files):
    code, out, _ = run_cli(capsys, ["defect", "--gram", gram_files["delta2"]])
    assert code == 0
    assert out == "d_plus = 1/4\nd_minus = -1/4\n"
    code, out, _ = run_cli(
        capsys, ["defect", "--gram", gram_files["delta2"], "--sign", "plus"]
    )
    assert code == 0
    assert out == "d_plus = 1/4\n"


def test_cli_defect_json(capsys, gram_files):
    code, out, _ = run_cli(capsys, ["--json", "defect", "--gram", gram_files["delta2"]])
    assert code == 0
    assert json.loads(out) == {"determinant": 2, "d_plus": "1/4", "d_minus": "-1/4"}


def test_cli_charmin(capsys, gram_files):
    code, out, _ = run_cli(
        capsys, ["charmin", "--gram", gram_files["a1"], "--sign", "minus"]
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "min = 0"
    assert lines[1] == "minimizer: (0)"
    assert lines[2].startswith("nodes = ")


def test_cli_charmin_json(capsys, gram_files):
    code, out, _ = run_cli(
        capsys, ["charmin", "--gram", gram_files["i3"], "--json", "--reduce"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["min"] == "3"
    # antipodal minimizers are reported once, first coordinate positive
    assert sorted(payload["minimizers"]) == sorted(
        [[1, b, c] for b in (-1, 1) for c in (-1, 1)]
    )
    assert payload["nodes"] > 0


def test_cli_glue(capsys, gram_files):
    code, out, _ = run_cli(
        capsys, ["glue", "--left", gram_files["a1"], "--right", gram_files["a1b"]]
    )
    assert code == 0
    rows = gram_from_json(out)
    lat = validate_lattice(rows)
    assert lat.rank == 2
    assert abs(lat.determinant) == 1
    code, out, _ = run_cli(
        capsys,
        ["glue", "--json", "--left", gram_files["a1"], "--right", gram_files["a1b"]],
    )
    payload = json.loads(out)
    assert payload["rank"] == 2
    assert payload["index"] == 2
    assert abs(payload["determinant"]) == 1


def test_cli_seifert_d_sphere(capsys):
    # leading-dash expressions travel after the "--" separator
    for argv, value in (
        (["seifert", "d", "P"], "2"),
        (["seifert", "d", "--", "-P"], "-2"),
        (["seifert", "d", "3*P"], "6"),
    ):
        code, out, _ = run_cli(capsys, argv)
        assert code == 0
        assert out == f"d = {value}\n"


def test_cli_seifert_d_pair(capsys):
    code, out, _ = run_cli(capsys, ["seifert", "d", "Y(-1; -3)"])
    assert code == 0
    assert out == "class values: -1/4, 1/4\nd_{1/4} = 1/4\nd_{-1/4} = -1/4\n"


def test_cli_seifert_d_many_classes(capsys):
    code, out, _ = run_cli(capsys, ["seifert", "d", "Y(-2; -3/2)"])
    assert code == 0
    assert out == "class values: -1/4, 0, 0, 3/4\n"


def test_cli_seifert_d_json(capsys):
    code, out, _ = run_cli(capsys, ["seifert", "d", "--json", "Y(-1; -3)"])
    assert code == 0
    payload = json.loads(out)
    assert payload["h1"] == 2
    assert payload["class_values"] == ["-1/4", "1/4"]
    assert payload["pair"] == {"d_1/4": "1/4", "d_-1/4": "-1/4"}


def test_cli_obstruct(capsys):
    code, out, _ = run_cli(capsys, ["obstruct", "P"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "positive definite filling: Obstructed"
    assert lines[1] == "negative definite filling: Inconclusive"
    assert lines[2].startswith("reason: ")

    code, out, _ = run_cli(capsys, ["obstruct", "Y(-1; -3)"])
    assert code == 0
    assert "positive definite filling: Inconclusive" in out
    assert "negative definite filling: Inconclusive" in out


def test_cli_surgery(capsys):
    code, out, _ = run_cli(capsys, ["surgery", "Y(-1; -3)"])
    assert code == 0
    assert out == "difference = 1/2\nverdict = false\n"


def test_cli_surgery_needs_pair(capsys):
    code, _, err = run_cli(capsys, ["surgery", "P"])
    assert code == 2
    assert "labelled pair" in err


def test_cli_verify(capsys):
    code, out, _ = run_cli(
        capsys, ["verify", "congruence", "--trials", "5", "--rank-bound", "4"]
    )
    assert code == 0
    assert out.startswith("suite congruence: 5 trials, ")
    assert out.strip().endswith("0 violations")
    code, out, _ = run_cli(
        capsys,
        ["--json", "verify", "congruence", "--trials", "5", "--rank-bound", "4"],
    )
    payload = json.loads(out)
    assert payload["suites"][0]["name"] == "congruence"
    assert payload["suites"][0]["trials"] == 5


def test_cli_exit_codes(capsys, gram_files, tmp_path):
    # usage problems
    assert run_cli(capsys, ["bogus"])[0] == 1
    assert run_cli(capsys, ["seifert", "d", "Q"])[0] == 1
    broken = tmp_path / "broken.json"
    broken.write_text("not json")
    assert run_cli(capsys, ["defect", "--gram", str(broken)])[0] == 1
    # mathematical preconditions
    code, _, err = run_cli(capsys, ["defect", "--gram", gram_files["bad"]])
    assert code == 2 and "error:" in err
    code, _, _ = run_cli(
        capsys,
        ["charmin", "--gram", gram_files["a1"], "--sign", "plus", "--radius", "1"],
    )
    assert code == 2
    # node budget exhaustion
    code, _, err = run_cli(
        capsys, ["--node-budget", "1", "charmin", "--gram", gram_files["i3"]]
    )
    assert code == 3 and "budget" in err


def test_cli_help_paths(capsys):
    # a bare invocation is a usage error that still shows the help text
    code, _, err = run_cli(capsys, [])
    assert code == 1
    assert "Usage" in err or "Commands" in err
    code, out, _ = run_cli(capsys, ["--help"])
    assert code == 0
    assert "defect" in out and "seifert" in out
