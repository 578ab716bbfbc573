import json
import subprocess
import sys

import pytest

from xfam.cli import main
from xfam.core.textio import parse_coloring, parse_family


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_examples(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "hm", "--n", "5", "--k", "2", "--s", "1")
    assert code == 0 and parse_family(out).to_lists() == [[1, 2], [1, 3], [2, 3]]
    code, out, _ = run(capsys, "construct", "threshold", "--n", "4", "--m", "3")
    assert code == 0 and len(parse_family(out)) == 5
    code, out, _ = run(capsys, "construct", "tilde", "--s", "3", "--m", "1", "--l", "1", "--n", "5", "--i", "1")
    assert code == 0 and len(parse_family(out)) == 26
    p = tmp_path / "k.txt"
    code, _, _ = run(capsys, "construct", "kleitman", "--s", "2", "--m", "1", "-o", str(p))
    assert code == 0 and parse_family(p.read_text()).to_lists() == [[1], [1, 2]]


def test_construct_ar_lower_uses_oracle_base(capsys):
    code, out, _ = run(capsys, "construct", "ar-lower", "--n", "5", "--k", "2", "--s", "3")
    assert code == 0
    c = parse_coloring(out)
    assert c.num_colors == 5


def test_construct_errors(capsys):
    code, _, err = run(capsys, "construct", "nope")
    assert code == 1 and "unknown construction" in err
    code, _, err = run(capsys, "construct", "hm", "--n", "5")
    assert code == 1 and "--k" in err
    code, _, err = run(capsys, "construct", "tilde", "--s", "3", "--m", "1", "--l", "1", "--n", "3", "--i", "1")
    assert code == 2 and "n >= q" in err


@pytest.mark.parametrize(
    "argv, exact",
    [
        (["theorem2-rhs", "--s", "2", "--m", "1", "--l", "1"], "8"),
        (["almost-matching", "--s", "2", "--m", "3"], "5"),
        (["ar-upper-refined", "--n", "10", "--k", "2", "--s", "3", "--e", "9"], "15"),
        (["kleitman-rhs", "--n", "4", "--s", "3"], "37/3"),
        (["lemma61-rhs", "--n", "6", "--k", "2", "--s", "2", "--u", "7/2"], "12"),
    ],
)
def test_eval(capsys, argv, exact):
    code, out, _ = run(capsys, "eval", *argv)
    d = json.loads(out)
    assert code == 0 and d["exact"] == exact and d["formula"] == argv[0]
    assert isinstance(d["floor"], int)


def test_eval_predicates_and_errors(capsys):
    code, out, _ = run(capsys, "eval", "thm4-range", "--n", "81", "--k", "3", "--s", "2")
    assert json.loads(out)["value"] is True
    code, _, _ = run(capsys, "eval", "nope")
    assert code == 1
    code, _, _ = run(capsys, "eval", "ekr", "--n", "3", "--k", "2")
    assert code == 2


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {
        "star": "n=4\n1,2\n1,3\n1,4\n",
        "matching": "n=6\n1,2\n3,4\n5,6\n",
        "empty": "n=3\n{}\n1\n",
        "shifted": "n=3\n1\n2\n1,2\n",
        "bad": "n=3\n3,1\n",
    }.items():
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def test_check_properties(capsys, files):
    code, out, _ = run(capsys, "check", "cross-dependent", files["star"], files["star"])
    assert code == 0 and json.loads(out)["value"] is True
    code, out, _ = run(capsys, "check", "nu", files["matching"])
    assert json.loads(out)["value"] == 3
    code, out, _ = run(capsys, "check", "tau", files["star"])
    assert json.loads(out) == {"property": "tau", "value": 1, "cover": [1]}
    code, out, _ = run(capsys, "check", "shifted", files["shifted"])
    assert json.loads(out)["value"] is True
    code, out, _ = run(capsys, "check", "up-set", files["shifted"])
    assert json.loads(out)["value"] is False
    code, out, _ = run(capsys, "check", "almost-matching", "--s", "2", files["star"])
    assert json.loads(out)["value"] is True
    code, out, _ = run(capsys, "check", "q-dependent", "--q", "4", files["matching"], files["matching"])
    assert json.loads(out)["value"] is False


def test_check_errors(capsys, files):
    code, _, err = run(capsys, "check", "tau", files["empty"])
    assert code == 2 and "UndefinedCoverError" in err
    code, _, _ = run(capsys, "check", "nu", files["bad"])
    assert code == 2
    code, _, _ = run(capsys, "check", "nu", files["star"], files["star"])
    assert code == 1
    code, _, _ = run(capsys, "check", "nu", "/nonexistent/file")
    assert code == 2


def test_check_rainbow(capsys, tmp_path):
    p = tmp_path / "c.txt"
    assert main(["construct", "ar-lower", "--n", "6", "--k", "2", "--s", "3", "-o", str(p)]) == 0
    capsys.readouterr()
    code, out, _ = run(capsys, "check", "rainbow", "--s", "3", str(p))
    assert code == 0 and json.loads(out)["value"] is False
    code, out, _ = run(capsys, "check", "rainbow", "--s", "2", str(p))
    assert json.loads(out)["value"] is True


def test_search(capsys, monkeypatch):
    code, out, _ = run(capsys, "search", "cross-dependent", "--n", "3", "--s", "2")
    d = json.loads(out)
    assert code == 0 and d["optimum"] == 8
    code, out, _ = run(capsys, "search", "q-dependent", "--n", "4", "--s", "2", "--q", "2", "--threads", "2", "--max-witnesses", "1")
    assert json.loads(out)["optimum"] == 26 and len(json.loads(out)["witnesses"]) == 1
    code, out, _ = run(capsys, "search", "no-matching", "--n", "6", "--k", "2", "--s", "3")
    assert json.loads(out)["optimum"] == 10
    code, out, _ = run(capsys, "search", "shadow-lemma", "--n", "3")
    assert code == 0 and json.loads(out)["passed"] is True
    code, out, _ = run(capsys, "search", "lemma61", "--n", "6", "--k", "2", "--s", "2", "--u", "4")
    assert code == 0 and json.loads(out)["maximum"] == "12"
    monkeypatch.setenv("XFAM_MAX_NODES", "3")
    code, _, err = run(capsys, "search", "cross-dependent", "--n", "4", "--s", "3")
    assert code == 2 and "CapacityError" in err


def test_table_csv_and_json(capsys):
    code, out, _ = run(capsys, "table", "theorem2", "--max-n", "4")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "params,formula,oracle,equal"
    assert len(lines) == 1 + 4 * 4 and all(line.endswith("True") for line in lines[1:])
    code, out, _ = run(capsys, "table", "shadow-lemma", "--n", "4", "--format", "json")
    assert code == 0 and json.loads(out)["rows"] == [{"params": {"n": 4}, "formula": "holds", "oracle": "holds", "equal": True}]
    code, out, _ = run(capsys, "table", "ekr", "--max-n", "8", "--k", "2")
    assert code == 0 and len(out.strip().splitlines()) == 6


@pytest.mark.parametrize("name", ["theorem7", "emc-k2", "almost", "ar-small"])
def test_other_tables_all_equal(capsys, name):
    code, out, _ = run(capsys, "table", name)
    assert code == 0, out


def test_table_unknown_and_usage(capsys):
    assert run(capsys, "table", "nope")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 1


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "xfam", "eval", "binomial", "--n", "5", "--k", "2"],
        capture_output=True, text=True,
    )
    assert r.returncode == 0 and json.loads(r.stdout)["exact"] == "10"
