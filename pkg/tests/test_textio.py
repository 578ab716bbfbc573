import pytest
from hypothesis import given, strategies as st

from xfam import Coloring, SetFamily, k_layer
from xfam.core.textio import (
    format_coloring,
    format_family,
    parse_coloring,
    parse_family,
    read_family,
    write_family,
)
from xfam.errors import FormatError


def test_format_family_layout():
    f = SetFamily.from_sets(5, [[2, 4, 5], [], [1, 3]])
    assert format_family(f) == "n=5\n{}\n1,3\n2,4,5\n"


@given(st.integers(0, 6).flatmap(lambda n: st.sets(st.integers(0, (1 << n) - 1)).map(lambda ms: SetFamily(n, ms))))
def test_family_round_trip(f):
    assert parse_family(format_family(f)) == f


@pytest.mark.parametrize(
    "text",
    [
        "",
        "m=3\n1\n",
        "n=3\n1,1\n",
        "n=3\n2,1\n",
        "n=3\n4\n",
        "n=3\n0\n",
        "n=3\n1,2\n1,2\n",
        "n=3\na\n",
        "n=x\n",
    ],
)
def test_parser_rejects(text):
    with pytest.raises(FormatError):
        parse_family(text)


def test_blank_lines_are_ignored():
    assert parse_family("n=2\n\n1\n\n") == SetFamily.from_sets(2, [[1]])


def test_coloring_round_trip():
    layer = k_layer(4, 2).masks
    c = Coloring(4, 2, [SetFamily(4, layer[:1]), SetFamily(4, layer[1:])])
    text = format_coloring(c)
    assert text.startswith("n=4\nk=2\n\nclass=1\n1,2\n")
    assert parse_coloring(text) == c


@pytest.mark.parametrize(
    "text",
    [
        "n=3\n",
        "n=3\nk=2\n1,2\n",
        "n=3\nk=2\nclass=1\n1,2\nclass=1\n1,3\n2,3\n",
        "n=3\nk=2\nclass=1\n1,2\n",
        "n=3\nk=2\nclass=1\n1,2\n1,3\n\nclass=2\n1,3\n2,3\n",
    ],
)
def test_coloring_parser_rejects(text):
    with pytest.raises(FormatError):
        parse_coloring(text)


def test_file_helpers(tmp_path):
    f = SetFamily.from_sets(3, [[1], [2, 3]])
    p = tmp_path / "f.txt"
    write_family(p, f)
    assert read_family(p) == f
