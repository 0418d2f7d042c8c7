import json

import pytest
from hypothesis import given

from conftest import structures
from tourmat import formats
from tourmat.solvers import solve_all


def test_parse_text_with_comments():
    s = formats.parse_text("# cycle\n\nn 3\nmu 1 2\n  mu 2 3\nmu 3 1\n")
    assert s.edges() == [(0, 1), (1, 2), (2, 0)]


def test_unlisted_pairs_are_ties():
    s = formats.parse_text("n 3\nmu 1 2\n")
    assert s.T[0, 2] and s.T[1, 2] and not s.T[0, 1]


def test_duplicate_lines_are_harmless():
    assert formats.parse_text("n 2\nmu 1 2\nmu 1 2\n").edges() == [(0, 1)]


@pytest.mark.parametrize(
    "text, line",
    [
        ("n 3\nmu 1 4\n", 2),
        ("n 3\nmu 1 1\n", 2),
        ("n 3\nmu 1 2\n# c\nmu 2 1\n", 4),
        ("mu 1 2\nn 3\n", 1),
        ("n 3\nfoo 1 2\n", 2),
        ("n x\n", 1),
        ("n 3\nmu 1\n", 2),
        ("n 3\nn 3\n", 2),
        ("n 0\n", 1),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(formats.InstanceParseError) as exc:
        formats.parse_text(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_missing_header():
    with pytest.raises(formats.InstanceParseError):
        formats.parse_text("# nothing\n")


def test_json_instance():
    s = formats.parse_instance('{"n": 3, "mu_edges": [[1, 2], [2, 3]]}')
    assert s.edges() == [(0, 1), (1, 2)]


def test_json_profile():
    s = formats.parse_instance('{"n": 3, "profile": [[1, 2, 3], [2, 3, 1], [3, 1, 2]]}')
    assert sorted(s.edges()) == [(0, 1), (1, 2), (2, 0)]


@pytest.mark.parametrize(
    "text",
    [
        "{",
        "[1, 2]",
        '{"n": 0}',
        '{"n": 2, "mu_edges": [[1]]}',
        '{"n": 2, "mu_edges": [[1, 3]]}',
        '{"n": 2, "profile": [[1, 1]]}',
    ],
)
def test_bad_json(text):
    with pytest.raises(formats.InstanceParseError):
        formats.parse_json(text)


@given(structures(max_n=12))
def test_round_trip(s):
    assert formats.parse_text(formats.to_text(s)) == s
    assert formats.parse_json(formats.to_json(s)) == s


def test_report_text(fixture):
    text = formats.report_text(solve_all(fixture))
    for line in ("UC1: [3,4,5,6]", "MU: [4,5,6]", "UT: [3,4,5,6]", "MD: [1,2,3,4,5,6]", "d_mu: 3", "CW: []"):
        assert line in text.splitlines()


def test_report_json_stable(fixture):
    a = formats.report_json(solve_all(fixture))
    b = formats.report_json(solve_all(fixture))
    assert a == b
    doc = json.loads(a)
    assert doc["concepts"]["UC2"] == [2, 3, 4, 5, 6]
    assert doc["d_mu"] == 3 and doc["m"] is None
