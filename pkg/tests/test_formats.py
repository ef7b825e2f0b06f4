from fractions import Fraction as F

import pytest

from unimodshift.formats import (
    FormatError,
    format_rational,
    load_poly,
    parse_grid,
    parse_rational,
    poly_from_dict,
    poly_to_dict,
)
from unimodshift.sequence_core import CoeffSeq


@pytest.mark.parametrize("text, value", [("3", F(3)), ("-1/2", F(-1, 2)), (" 6/4 ", F(3, 2)), ("0", F(0))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["0.5", "1e3", "1/0", "", "a/b", "1//2"])
def test_parse_rational_rejects(text):
    with pytest.raises(FormatError):
        parse_rational(text)


def test_format_round_trip():
    for x in [F(0), F(7), F(-3, 8), F(10**30 + 1, 3)]:
        assert parse_rational(format_rational(x)) == x
    assert format_rational(F(4, 2)) == "2"


def test_grid():
    assert parse_grid("1/2,1,2,4") == [F(1, 2), 1, 2, 4]
    with pytest.raises(FormatError):
        parse_grid(" , ")


def test_poly_document_round_trip(tmp_path):
    p = CoeffSeq([F(1, 3), 2, F(7, 2)])
    doc = poly_to_dict(p, label="x")
    assert doc == {"degree": 2, "coefficients": ["1/3", "2", "7/2"], "label": "x"}
    assert poly_from_dict(doc) == p
    path = tmp_path / "p.json"
    path.write_text('{"degree": 1, "coefficients": ["1/2", 1]}')
    assert load_poly(path) == CoeffSeq([F(1, 2), 1])


@pytest.mark.parametrize(
    "doc",
    [
        {"degree": 2, "coefficients": ["1", "2"]},
        {"degree": 1, "coefficients": ["-1", "2"]},
        {"degree": 1, "coefficients": ["0.5", "2"]},
        {"coefficients": ["1"]},
        {"degree": 0, "coefficients": ["0"]},
    ],
)
def test_poly_document_rejects(doc):
    with pytest.raises(FormatError):
        poly_from_dict(doc)
