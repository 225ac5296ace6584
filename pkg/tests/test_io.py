import numpy as np
import pytest
from hypothesis import given, strategies as st

from degreelab.field import PolyRing
from degreelab.groebner import IdealPresentation
from degreelab.io import ParseError, format_ideal, parse_ideal
from degreelab.polynomial import random_form


def test_two_generator_example():
    i = parse_ideal("ring n=2 char=32003 vars=x,y\ngens: x^2+y^2, x*y\n")
    assert i.ring.names == ("x", "y") and len(i.gens) == 2
    assert [g.to_string() for g in i.gens] == ["x^2+y^2", "x*y"]


def test_empty_gens_is_zero_ideal():
    i = parse_ideal("ring n=3 char=32003 vars=a,b,c\ngens:\n")
    assert i.gens == ()


def test_coefficients_reduced_and_products_expanded():
    i = parse_ideal("ring n=2 char=7 vars=x,y\ngens: 9*x - 2*y, (x+y)^2\n  y^3\n")
    assert [g.to_string() for g in i.gens] == ["2*x-2*y", "x^2+2*x*y+y^2", "y^3"]


def test_comments_and_blank_lines():
    text = "# header next\n\nring n=2 char=32003 vars=x,y   # two vars\ngens: x*y  # one\n\n  y^2\n"
    assert [g.to_string() for g in parse_ideal(text).gens] == ["x*y", "y^2"]


@pytest.mark.parametrize("text, line, col, fragment", [
    ("ring n=2 char=32003 vars=x,y\ngens: x^2 + y\n", 2, 7, "not homogeneous"),
    ("ring n=2 char=32003 vars=x,y\ngens: x^2+z^2\n", 2, 11, "unknown variable"),
    ("ring n=2 char=32003 vars=x,y\ngens: x^2+*y^2\n", 2, 11, "unexpected"),
    ("ring n=2 char=32003 vars=x,y\ngens: x^2, , y\n", 2, 11, "empty generator"),
    ("gens: x\n", 1, 1, "expected header"),
    ("ring n=2 char=32003 vars=x,y\nx^2\n", 2, 1, "gens:"),
    ("ring n=2 char=9 vars=x,y\ngens: x\n", 1, None, "not an odd prime"),
    ("ring n=2 char=2 vars=x,y\ngens: x\n", 1, None, "not an odd prime"),
    ("ring n=2 char=32003 vars=x\ngens: x\n", 1, None, "vars lists 1"),
])
def test_parse_errors(text, line, col, fragment):
    with pytest.raises(ParseError) as info:
        parse_ideal(text)
    assert (info.value.line, info.value.col) == (line, col)
    assert fragment in str(info.value)


def test_missing_header():
    with pytest.raises(ParseError):
        parse_ideal("# nothing here\n")


@st.composite
def ideals(draw):
    n = draw(st.integers(1, 4))
    p = draw(st.sampled_from([3, 7, 32003]))
    ring = PolyRing(n, p)
    rng = np.random.default_rng(draw(st.integers(0, 2**32)))
    count = draw(st.integers(0, 4))
    gens = tuple(random_form(ring, int(rng.integers(1, 4)), rng) for _ in range(count))
    return IdealPresentation(ring, tuple(g for g in gens if not g.is_zero()))


@given(ideals())
def test_round_trip(i):
    text = format_ideal(i)
    back = parse_ideal(text)
    assert back.gens == i.gens
    assert format_ideal(back) == text
