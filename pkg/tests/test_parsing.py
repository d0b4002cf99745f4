import pytest
from hypothesis import given, settings

from mideal.core import PrimeIdeal, format_ideal
from mideal.errors import ParseError, PreconditionError
from mideal.parsing import (
    parse_edges,
    parse_ideal,
    parse_ideal_with_names,
    parse_monomial,
    parse_prime,
    parse_set_list,
    parse_vars,
    read_edge_list,
)

from conftest import MIXED_TEXT, RP2_TEXT, VERONESE_TEXT
from strategies import ideals


def test_triangle_with_explicit_vars():
    I = parse_ideal("(x*y, x*z, y*z)", parse_vars("x,y,z"))
    assert I.gens == ((1, 1, 0), (1, 0, 1), (0, 1, 1))


def test_rp2_generator_list():
    p = parse_ideal_with_names(RP2_TEXT)
    assert p.names == ("x", "y", "z", "t", "u", "v")
    assert p.ideal.n == 6 and len(p.ideal.gens) == 10
    assert set(p.ideal.degrees()) == {3}


def test_veronese_text():
    p = parse_ideal_with_names(VERONESE_TEXT)
    assert p.names == ("x1", "x2", "x3")
    assert set(p.ideal.gens) == {(3, 1, 0), (3, 0, 1), (2, 2, 0), (2, 1, 1), (1, 2, 1)}


def test_indexed_names_sorted_numerically_with_gaps():
    p = parse_ideal_with_names("x10*x2, x3")
    assert p.names == tuple(f"x{i}" for i in range(1, 11))


def test_juxtaposition_and_powers():
    assert parse_ideal("x^2y, xy^2") == parse_ideal("x^2*y, x*y^2")


def test_zero_and_unit():
    assert parse_ideal("0", ("x", "y")).is_zero
    assert parse_ideal("()", ("x",)).is_zero
    assert parse_ideal("1", ("x", "y")).is_unit
    assert parse_ideal("x, 1", ("x", "y")).is_unit


@pytest.mark.parametrize("text,pos", [("x+y", 1), ("(x,y", 4), ("x^", 2), ("3x", 0), ("x,,y", 2)])
def test_parse_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse_ideal(text)
    assert info.value.position == pos


def test_inconsistent_variable_set():
    with pytest.raises(ParseError):
        parse_ideal("x*w", ("x", "y"))


def test_vars_count_and_list():
    assert parse_vars("3") == ("x1", "x2", "x3")
    assert parse_vars("(a,b)") == ("a", "b")
    with pytest.raises(ParseError):
        parse_vars("a,a")


def test_monomial_and_prime():
    names = ("x", "y", "z")
    assert parse_monomial("x*z^2", names) == (1, 0, 2)
    assert parse_prime("(x,z)", names) == PrimeIdeal.of(3, [0, 2])
    assert parse_prime("1,2", names) == PrimeIdeal.of(3, [0, 1])
    with pytest.raises(ParseError):
        parse_prime("w", names)


def test_edges_inline_and_file():
    assert parse_edges("1-2, 2-3,1-3") == [(0, 1), (1, 2), (0, 2)]
    assert read_edge_list("1 2\n\n# comment\n2 3  # tail\n") == [(0, 1), (1, 2)]
    with pytest.raises(ParseError):
        parse_edges("1-2,2")
    with pytest.raises(ParseError):
        read_edge_list("1 2 3\n")
    with pytest.raises(PreconditionError):
        parse_edges("2-2")


def test_set_list():
    assert parse_set_list("1,2;2,3") == [frozenset({0, 1}), frozenset({1, 2})]


@pytest.mark.parametrize("text", [RP2_TEXT, VERONESE_TEXT, MIXED_TEXT, "x, y^2", "x^2, y^2", "1"])
def test_round_trip_regression_ideals(text):
    p = parse_ideal_with_names(text, ("x", "y") if text == "1" else None)
    again = parse_ideal_with_names(p.format(), p.names)
    assert again.ideal == p.ideal


@settings(max_examples=200, deadline=None)
@given(ideals(max_n=5, allow_unit=True))
def test_round_trip_random(I):
    names = tuple(f"x{i + 1}" for i in range(I.n))
    assert parse_ideal(format_ideal(I, names), names) == I
