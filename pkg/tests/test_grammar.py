import pytest

from conftest import sc, sci
from virab.algebra import AlgElement, BasisSymbol, C, L, W, format_element
from virab.grammar import (
    format_bipoly,
    format_unipoly,
    parse_bipoly,
    parse_element,
    parse_symbol,
    parse_unipoly,
)
from virab.polynomials import BiPoly, UniPoly
from virab.scalars import I, MINUS_ONE, ONE, ParseError, ZERO


def test_parse_bipoly_basics():
    assert parse_bipoly("2*s^2*t - 1/2") == BiPoly({(2, 1): sc(2), (0, 0): sc("-1/2")})
    assert parse_bipoly("t") == BiPoly({(0, 1): ONE})
    assert parse_bipoly("s + s") == BiPoly({(1, 0): sc(2)})
    assert format_bipoly(parse_bipoly("s + s")) == "2*s"
    assert parse_bipoly("0").is_zero
    assert parse_bipoly("-s^3") == BiPoly({(3, 0): MINUS_ONE})


def test_parse_bipoly_aliases():
    assert parse_bipoly("L0^2*W0") == parse_bipoly("s^2*t")
    assert parse_bipoly("3*W0") == BiPoly({(0, 1): sc(3)})


def test_parse_mixed_coefficients():
    assert parse_bipoly("(3/4-2i)*s") == BiPoly({(1, 0): sci("3/4", -2)})
    assert parse_bipoly("i*t - 2i") == BiPoly({(0, 1): I, (0, 0): sci(0, -2)})


def test_parse_unipoly():
    assert parse_unipoly("t^3 - 2*t + 5") == UniPoly({3: ONE, 1: sc(-2), 0: sc(5)})
    assert parse_unipoly("W0") == UniPoly({1: ONE})
    with pytest.raises(ParseError):
        parse_unipoly("s")  # wrong variable for the one-variable grammar


def test_whitespace_tolerance():
    assert parse_bipoly("  2 * s ^ 2  -  t ") == BiPoly({(2, 0): sc(2), (0, 1): MINUS_ONE})


def test_parse_errors_have_positions():
    for bad in ("", "s +", "2**s", "s^", "(2", "s t"):
        with pytest.raises(ParseError):
            parse_bipoly(bad)
    try:
        parse_bipoly("s t")
    except ParseError as err:
        assert err.pos == 2


def test_round_trip_random_bipolys(rng):
    for _ in range(150):
        poly = BiPoly(
            {
                (rng.randint(0, 4), rng.randint(0, 4)): sci(
                    rng.randint(-6, 6), rng.randint(-3, 3)
                )
                for _ in range(rng.randint(0, 6))
            }
        )
        assert parse_bipoly(format_bipoly(poly)) == poly


def test_round_trip_random_unipolys(rng):
    for _ in range(150):
        poly = UniPoly(
            {rng.randint(0, 6): sc(rng.randint(-9, 9)) for _ in range(rng.randint(0, 5))}
        )
        assert parse_unipoly(format_unipoly(poly)) == poly


def test_parse_symbol():
    assert parse_symbol("L:2") == L(2)
    assert parse_symbol("W:-1") == W(-1)
    assert parse_symbol("C:1") == C(1)
    assert parse_symbol(" L:10 ") == L(10)
    for bad in ("L2", "L:", "X:1", "L:1.5", "L:+2", ""):
        with pytest.raises(ParseError):
            parse_symbol(bad)


def test_parse_element():
    e = parse_element("-4*L:0 + 1/2*C:1")
    assert e == AlgElement({BasisSymbol("L", 0): sc(-4), BasisSymbol("C", 1): sc("1/2")})
    assert parse_element("0").is_zero
    assert parse_element("L:2") == AlgElement({L(2): ONE})
    assert parse_element("-W:-3") == AlgElement({W(-3): MINUS_ONE})
    assert parse_element("(1+i)*W:2 - L:1") == AlgElement(
        {W(2): sci(1, 1), L(1): MINUS_ONE}
    )
    # like terms combine
    assert parse_element("L:1 + L:1") == AlgElement({L(1): sc(2)})


def test_element_round_trip(rng):
    kinds = [L, W]
    for _ in range(100):
        terms = {}
        for _ in range(rng.randint(0, 4)):
            sym = rng.choice(kinds)(rng.randint(-5, 5))
            terms[sym] = sci(rng.randint(-4, 4), rng.randint(-2, 2))
        e = AlgElement(terms)
        assert parse_element(format_element(e)) == e


def test_parse_element_errors():
    for bad in ("L:1 +", "2*", "2 L:1", "L:1 * L:2", "C:"):
        with pytest.raises(ParseError):
            parse_element(bad)
