"""Functorial expression parsing."""

import pytest

from fitlab.errors import InvalidPrime, ParseError
from fitlab.exprs import parse_functorial_expr


def test_single_atoms():
    for name in ("Z", "Fit", "Soc", "Phi", "Fstar", "Rsol"):
        gamma = parse_functorial_expr(name)
        assert gamma.name == name


def test_primed_atoms():
    assert parse_functorial_expr("Rp[2]").name == "Rp[2]"
    assert parse_functorial_expr("Op[7]").name == "Op[7]"


def test_star_left_associative(G):
    gamma = parse_functorial_expr("Rp[2]*Fstar*Rp[2]")
    assert gamma.name == "Rp[2]*Fstar*Rp[2]"
    # Left-first semantics: on S5 the 2-soluble radical is trivial, the
    # quasinilpotent lift is A5 and the final radical pulls back to S5.
    assert gamma(G("S5")).order == 120


def test_whitespace_tolerated():
    gamma = parse_functorial_expr("  Fit * Z ")
    assert gamma.name == "Fit*Z"


def test_parsed_matches_builtin(G):
    g = G("S4")
    assert parse_functorial_expr("Fit")(g).order == 4
    assert parse_functorial_expr("Fit*Fit")(g).order == 12
    assert parse_functorial_expr("Op[2]")(g).order == 4


def test_unknown_atom_position():
    with pytest.raises(ParseError) as exc:
        parse_functorial_expr("Fit*Borel")
    assert "position 4" in str(exc.value)
    assert "Borel" in str(exc.value)


def test_empty_expression():
    with pytest.raises(ParseError):
        parse_functorial_expr("")
    with pytest.raises(ParseError):
        parse_functorial_expr("   ")


def test_trailing_star():
    with pytest.raises(ParseError):
        parse_functorial_expr("Fit*")


def test_leading_star():
    with pytest.raises(ParseError):
        parse_functorial_expr("*Fit")


def test_bad_character_position():
    with pytest.raises(ParseError) as exc:
        parse_functorial_expr("Fit+Z")
    assert "position 3" in str(exc.value)


def test_rp_needs_prime_brackets():
    with pytest.raises(ParseError):
        parse_functorial_expr("Rp")
    with pytest.raises(ParseError):
        parse_functorial_expr("Op*Fit")
    with pytest.raises(ParseError):
        parse_functorial_expr("Rp[")
    with pytest.raises(ParseError):
        parse_functorial_expr("Rp[2")
    with pytest.raises(ParseError):
        parse_functorial_expr("Rp[x]")


def test_plain_atom_rejects_brackets():
    with pytest.raises(ParseError):
        parse_functorial_expr("Fit[2]")


def test_composite_prime_must_be_prime():
    with pytest.raises(InvalidPrime):
        parse_functorial_expr("Rp[4]")
    with pytest.raises(InvalidPrime):
        parse_functorial_expr("Op[1]")
