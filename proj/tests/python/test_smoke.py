"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import melange


def test_product_stuffle():
    assert melange.product("stuffle", "y1", "y1") == "2 y1.y1 + 1 y2"


def test_product_terms_shuffle():
    terms = melange.product_terms("shuffle", "a.b", "c")
    assert terms == [("1", "a.b.c"), ("1", "a.c.b"), ("1", "c.a.b")]


def test_product_with_parameter():
    assert melange.product("qshuffle:q=1/2", "y1", "y2") == (
        "1 y1.y2 + 1 y2.y1 + 1/2 y3"
    )


def test_unit_law():
    assert melange.product("stuffle", "", "y1.y2") == "1 y1.y2"


def test_lyndon_words():
    assert melange.lyndon_words("a,b", 3) == ["a", "a.a.b", "a.b", "a.b.b", "b"]
    assert melange.is_lyndon("a.a.b")
    assert not melange.is_lyndon("b.a")


def test_decompose_round_trip_values():
    coeffs = {
        alpha: Fraction(c)
        for c, alpha in melange.decompose("stuffle", "y1.y1", "y1,y2")
    }
    assert coeffs["(y1)^2"] == Fraction(1, 2)
    assert coeffs["(y2)^1"] == Fraction(-1, 2)


def test_lawcheck():
    report = melange.lawcheck("stuffle", "y1,y2,y3")
    assert report["commutative"] is True
    assert report["associative"] == "yes"
    assert report["dualizable"] is True
    assert report["law_class"] == "I"

    report = melange.lawcheck("muffle", "x[1/2],x[2],x[1]")
    assert report["dualizable"] is False


def test_coproducts():
    conc = melange.coproduct_conc("a.b")
    assert ("1", "a", "b") in conc
    phi = melange.coproduct_phi("stuffle", "y2", "y1")
    assert ("1", "y1", "y1") in phi
    with pytest.raises(ValueError):
        melange.coproduct_phi("huffle", "(y1,z[0])", "(y1,z[0])")


def test_zetacheck():
    lhs, rhs, equal = melange.zetacheck("stuffle", 2, "y1", "y1")
    assert equal
    assert Fraction(lhs) == Fraction(9, 4)

    lhs, rhs, equal = melange.zetacheck("huffle", 10, "(y2,z[0])", "(y3,z[1/2])")
    assert equal
    assert Fraction(lhs) == Fraction(rhs)


def test_truncated_m():
    assert Fraction(melange.truncated_m(2, [1])) == Fraction(3, 2)
    assert Fraction(melange.truncated_m(2, [1], ["1/2"], ["0"])) == Fraction(5, 8)


def test_partial_fraction():
    a_coeffs, b_coeffs = melange.partial_fraction(2, 3, "0", "1/2")
    assert [Fraction(c) for c in a_coeffs] == [Fraction(-48), Fraction(-8)]
    assert [Fraction(c) for c in b_coeffs] == [
        Fraction(48),
        Fraction(-16),
        Fraction(4),
    ]


def test_errors_surface_as_value_errors():
    with pytest.raises(ValueError):
        melange.product("stuffle", "y0", "y1")
    with pytest.raises(ValueError):
        melange.product("nosuchlaw", "y1", "y1")
