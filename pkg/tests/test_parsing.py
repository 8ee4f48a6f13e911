import random

import pytest

from newtondual.errors import ParseError, UndeclaredVariableError
from newtondual.parsing import parse_polynomial, render_polynomial
from newtondual.poly import Polynomial
from newtondual.samples import random_bipolynomial, random_coeff, random_exponent


def test_two_term_cubic():
    p = parse_polynomial("x0^2*x1 + 3*x2^3", 3)
    assert len(p.terms) == 2
    assert p.is_homogeneous and p.degree() == 3
    assert p == Polynomial.from_dict({(2, 1, 0): 1, (0, 0, 3): 3}, 3)


def test_biform_generator():
    p = parse_polynomial("x3*y2 - x1*y3", 4, 4)
    assert p == Polynomial.from_dict(
        {(0, 0, 0, 1, 0, 0, 1, 0): 1, (0, 1, 0, 0, 0, 0, 0, 1): -1}, 8)


def test_undeclared_variable_position():
    with pytest.raises(UndeclaredVariableError) as err:
        parse_polynomial("x0 + x5", 3)
    assert err.value.line == 1
    assert err.value.col == 6


def test_y_without_block():
    with pytest.raises(UndeclaredVariableError):
        parse_polynomial("y0", 2)


def test_syntax_error_position():
    with pytest.raises(ParseError) as err:
        parse_polynomial("x0 + * x1", 2)
    assert (err.value.line, err.value.col) == (1, 6)


def test_multiline_position():
    with pytest.raises(ParseError) as err:
        parse_polynomial("x0 +\n x1 ^ ^", 2)
    assert err.value.line == 2


def test_rational_coefficients():
    p = parse_polynomial("2/3*x0*x1^2 - 1/2", 2)
    from fractions import Fraction
    assert dict(p.terms) == {(1, 2): Fraction(2, 3), (0, 0): Fraction(-1, 2)}


def test_whitespace_insignificant():
    assert parse_polynomial(" x0^2+  x1 *x2 ", 3) == \
        parse_polynomial("x0^2 + x1*x2", 3)


def test_no_implicit_multiplication():
    with pytest.raises(ParseError):
        parse_polynomial("2 x0", 2)


def test_render_fixed_points():
    cases = ["0", "1", "-2", "x0", "-x0", "x0^2 - x1^2", "5/3*x0*x1^2",
             "x0*x1 - 1"]
    for text in cases:
        p = parse_polynomial(text, 4, 4)
        assert render_polynomial(p, 4, 4) == text


def test_render_reorders_to_canonical():
    # graded lex puts x1*y3 above x3*y2, whatever order the input used
    p = parse_polynomial("x3*y2 - x1*y3", 4, 4)
    assert render_polynomial(p, 4, 4) == "-x1*y3 + x3*y2"


def test_round_trip_1000_random():
    rng = random.Random(314159)
    for _ in range(1000):
        nx = rng.randint(1, 4)
        ny = rng.choice([0, 0, rng.randint(1, 3)])
        terms = {}
        for _ in range(rng.randint(0, 5)):
            expo = random_exponent(rng, nx, rng.randint(0, 4))
            expo += random_exponent(rng, ny, rng.randint(0, 3)) if ny else ()
            terms[expo] = random_coeff(rng)
        p = Polynomial.from_dict(terms, nx + ny)
        assert parse_polynomial(render_polynomial(p, nx, ny), nx, ny) == p


def test_bipolynomial_round_trip():
    rng = random.Random(2718)
    for _ in range(100):
        p = random_bipolynomial(rng, 3, 2, rng.randint(0, 3), rng.randint(0, 3))
        assert parse_polynomial(render_polynomial(p, 3, 2), 3, 2) == p
