import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newtondual.errors import (AmbientMismatchError, DomainError,
                               NotDivisibleError)
from newtondual.poly import Polynomial, poly_gcd, poly_gcd_list
from newtondual.samples import random_form


def poly_strategy(nvars=3, max_degree=3, max_terms=4):
    exponent = st.tuples(*[st.integers(0, max_degree) for _ in range(nvars)])
    coeff = st.fractions(min_value=-4, max_value=4).filter(lambda c: c != 0)
    return st.dictionaries(exponent, coeff, min_size=0, max_size=max_terms) \
        .map(lambda d: Polynomial.from_dict(d, nvars))


class TestMul:
    def test_difference_of_squares(self, P):
        assert P("x0 + x1", 2) * P("x0 - x1", 2) == P("x0^2 - x1^2", 2)

    def test_one_is_identity(self, P):
        p = P("x0^2*x1 - 2/3*x2^3", 3)
        assert p * Polynomial.one(3) == p

    def test_term_by_term_expansion(self, P):
        assert P("x0^2 + x1*x2", 3) * P("x1*x2", 3) == \
            P("x0^2*x1*x2 + x1^2*x2^2", 3)

    def test_ambient_mismatch(self, P):
        with pytest.raises(AmbientMismatchError):
            P("x0", 2) * P("x0", 3)

    @settings(max_examples=60)
    @given(poly_strategy(), poly_strategy())
    def test_commutative(self, p, q):
        assert p * q == q * p

    @settings(max_examples=40)
    @given(poly_strategy(2, 2, 3), poly_strategy(2, 2, 3), poly_strategy(2, 2, 3))
    def test_associative(self, p, q, r):
        assert (p * q) * r == p * (q * r)


class TestExactDiv:
    def test_linear_factor(self, P):
        assert P("x0^2 - x1^2", 2).exact_div(P("x0 + x1", 2)) == P("x0 - x1", 2)

    def test_multiply_back(self, P):
        num = P("x0^2*x1*x2 + x1^2*x2^2", 3)
        den = P("x1*x2", 3)
        quo = num.exact_div(den)
        assert quo == P("x0^2 + x1*x2", 3)
        assert quo * den == num

    def test_not_divisible(self, P):
        with pytest.raises(NotDivisibleError):
            P("x0 + x1", 3).exact_div(P("x2", 3))

    def test_zero_divisor(self, P):
        with pytest.raises(DomainError):
            P("x0", 2).exact_div(Polynomial.zero(2))

    def test_round_trip_500(self):
        rng = random.Random(20240817)
        for _ in range(500):
            nvars = rng.randint(1, 4)
            p = random_form(rng, nvars, rng.randint(0, 5) or 1)
            q = random_form(rng, nvars, rng.randint(1, 5))
            assert (p * q).exact_div(q) == p


class TestEvaluate:
    def test_magnus_style_substitution(self, P):
        p = P("x0^2 + x1*x2", 3)
        subst = [P("x1*x2", 3), P("x0*x2", 3), P("x0*x1", 3)]
        expected = P("x1*x2", 3) * p
        assert p.evaluate(subst) == expected

    def test_identity_substitution(self, P):
        p = P("x0^3 - 5*x1*x2^2", 3)
        subst = [Polynomial.variable(i, 3) for i in range(3)]
        assert p.evaluate(subst) == p

    def test_swap(self, P):
        p = P("x0*x1", 2)
        assert p.evaluate([P("x1", 2), P("x0", 2)]) == p

    def test_length_mismatch(self, P):
        with pytest.raises(AmbientMismatchError):
            P("x0*x1", 2).evaluate([P("x0", 2)])

    def test_composition_law(self):
        rng = random.Random(7)
        for _ in range(40):
            nvars = rng.randint(2, 3)
            p = random_form(rng, nvars, rng.randint(1, 3))
            sigma = [random_form(rng, nvars, rng.randint(1, 2))
                     for _ in range(nvars)]
            tau = [random_form(rng, nvars, rng.randint(1, 2))
                   for _ in range(nvars)]
            composed = [s.evaluate(tau) for s in sigma]
            assert p.evaluate(sigma).evaluate(tau) == p.evaluate(composed)


class TestMonomialContent:
    def test_binomial(self, P):
        mono, rest = P("x0^2*x1 + x0*x1^2", 2).monomial_content()
        assert mono == P("x0*x1", 2)
        assert rest == P("x0 + x1", 2)

    def test_trivial_content(self, P):
        mono, rest = P("x0 + x1", 2).monomial_content()
        assert mono == Polynomial.one(2)
        assert rest == P("x0 + x1", 2)

    def test_pure_monomial(self, P):
        mono, rest = P("x0^2*x1^3", 2).monomial_content()
        assert mono == P("x0^2*x1^3", 2)
        assert rest == Polynomial.one(2)

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            Polynomial.zero(2).monomial_content()

    def test_rest_touches_zero_in_every_variable(self):
        rng = random.Random(99)
        for _ in range(200):
            p = random_form(rng, rng.randint(1, 4), rng.randint(1, 5))
            _, rest = p.monomial_content()
            for i in range(p.nvars):
                assert min(e[i] for e, _ in rest.terms) == 0


class TestBasics:
    def test_degree_of_zero_is_error(self):
        with pytest.raises(DomainError):
            Polynomial.zero(2).degree()

    def test_zero_is_empty_terms(self, P):
        assert P("x0 - x0", 2) == Polynomial.zero(2)
        assert not P("0", 2)

    def test_canonical_order_graded_lex(self, P):
        p = P("x1^3 + x0*x2 + x0^2", 3)
        assert [e for e, _ in p.terms] == [(0, 3, 0), (2, 0, 0), (1, 0, 1)]

    def test_pow(self, P):
        p = P("x0 + x1", 2)
        assert p ** 3 == p * p * p
        assert p ** 0 == Polynomial.one(2)

    def test_hashable_and_immutable_equality(self, P):
        seen = {P("x0 + x1", 2), P("x0 + x1", 2)}
        assert len(seen) == 1


class TestGcd:
    def test_common_factor(self, P):
        a = P("x0 + x1", 2) * P("x0 - x1", 2)
        b = P("x0 + x1", 2) * P("x0", 2)
        assert poly_gcd(a, b) == P("x0 + x1", 2)

    def test_coprime(self, P):
        assert poly_gcd(P("x0 + x1", 3), P("x2", 3)).is_constant

    def test_monomials(self, P):
        assert poly_gcd(P("x0^2*x1", 2), P("x0*x1^2", 2)) == P("x0*x1", 2)

    def test_random_products(self):
        rng = random.Random(5)
        for _ in range(60):
            nvars = rng.randint(2, 3)
            common = random_form(rng, nvars, rng.randint(1, 2))
            a = random_form(rng, nvars, rng.randint(1, 2)) * common
            b = random_form(rng, nvars, rng.randint(1, 2)) * common
            g = poly_gcd(a, b)
            assert g.divides(a) and g.divides(b)
            # any common divisor divides the gcd
            assert common.divides(g)

    def test_gcd_list(self, P):
        forms = [P("x0^2*x1*x2", 3), P("x0*x1^2*x2", 3), P("x0*x1*x2^2", 3)]
        assert poly_gcd_list(forms) == P("x0*x1*x2", 3)
