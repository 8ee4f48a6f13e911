import random

import pytest

from newtondual.errors import DegenerateInputError, DomainError
from newtondual.identities import (composite_identity, eval_identity, magnus,
                                   matrix_identity_check, product_rule,
                                   sum_rule)
from newtondual.newton import FormSet, directrix, dual_form
from newtondual.poly import Polynomial
from newtondual.samples import random_form, random_formset


def variables(nvars):
    return FormSet([Polynomial.variable(i, nvars) for i in range(nvars)])


class TestMagnus:
    def test_small_cases(self, FS):
        assert magnus(1) == FS(["x1", "x0"], 2)
        assert magnus(2) == FS(["x1*x2", "x0*x2", "x0*x1"], 3)
        assert magnus(3) == FS(["x1*x2*x3", "x0*x2*x3", "x0*x1*x3", "x0*x1*x2"], 4)

    def test_rejects_zero(self):
        with pytest.raises(DomainError):
            magnus(0)


class TestEvalIdentity:
    def test_variables_give_unit_multiplier(self):
        assert eval_identity(variables(3)) == Polynomial.one(3)

    def test_binomial_quadric(self, P):
        assert eval_identity(P("x0^2 + x1*x2", 3)) == P("x1*x2", 3)

    def test_paper_multiplier(self, FS):
        g = FS(["x1^2*x3^3", "x0*x1^3*x2", "x1*x2^3*x3", "x2^3*x3^2"], 4)
        # degree 5, set directrix (1, 3, 3, 3)
        assert directrix(g) == (1, 3, 3, 3)
        assert eval_identity(g) == FS(["x0^4*x1^2*x2^2*x3^2"], 4).forms[0]

    def test_never_raises_on_random_sets(self):
        rng = random.Random(90125)
        for _ in range(100):
            eval_identity(random_formset(rng))


class TestMatrixIdentity:
    def test_monomial(self, P):
        assert matrix_identity_check(P("x0^2*x1", 3))

    def test_binomial(self, P):
        assert matrix_identity_check(P("x0^2 + x1*x2", 3))

    def test_random_forms(self):
        rng = random.Random(42)
        for _ in range(100):
            nvars = rng.randint(2, 4)
            assert matrix_identity_check(random_form(rng, nvars, rng.randint(1, 4)))


class TestProductRule:
    def test_variables(self, P):
        assert product_rule(P("x0", 2), P("x0", 2))

    def test_difference_of_squares(self, P):
        assert product_rule(P("x0 + x1", 2), P("x0 - x1", 2))
        assert dual_form(P("x0^2 - x1^2", 2)) == P("x1^2 - x0^2", 2)

    def test_random_pairs(self):
        rng = random.Random(77)
        for _ in range(100):
            nvars = rng.randint(2, 3)
            p = random_form(rng, nvars, rng.randint(1, 3))
            q = random_form(rng, nvars, rng.randint(1, 3))
            assert product_rule(p, q)

    def test_powers(self):
        rng = random.Random(78)
        for _ in range(30):
            p = random_form(rng, 3, rng.randint(1, 3))
            for k in (2, 3):
                assert dual_form(p ** k) == dual_form(p) ** k


class TestSumRule:
    def test_equal_sets(self, FS):
        p = FS(["x0^2 + x1*x2", "x0*x1"], 3)
        m_sum, m_p, m_q = sum_rule(p, p)
        assert m_sum == m_p == m_q

    def test_degenerate_sum(self, FS):
        p = FS(["x0 + x1"], 2)
        q = FS(["-x0 - x1"], 2)
        with pytest.raises(DegenerateInputError):
            sum_rule(p, q)

    def test_random_pairs(self):
        rng = random.Random(31)
        checked = 0
        while checked < 60:
            p = random_formset(rng)
            q = FormSet([random_form(rng, p.nvars, p.degree)
                         for _ in range(len(p))])
            if all((a + b).terms for a, b in zip(p.forms, q.forms)):
                sum_rule(p, q)
                checked += 1


class TestCompositeIdentity:
    def test_h_variables_reduces_to_eval(self, FS):
        g = FS(["x0^2 + x1*x2", "x0*x1"], 3)
        assert composite_identity(g, variables(3)) == eval_identity(g)

    def test_g_variables(self, FS):
        h = FS(["x0^2", "x0*x1 + x1^2", "x1*x2"], 3)
        assert composite_identity(variables(3), h) == Polynomial.one(3)

    def test_conic_on_linear_pair(self, FS):
        g = FS(["x0^2", "x0*x1", "x1^2"], 2)
        h = FS(["x0 + x1", "x0 - x1"], 2)
        mult = composite_identity(g, h)
        # multiplier exponent equals d*alpha - beta from the directrices
        composed = FormSet([f.evaluate(h.forms) for f in g.forms])
        expected = tuple(2 * a - b
                         for a, b in zip(directrix(h), directrix(composed)))
        assert mult == Polynomial.monomial(expected, 2)

    def test_multiplier_exponent_matches_directrices(self):
        rng = random.Random(64)
        checked = 0
        while checked < 40:
            nvars = rng.randint(2, 3)
            d = rng.randint(1, 2)
            g = FormSet([random_form(rng, nvars, d, 3)
                         for _ in range(rng.randint(1, 3))])
            target = rng.randint(2, 3)
            dh = rng.randint(1, 2)
            h = FormSet([random_form(rng, target, dh, 3) for _ in range(nvars)])
            if any(not f.evaluate(h.forms).terms for f in g.forms):
                continue
            mult = composite_identity(g, h)
            composed = FormSet([f.evaluate(h.forms) for f in g.forms])
            expected = tuple(g.degree * a - b
                             for a, b in zip(directrix(h), directrix(composed)))
            assert mult == Polynomial.monomial(expected, h.nvars)
            checked += 1
