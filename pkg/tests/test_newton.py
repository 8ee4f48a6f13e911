import random
from fractions import Fraction

import pytest

from newtondual.errors import DomainError
from newtondual.newton import (FormSet, canonical_restrictions, directrix,
                               dual_form, dual_set, newton_matrix)
from newtondual.poly import Polynomial
from newtondual.samples import random_restricted_formset


def variables(nvars):
    return FormSet([Polynomial.variable(i, nvars) for i in range(nvars)])


class TestNewtonMatrix:
    def test_variables_give_unit_columns(self):
        m = newton_matrix(variables(3))
        assert m.cols == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        assert m.frame == (1, 1, 1)
        assert m.blocks == (1, 1, 1)

    def test_single_form(self, P):
        m = newton_matrix(P("x0^2 + x1*x2", 3))
        assert m.cols == ((2, 0, 0), (0, 1, 1))
        assert m.frame == (Fraction(1), Fraction(1))

    def test_paper_set_is_stochastic(self, FS):
        g = FS(["x1^2*x3^3", "x0*x1^3*x2", "x1*x2^3*x3", "x2^3*x3^2"], 4)
        m = newton_matrix(g)
        assert len(m.cols) == 4
        assert all(sum(col) == 5 for col in m.cols)

    def test_reconstruction(self, FS):
        g = FS(["x0^2 - 2*x1*x2", "x0*x1 + 1/2*x2^2"], 3)
        assert newton_matrix(g).reconstruct() == g


class TestDirectrix:
    def test_variables(self):
        assert directrix(variables(4)) == (1, 1, 1, 1)

    def test_mixed_form(self, P):
        assert directrix(P("x0^2 + x1*x2", 3)) == (2, 1, 1)

    def test_single_monomial(self, P):
        assert directrix(P("x0^2*x1^3*x2", 3)) == (2, 3, 1)


class TestDualSet:
    def test_magnus_reproduction(self, FS):
        for n in range(1, 5):
            expected = []
            for omit in range(n + 1):
                expo = tuple(0 if i == omit else 1 for i in range(n + 1))
                expected.append(Polynomial.monomial(expo, n + 1))
            assert dual_set(variables(n + 1)) == FormSet(expected)

    def test_paper_example(self, FS):
        g = FS(["x1^2*x3^3", "x0*x1^3*x2", "x1*x2^3*x3", "x2^3*x3^2"], 4)
        expected = FS(["x0*x1*x2^3", "x2^2*x3^3", "x0*x1^2*x3^2", "x0*x1^3*x3"], 4)
        assert dual_set(g) == expected

    def test_conic_reverses(self, FS):
        g = FS(["x0^2", "x0*x1", "x1^2"], 2)
        assert dual_set(g) == FS(["x1^2", "x0*x1", "x0^2"], 2)

    def test_degenerate_dual_rejected(self, FS):
        with pytest.raises(DomainError):
            dual_set(FS(["x0*x1", "2*x0*x1"], 2))

    def test_dual_form_of_monomial_is_constant(self, P):
        assert dual_form(P("x0^2*x1", 2)) == Polynomial.one(2)


class TestCanonicalRestrictions:
    def test_plain_variables(self, FS):
        assert canonical_restrictions(FS(["x0", "x1"], 2))

    def test_common_factor(self, FS):
        assert not canonical_restrictions(FS(["x0^2", "x0*x1"], 2))

    def test_missing_variable(self, FS):
        assert not canonical_restrictions(FS(["x0", "x1"], 3))


class TestDualProperties:
    def test_involution_on_restricted_sets(self):
        rng = random.Random(1234)
        for _ in range(60):
            g = random_restricted_formset(rng, max_degree=5, max_terms=5)
            assert dual_set(dual_set(g)) == g

    def test_degree_frames_and_term_counts(self):
        rng = random.Random(4321)
        for _ in range(60):
            g = random_restricted_formset(rng)
            alpha = directrix(g)
            dual = dual_set(g)
            expected_degree = sum(alpha) - g.degree
            assert dual.degree == expected_degree
            for f, fd in zip(g.forms, dual.forms):
                assert len(f.terms) == len(fd.terms)
                assert sorted(f.coefficients()) == sorted(fd.coefficients())

    def test_dual_preserves_restrictions(self):
        rng = random.Random(5678)
        for _ in range(40):
            g = random_restricted_formset(rng)
            assert canonical_restrictions(dual_set(g))
