"""The Magnus involution and executable verifiers for the evaluation
identities relating it to the Newton complementary dual.

Every verifier returns its witnessing monomial multiplier (not a bare
boolean) so callers can cross-check exponents against independently computed
directrix vectors.  A zero coordinate produced by cancellation is reported as
DegenerateInputError, never silently passed.
"""

from __future__ import annotations

from collections import Counter

from .errors import (AmbientMismatchError, DegenerateInputError, DomainError,
                     IdentityViolationError)
from .newton import FormSet, directrix, dual_form, dual_forms, newton_matrix
from .poly import Polynomial


def magnus(n):
    """The n+1 squarefree degree-n monomials x0..xn each omitting one
    variable, in omission order: the Magnus reciprocal involution."""
    if n < 1:
        raise DomainError("the Magnus involution needs n >= 1")
    nvars = n + 1
    forms = []
    for omit in range(nvars):
        expo = tuple(0 if i == omit else 1 for i in range(nvars))
        forms.append(Polynomial.monomial(expo, nvars))
    return FormSet(forms)


def _monomial_from_exponent(expo, nvars):
    if any(e < 0 for e in expo):
        raise IdentityViolationError(f"negative multiplier exponent {expo}")
    return Polynomial.monomial(expo, nvars)


def eval_identity(g):
    """Check g_j(magnus) == x^(d - beta) * dual_j for every member and return
    the multiplier, beta being the directrix of the whole set."""
    if isinstance(g, Polynomial):
        g = FormSet([g])
    d = g.degree
    beta = directrix(g)
    mult = _monomial_from_exponent(tuple(d - b for b in beta), g.nvars)
    hats = magnus(g.nvars - 1)
    duals = dual_forms(g)
    for form, dual in zip(g.forms, duals):
        if form.evaluate(hats.forms) != mult * dual:
            raise IdentityViolationError(
                f"evaluation identity failed on {form}")
    return mult


def matrix_identity_check(g):
    """Compare the Newton matrix of g(magnus) with N(magnus).N(g) as
    multisets of (column, frame entry) pairs."""
    if not g.terms:
        raise DomainError("zero form has no Newton matrix")
    n = g.nvars - 1
    hats = magnus(n)
    left = newton_matrix(g.evaluate(hats.forms))
    left_pairs = Counter(zip(left.cols, left.frame))
    # N(magnus) is the all-ones matrix minus the identity, so a column a of
    # N(g) maps to the column with entries sum(a) - a_i
    right_pairs = Counter()
    for expo, coeff in g.terms:
        s = sum(expo)
        right_pairs[(tuple(s - e for e in expo), coeff)] += 1
    return left_pairs == right_pairs


def product_rule(p, q):
    """dual(p*q) == dual(p) * dual(q), duals taken per form."""
    if p.nvars != q.nvars:
        raise AmbientMismatchError("product rule needs one common ambient")
    return dual_form(p * q) == dual_form(p) * dual_form(q)


def sum_rule(p, q):
    """Multipliers (M_sum, M_p, M_q) with M_sum * dual(p+q)_j equal to
    M_p * dual(p)_j + M_q * dual(q)_j coordinatewise."""
    if p.nvars != q.nvars:
        raise AmbientMismatchError("sum rule needs one common ambient")
    if len(p) != len(q):
        raise DomainError("sum rule needs sets of equal length")
    if p.degree != q.degree:
        raise DomainError("sum rule needs sets of one common degree")
    d = p.degree
    sums = [a + b for a, b in zip(p.forms, q.forms)]
    if any(not s.terms for s in sums):
        raise DegenerateInputError("a coordinatewise sum cancelled to zero")
    s = FormSet(sums)
    m_sum = _monomial_from_exponent(tuple(d - e for e in directrix(s)), p.nvars)
    m_p = _monomial_from_exponent(tuple(d - e for e in directrix(p)), p.nvars)
    m_q = _monomial_from_exponent(tuple(d - e for e in directrix(q)), p.nvars)
    dual_s = dual_forms(s)
    dual_p = dual_forms(p)
    dual_q = dual_forms(q)
    for j in range(len(s)):
        if m_sum * dual_s[j] != m_p * dual_p[j] + m_q * dual_q[j]:
            raise IdentityViolationError(f"sum rule failed at coordinate {j}")
    return m_sum, m_p, m_q


def composite_identity(g, h):
    """Check g(dual of h) == x^(d*alpha - beta) * dual(g(h)) and return the
    multiplier; alpha, beta are the directrix vectors of h and of g(h)."""
    if len(h) != g.nvars:
        raise AmbientMismatchError(
            f"g lives in {g.nvars} variables but h has {len(h)} forms")
    d = g.degree
    composed = [form.evaluate(h.forms) for form in g.forms]
    if any(not c.terms for c in composed):
        raise DegenerateInputError("a coordinate of g(h) cancelled to zero")
    gh = FormSet(composed)
    alpha = directrix(h)
    beta = directrix(gh)
    mult = _monomial_from_exponent(
        tuple(d * a - b for a, b in zip(alpha, beta)), h.nvars)
    h_duals = dual_forms(h)
    gh_duals = dual_forms(gh)
    for form, dual in zip(g.forms, gh_duals):
        if form.evaluate(h_duals) != mult * dual:
            raise IdentityViolationError(
                f"composite identity failed on {form}")
    return mult
