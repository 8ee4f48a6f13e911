"""de Jonquieres maps with center (0:...:0:1): construction and validation,
closure under the Newton complementary dual, and the Magnus-commutation
criterion for monomial support maps.

A map is assembled as (q*g_0 : ... : q*g_{n-1} : f) where (g_0 : ... :
g_{n-1}) is a Cremona map of the hyperplane x_n = 0 and q, f are relatively
prime monoids in x_n (total degree at most one in x_n, a recorded
convention), at least one of positive x_n-degree.
"""

from __future__ import annotations

from .errors import (AmbientMismatchError, DegreeMismatchError, DomainError,
                     IdentityViolationError, NoPositiveXnDegreeError,
                     NonMonomialSupportError, NotCoprimeError, NotMonoidError)
from .maps import (RationalMap, compose, magnus_map, monomial_cremona_inverse,
                   reduce_representative, same_map)
from .newton import FormSet, directrix, dual_form, dual_set
from .poly import Polynomial, poly_gcd


class JonquieresMap:
    """Validated de Jonquieres map; assembled holds the n+1 coordinate forms."""

    __slots__ = ("support", "q", "f", "assembled")

    def __init__(self, support, q, f, assembled):
        self.support = support
        self.q = q
        self.f = f
        self.assembled = assembled

    @property
    def nvars(self):
        return self.assembled.nvars

    def __repr__(self):
        return (f"JonquieresMap(support={self.support!r}, q={self.q}, "
                f"f={self.f})")


def _degree_or_zero(p):
    return 0 if p.is_constant else p.degree()


def _dual_or_constant(p):
    """Single-form dual extended to constants by the zero-matrix convention."""
    return p if p.is_constant else dual_form(p)


def make_jonquieres(support, q, f):
    """Validate the pieces and assemble (q*g_0, ..., q*g_{n-1}, f)."""
    if not isinstance(support, RationalMap):
        support = reduce_representative(support)
    n = support.rep.nvars
    if support.target_dim != n - 1:
        raise AmbientMismatchError("support must be a self-map of the hyperplane")
    if q.nvars != n + 1 or f.nvars != n + 1:
        raise AmbientMismatchError(f"q and f must live in {n + 1} variables")
    for name, p in (("q", q), ("f", f)):
        if not p.terms:
            raise DomainError(f"{name} must be nonzero")
        if not p.is_homogeneous:
            raise DomainError(f"{name} must be homogeneous")
        if p.degree_in(n) > 1:
            raise NotMonoidError(f"{name} has degree above 1 in x{n}")
    if not poly_gcd(q, f).is_constant:
        raise NotCoprimeError("q and f share a nontrivial factor")
    if q.degree_in(n) == 0 and f.degree_in(n) == 0:
        raise NoPositiveXnDegreeError("neither q nor f involves the last variable")
    if _degree_or_zero(q) + support.rep.degree != _degree_or_zero(f):
        raise DegreeMismatchError(
            "deg q + deg support must equal deg f "
            f"({_degree_or_zero(q)} + {support.rep.degree} != {_degree_or_zero(f)})")
    if all(g.is_term for g in support.rep.forms):
        # monomial support: its Cremona property is decidable, so decide it
        monomial_cremona_inverse(support)
    assembled = FormSet([q * g.extend(n + 1) for g in support.rep.forms] + [f])
    return JonquieresMap(support, q, f, assembled)


def dual_jonquieres(jmap):
    """Dual of the assembled set, re-decomposed as a de Jonquieres map.

    The dual set factors as (T1 * dual(q) * dual(support), T2 * dual(f)) with
    monomial multipliers read off the directrix vectors of the assembled set,
    the support set, q, and f.
    """
    n = jmap.nvars - 1
    alpha = directrix(jmap.assembled)
    support_embedded = FormSet([g.extend(n + 1) for g in jmap.support.rep.forms])
    beta = directrix(support_embedded)
    gamma = (0,) * (n + 1) if jmap.q.is_constant else directrix(jmap.q)
    delta = (0,) * (n + 1) if jmap.f.is_constant else directrix(jmap.f)
    t1 = Polynomial.monomial(
        tuple(a - g - b for a, g, b in zip(alpha, gamma, beta)), n + 1)
    t2 = Polynomial.monomial(tuple(a - d for a, d in zip(alpha, delta)), n + 1)
    new_q = t1 * _dual_or_constant(jmap.q)
    new_f = t2 * _dual_or_constant(jmap.f)
    new_support = reduce_representative(dual_set(jmap.support.rep))
    dual = make_jonquieres(new_support, new_q, new_f)
    if dual.assembled != dual_set(jmap.assembled):
        raise IdentityViolationError(
            "re-decomposed dual disagrees with the dual of the assembled set")
    return dual


def commute_criterion(jmap):
    """(criterion, commutes): the content-free parts satisfy dual(q') == f',
    and the map actually commutes with the Magnus involution.  The two
    booleans agree on every valid input; commutation is always re-checked by
    brute composition."""
    for g in jmap.support.rep.forms:
        if not g.is_monomial:
            raise NonMonomialSupportError(
                "criterion requires a monomial support map with coefficient-1 "
                "coordinates")
    _, q_core = jmap.q.monomial_content()
    _, f_core = jmap.f.monomial_content()
    criterion = _dual_or_constant(q_core) == f_core
    fmap = reduce_representative(jmap.assembled)
    m = magnus_map(jmap.nvars - 1)
    commutes = same_map(compose(m, fmap), compose(fmap, m))
    return criterion, commutes
