"""Bihomogeneous polynomials, the psi transform, and comparison of Rees
presentation ideals.

The ambient k[x, y] is split into an x-block of nx variables and a y-block of
ny variables; a bihomogeneous polynomial has one bidegree (d_x, d_y) across
all terms.  psi dualizes the x-exponent block of each term against the
directrix of the x-block Newton matrix while keeping coefficients and
y-exponents; by convention the x-block Newton matrix of a d_x = 0 polynomial
is the zero matrix, so psi restricts to the identity on k[y].  General
elements of k[x, y] are handled by extending psi additively over their
bihomogeneous components.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (AmbientMismatchError, DomainError, IdentityViolationError,
                     RestrictionsNotSatisfiedError, XVariableFactorError)
from .groebner import (Ideal, eliminate, ideal_equal, ideal_quotient,
                       normal_form, saturate)
from .identities import magnus
from .newton import canonical_restrictions, dual_forms, dual_set
from .poly import Polynomial, poly_gcd_list


class BiPolynomial:
    """Nonzero bihomogeneous polynomial over an x-block and a y-block."""

    __slots__ = ("nx", "ny", "poly", "bidegree")

    def __init__(self, poly, nx, ny):
        if poly.nvars != nx + ny:
            raise AmbientMismatchError(
                f"{poly.nvars} variables but blocks of {nx} + {ny}")
        if not poly.terms:
            raise DomainError("the zero polynomial has no bidegree")
        first = poly.terms[0][0]
        self.bidegree = (sum(first[:nx]), sum(first[nx:]))
        for expo, _ in poly.terms:
            if (sum(expo[:nx]), sum(expo[nx:])) != self.bidegree:
                raise DomainError("terms of mixed bidegree; decompose first")
        self.nx = nx
        self.ny = ny
        self.poly = poly

    @classmethod
    def parse(cls, text, nx, ny):
        from .parsing import parse_polynomial
        return cls(parse_polynomial(text, nx, ny), nx, ny)

    def xexp(self, expo):
        return expo[:self.nx]

    def yexp(self, expo):
        return expo[self.nx:]

    def __eq__(self, other):
        if not isinstance(other, BiPolynomial):
            return NotImplemented
        return (self.nx, self.ny, self.poly) == (other.nx, other.ny, other.poly)

    def __hash__(self):
        return hash((self.nx, self.ny, self.poly))

    def __repr__(self):
        from .parsing import render_polynomial
        return (f"BiPolynomial({render_polynomial(self.poly, self.nx, self.ny)!r}, "
                f"nx={self.nx}, ny={self.ny})")


def bihomogeneous_components(poly, nx, ny):
    """Split a polynomial of k[x, y] into its bihomogeneous pieces."""
    if poly.nvars != nx + ny:
        raise AmbientMismatchError("component split needs matching blocks")
    buckets = {}
    for expo, coeff in poly.terms:
        bideg = (sum(expo[:nx]), sum(expo[nx:]))
        buckets.setdefault(bideg, {})[expo] = coeff
    return [BiPolynomial(Polynomial.from_dict(d, nx + ny), nx, ny)
            for _, d in sorted(buckets.items())]


def bi_newton(p):
    """Coefficient frame and the aligned x- and y-exponent matrices, columns
    in canonical term order.  d_x = 0 yields the zero matrix for the x-block."""
    frame = p.poly.coefficients()
    nx_cols = tuple(e[:p.nx] for e in p.poly.exponents())
    ny_cols = tuple(e[p.nx:] for e in p.poly.exponents())
    return frame, nx_cols, ny_cols


def _x_directrix(p):
    return tuple(max(e[i] for e, _ in p.poly.terms) for i in range(p.nx))


def psi(p):
    """Dualize the x-exponent block against its own directrix; frame and
    y-block unchanged.  Identity on k[y]."""
    if p.bidegree[0] == 0:
        return p
    beta = _x_directrix(p)
    acc = {}
    for expo, coeff in p.poly.terms:
        new_x = tuple(b - e for b, e in zip(beta, expo[:p.nx]))
        acc[new_x + expo[p.nx:]] = coeff
    return BiPolynomial(Polynomial.from_dict(acc, p.nx + p.ny), p.nx, p.ny)


def psi_flat(poly, nx, ny):
    """psi extended additively over bihomogeneous components."""
    total = Polynomial.zero(nx + ny)
    for component in bihomogeneous_components(poly, nx, ny):
        total = total + psi(component).poly
    return total


def _magnus_substitution(nx, ny):
    """Substitution sending x_i to its Magnus form and fixing every y_j."""
    total = nx + ny
    subst = [f.extend(total) for f in magnus(nx - 1).forms]
    subst.extend(Polynomial.variable(nx + j, total) for j in range(ny))
    return subst


def bidual_eval(p):
    """Verify p(magnus, y) == x^(d_x - beta) * psi(p) and return the
    multiplier (a monomial supported on the x-block)."""
    dx = p.bidegree[0]
    if dx < 1:
        raise DomainError("the evaluation identity needs d_x >= 1")
    beta = _x_directrix(p)
    mult = Polynomial.monomial(
        tuple(dx - b for b in beta) + (0,) * p.ny, p.nx + p.ny)
    lhs = p.poly.evaluate(_magnus_substitution(p.nx, p.ny))
    if lhs != mult * psi(p).poly:
        raise IdentityViolationError(f"bigraded evaluation identity failed on {p}")
    return mult


@dataclass(frozen=True)
class PsiWitnesses:
    """Monomial witnesses for the near-additivity and near-multiplicativity
    of psi, normalized by their common monomial gcd."""

    add: tuple        # (M, M1, M2): M*psi(p+q) == M1*psi(p) + M2*psi(q)
    mul: tuple        # (M, M'):     M*psi(p*q) == M'*psi(p)*psi(q)


def _strip_common(monomials):
    shared = tuple(min(m.terms[0][0][i] for m in monomials)
                   for i in range(monomials[0].nvars))
    if not any(shared):
        return monomials
    div = Polynomial.monomial(shared, monomials[0].nvars)
    return tuple(m.exact_div(div) for m in monomials)


def psi_laws_witness(p, q):
    """Verified monomial witnesses tying psi(p+q) and psi(p*q) to psi(p)
    and psi(q)."""
    if (p.nx, p.ny) != (q.nx, q.ny):
        raise AmbientMismatchError("witness computation needs one ambient")
    nvars = p.nx + p.ny
    one = Polynomial.one(nvars)

    def x_multiplier(bipoly):
        dx = bipoly.bidegree[0]
        if dx == 0:
            return one
        beta = _x_directrix(bipoly)
        return Polynomial.monomial(
            tuple(dx - b for b in beta) + (0,) * bipoly.ny, nvars)

    # additive part: distinct bidegrees split, so the witnesses are trivial
    if p.bidegree != q.bidegree:
        add = (one, one, one)
    else:
        total = p.poly + q.poly
        if not total.terms:
            add = (one, one, one)
        else:
            s = BiPolynomial(total, p.nx, p.ny)
            add = _strip_common((x_multiplier(s), x_multiplier(p), x_multiplier(q)))
        m, m1, m2 = add
        if m * psi_flat(total, p.nx, p.ny) != m1 * psi(p).poly + m2 * psi(q).poly:
            raise IdentityViolationError("additive psi witness failed")

    product = BiPolynomial(p.poly * q.poly, p.nx, p.ny)
    mul = _strip_common((x_multiplier(product),
                         x_multiplier(p) * x_multiplier(q)))
    if mul[0] * psi(product).poly != mul[1] * psi(p).poly * psi(q).poly:
        raise IdentityViolationError("multiplicative psi witness failed")
    return PsiWitnesses(add=add, mul=mul)


def push_relation(p, g):
    """If p(x, g) == 0, assert the pushed relation p(magnus, dual set) == 0
    and return True; return False when p(x, g) is nonzero."""
    if isinstance(p, Polynomial):
        components = bihomogeneous_components(p, g.nvars, len(g))
        if len(components) != 1:
            raise DomainError("push_relation needs a bihomogeneous input")
        p = components[0]
    if p.ny != len(g) or p.nx != g.nvars:
        raise AmbientMismatchError("biform blocks do not match the form set")
    nx = p.nx
    id_x = [Polynomial.variable(i, nx) for i in range(nx)]
    at_g = p.poly.evaluate(id_x + list(g.forms))
    if at_g.terms:
        return False
    hats = magnus(nx - 1).forms
    duals = dual_forms(g)
    pushed = p.poly.evaluate(list(hats) + duals)
    if pushed.terms:
        raise IdentityViolationError(
            "vanishing relation did not push to the dual side")
    return True


def rees_ideal(g, deadline=None):
    """Presentation ideal of the Rees algebra of the forms: eliminate the tag
    t from (y_j - t*g_j)."""
    nx = g.nvars
    ny = len(g)
    total = nx + ny + 1
    tag = Polynomial.variable(nx + ny, total)
    gens = []
    for j, f in enumerate(g.forms):
        gens.append(Polynomial.variable(nx + j, total) - tag * f.extend(total))
    mixed = Ideal(gens, nx, ny + 1)
    return eliminate(mixed, [nx + ny], deadline)


def psi_preimage(q, g, deadline=None):
    """For q in the dual set's Rees ideal with no x-variable factor, return
    p = psi(q), checking psi(p) == q and membership of p in the Rees ideal
    of g."""
    if isinstance(q, Polynomial):
        q = BiPolynomial(q, g.nvars, len(g))
    mins = q.poly.min_exponents()
    for i in range(q.nx):
        if mins[i] > 0:
            raise XVariableFactorError(f"x{i} divides the biform")
    dual_rees = rees_ideal(dual_set(g), deadline)
    if normal_form(q.poly, dual_rees.groebner(deadline=deadline)).terms:
        raise DomainError("biform is not in the Rees ideal of the dual set")
    p = psi(q)
    if psi(p) != q:
        raise IdentityViolationError("psi did not invert on an x-factor-free biform")
    direct_rees = rees_ideal(g, deadline)
    if normal_form(p.poly, direct_rees.groebner(deadline=deadline)).terms:
        raise IdentityViolationError("psi image left the Rees ideal")
    return p


@dataclass
class MainReesReport:
    """Outcome of the Rees-ideal comparison for one form set."""

    dual: object                      # the dual form set
    generators_used: tuple            # generating set of the Rees ideal whose
                                      # psi images define the subideal
    psi_images: tuple
    images_in_dual_ideal: bool        # every psi image reduces to 0
    saturation_equal: bool            # saturating the subideal by x0...xn
                                      # recovers the dual Rees ideal
    witness: object                   # monomial M with (subideal : M) equal
                                      # to the dual Rees ideal
    rees: object = field(default=None, repr=False)
    dual_rees: object = field(default=None, repr=False)
    subideal: object = field(default=None, repr=False)

    @property
    def ok(self):
        return (self.images_in_dual_ideal and self.saturation_equal
                and self.witness is not None)


def _graded_monomials(nvars, degree):
    if nvars == 1:
        yield (degree,)
        return
    for head in range(degree, -1, -1):
        for tail in _graded_monomials(nvars - 1, degree - head):
            yield (head,) + tail


def main_rees_check(g, deadline=None, witness_degree_cap=8):
    """Compare the Rees ideal of g with the Rees ideal of its dual through
    psi: image containment, saturation equality, and an explicit quotient
    witness found by graded search."""
    if not canonical_restrictions(g):
        raise RestrictionsNotSatisfiedError(
            "form set must have trivial gcd and full variable support")
    nx = g.nvars
    ny = len(g)
    dual = dual_set(g)
    direct = rees_ideal(g, deadline)
    dual_ideal = rees_ideal(dual, deadline)
    generators = direct.groebner(deadline=deadline).basis
    images = tuple(psi_flat(p, nx, ny) for p in generators)
    dual_gb = dual_ideal.groebner(deadline=deadline)
    images_ok = all(not normal_form(q, dual_gb).terms for q in images)
    subideal = Ideal(images, nx, ny)
    all_vars = Polynomial.monomial((1,) * nx + (0,) * ny, nx + ny)
    saturation_ok = ideal_equal(saturate(subideal, all_vars, deadline),
                                dual_ideal, deadline)
    witness = None
    for degree in range(witness_degree_cap + 1):
        for expo in _graded_monomials(nx, degree):
            candidate = Polynomial.monomial(expo + (0,) * ny, nx + ny)
            quotient = ideal_quotient(subideal, candidate, deadline)
            if ideal_equal(quotient, dual_ideal, deadline):
                witness = candidate
                break
        if witness is not None:
            break
    return MainReesReport(dual=dual, generators_used=tuple(generators),
                          psi_images=images, images_in_dual_ideal=images_ok,
                          saturation_equal=saturation_ok, witness=witness,
                          rees=direct, dual_rees=dual_ideal, subideal=subideal)
