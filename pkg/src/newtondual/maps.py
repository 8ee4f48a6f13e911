"""Rational maps between projective spaces as reduced form tuples.

A map is stored through a representative form set; reduction divides out the
gcd of the coordinates.  Inversion is certified through the source inversion
factor: a pair (F, G) is inverse when every coordinate of the unreduced
composite G(F) equals x_i times one common polynomial C.  Only monomial maps
are ever inverted from scratch, by a bounded exponent-vector search over the
log matrix; everything else takes the inverse as input.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (AmbientMismatchError, DomainError, NotBirationalError,
                     NotInverseError)
from .groebner import Ideal, eliminate
from .identities import magnus
from .newton import FormSet, directrix, dual_form, dual_forms
from .poly import Polynomial, poly_gcd_list


class RationalMap:
    """Projective rational map with a reduced representative."""

    __slots__ = ("rep", "reduced")

    def __init__(self, rep, reduced=True):
        if len(rep) < 2:
            raise DomainError("a rational map needs at least two coordinates")
        self.rep = rep
        self.reduced = reduced

    @property
    def source_dim(self):
        return self.rep.nvars - 1

    @property
    def target_dim(self):
        return len(self.rep) - 1

    def __eq__(self, other):
        if not isinstance(other, RationalMap):
            return NotImplemented
        return same_map(self, other)

    def __repr__(self):
        inner = " : ".join(str(f) for f in self.rep)
        return f"RationalMap({inner})"


def reduce_representative(forms):
    """Divide the gcd out of all coordinates and wrap as a reduced map."""
    if isinstance(forms, RationalMap):
        forms = forms.rep
    if isinstance(forms, FormSet):
        forms = forms.forms
    forms = tuple(forms)
    if any(not f.terms for f in forms):
        raise DomainError("zero coordinate in a rational map representative")
    g = poly_gcd_list(list(forms))
    if not g.is_constant:
        forms = tuple(f.exact_div(g) for f in forms)
    return RationalMap(FormSet(forms), reduced=True)


def identity_map(n):
    """The identity of projective n-space."""
    nvars = n + 1
    return RationalMap(FormSet([Polynomial.variable(i, nvars)
                                for i in range(nvars)]))


def magnus_map(n):
    """The Magnus reciprocal involution as a rational map."""
    return RationalMap(magnus(n))


def compose(outer, inner):
    """outer after inner, reduced."""
    if outer.source_dim != inner.target_dim:
        raise AmbientMismatchError(
            f"cannot compose: source dim {outer.source_dim} vs target dim "
            f"{inner.target_dim}")
    forms = [f.evaluate(inner.rep.forms) for f in outer.rep.forms]
    return reduce_representative(forms)


def same_map(left, right):
    """True when the reduced representatives agree up to one nonzero rational
    scalar."""
    if left.source_dim != right.source_dim or left.target_dim != right.target_dim:
        return False
    a = left.rep if left.reduced else reduce_representative(left.rep).rep
    b = right.rep if right.reduced else reduce_representative(right.rep).rep

    def normalized(fs):
        lead = fs.forms[0].leading_term()[1]
        return tuple(f.scale(1 / lead) for f in fs.forms)

    return normalized(a) == normalized(b)


def inversion_factor(forward, backward):
    """The source inversion factor C with backward_i(forward) == x_i * C for
    every coordinate; certifies that backward represents forward's inverse."""
    n = forward.source_dim
    if forward.target_dim != n or backward.source_dim != n or backward.target_dim != n:
        raise AmbientMismatchError("inversion factor needs self-maps of one space")
    nvars = n + 1
    composed = [g.evaluate(forward.rep.forms) for g in backward.rep.forms]
    factor = None
    for i, h in enumerate(composed):
        xi = Polynomial.variable(i, nvars)
        if not xi.divides(h):
            raise NotInverseError(f"coordinate {i} is not divisible by x{i}")
        c = h.exact_div(xi)
        if factor is None:
            factor = c
        elif factor != c:
            raise NotInverseError("coordinates disagree on the inversion factor")
    return factor


def _log_matrix(rep):
    """Columns are the exponent vectors of the monomial coordinates."""
    cols = []
    for f in rep.forms:
        if not f.is_term:
            raise DomainError("log matrix needs monomial coordinates")
        cols.append(f.terms[0][0])
    return cols


def _invert_fraction_matrix(cols):
    """Inverse of the matrix with the given columns, or None if singular."""
    n = len(cols)
    work = [[Fraction(cols[j][i]) for j in range(n)] for i in range(n)]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            return None
        work[col], work[pivot] = work[pivot], work[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        scale = work[col][col]
        work[col] = [v / scale for v in work[col]]
        inv[col] = [v / scale for v in inv[col]]
        for r in range(n):
            if r != col and work[r][col]:
                m = work[r][col]
                work[r] = [a - m * b for a, b in zip(work[r], work[col])]
                inv[r] = [a - m * b for a, b in zip(inv[r], inv[col])]
    return inv


def _compositions(total, parts):
    """All exponent vectors of the given total degree, lexicographically."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def monomial_cremona_inverse(fmap, degree_cap=10):
    """Inverse of a monomial Cremona map by bounded search.

    For each candidate inverse degree the inversion-factor exponent vector c
    is enumerated in graded order and the log-matrix system solved exactly;
    the first candidate with nonnegative integral solutions is verified with
    inversion_factor and returned.
    """
    n = fmap.source_dim
    if fmap.target_dim != n:
        raise DomainError("inverse search needs a self-map")
    rep = fmap.rep if fmap.reduced else reduce_representative(fmap.rep).rep
    cols = _log_matrix(rep)
    nvars = n + 1
    # normalize a common scalar away; coordinatewise scalars change the map
    scale = rep.forms[0].terms[0][1]
    if any(f.terms[0][1] != scale for f in rep.forms):
        raise DomainError("monomial coordinates must share one coefficient")
    ainv = _invert_fraction_matrix(cols)
    if ainv is None:
        raise NotBirationalError("log matrix is singular")
    d = rep.degree
    unit_solutions = [[ainv[i][j] for i in range(nvars)] for j in range(nvars)]
    for dprime in range(1, degree_cap + 1):
        target = d * dprime - 1
        for c in _compositions(target, nvars):
            shift = [sum(ainv[i][k] * c[k] for k in range(nvars))
                     for i in range(nvars)]
            exponents = []
            for j in range(nvars):
                b = [unit_solutions[j][i] + shift[i] for i in range(nvars)]
                if all(v.denominator == 1 and v >= 0 for v in b):
                    exponents.append(tuple(int(v) for v in b))
                else:
                    break
            if len(exponents) < nvars:
                continue
            candidate = RationalMap(FormSet(
                [Polynomial.monomial(e, nvars) for e in exponents]))
            try:
                inversion_factor(fmap, candidate)
            except NotInverseError:
                continue
            return candidate
    raise NotBirationalError(
        f"no monomial inverse of degree <= {degree_cap} exists")


def magnus_commute(fmap):
    """Does the map commute with the Magnus involution?"""
    n = fmap.source_dim
    if fmap.target_dim != n:
        raise DomainError("commutation is about self-maps")
    m = magnus_map(n)
    return same_map(compose(m, fmap), compose(fmap, m))


def image_kernel(g):
    """Defining ideal of the image: kernel of y_j -> g_j, by elimination."""
    nx = g.nvars
    ny = len(g)
    total = nx + ny
    gens = []
    for j, f in enumerate(g.forms):
        gens.append(Polynomial.variable(nx + j, total) - f.extend(total))
    mixed = Ideal(gens, nx, ny)
    return eliminate(mixed, list(range(nx)))


def inversion_duality_check(forward, backward):
    """Divisibility relating the inversion factors of a Cremona pair and of
    its Newton-dual pair: D divides Gamma * dual(C)^n exactly, with Gamma the
    monomial of exponents n - 1 + n*deg(C) - n*beta obtained from the
    directrix beta of C."""
    c = inversion_factor(forward, backward)
    n = forward.source_dim
    nvars = n + 1
    dual_fwd = reduce_representative(dual_forms(forward.rep))
    dual_inv = compose(magnus_map(n), backward)
    d_factor = inversion_factor(dual_fwd, dual_inv)
    if c.is_constant:
        beta = (0,) * nvars
        deg_c = 0
        c_dual = c
    else:
        beta = directrix(c)
        deg_c = c.degree()
        c_dual = dual_form(c)
    gamma = Polynomial.monomial(
        tuple(n - 1 + n * deg_c - n * b for b in beta), nvars)
    return d_factor.divides(gamma * c_dual ** n)
