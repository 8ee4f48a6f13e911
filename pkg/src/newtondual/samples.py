"""Seeded random instances for the property suites.

Everything takes an explicit random.Random so runs are reproducible from a
single seed, both under pytest and through the command line.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import DomainError, NewtonDualError
from .jonquieres import make_jonquieres
from .maps import RationalMap, reduce_representative
from .identities import magnus
from .newton import FormSet, canonical_restrictions
from .poly import Polynomial


def rng_from_seed(seed):
    return random.Random(seed)


def random_exponent(rng, nvars, degree):
    """Uniform-ish composition of `degree` over nvars slots."""
    cuts = sorted(rng.randrange(degree + 1) for _ in range(nvars - 1))
    bounds = [0] + cuts + [degree]
    return tuple(bounds[i + 1] - bounds[i] for i in range(nvars))


def random_coeff(rng):
    num = rng.choice([-3, -2, -1, 1, 2, 3])
    den = rng.choice([1, 1, 1, 2])
    return Fraction(num, den)


def random_form(rng, nvars, degree, max_terms=4):
    """Nonzero homogeneous polynomial of the given degree."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_exponent(rng, nvars, degree)] = random_coeff(rng)
    return Polynomial.from_dict(terms, nvars)


def random_formset(rng, max_nvars=4, max_degree=4, max_forms=4, max_terms=4):
    nvars = rng.randint(2, max_nvars)
    degree = rng.randint(1, max_degree)
    count = rng.randint(1, max_forms)
    return FormSet([random_form(rng, nvars, degree, max_terms)
                    for _ in range(count)])


def random_restricted_formset(rng, max_nvars=4, max_degree=4, max_forms=4,
                              max_terms=4):
    """Form set satisfying the canonical restrictions (trivial gcd, every
    variable present)."""
    while True:
        g = random_formset(rng, max_nvars, max_degree, max(2, max_forms),
                           max_terms)
        if len(g) >= 2 and canonical_restrictions(g):
            return g


def random_bipolynomial(rng, nx, ny, dx, dy, max_terms=4):
    """Nonzero bihomogeneous polynomial of bidegree (dx, dy)."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        expo = random_exponent(rng, nx, dx) + random_exponent(rng, ny, dy)
        terms[expo] = random_coeff(rng)
    return Polynomial.from_dict(terms, nx + ny)


def random_permutation_map(rng, n):
    """Coordinate permutation of projective n-space."""
    nvars = n + 1
    perm = list(range(nvars))
    rng.shuffle(perm)
    return RationalMap(FormSet([Polynomial.variable(i, nvars) for i in perm]))


def random_monomial_cremona(rng, n):
    """Permutations composed with the Magnus involution (possibly twice,
    collapsing to a permutation): always a monomial Cremona map."""
    nvars = n + 1
    outer = list(range(nvars))
    inner = list(range(nvars))
    rng.shuffle(outer)
    rng.shuffle(inner)
    base = magnus(n).forms if rng.random() < 0.8 else \
        [Polynomial.variable(i, nvars) for i in range(nvars)]
    permuted_vars = [Polynomial.variable(i, nvars) for i in inner]
    forms = [base[j].evaluate(permuted_vars) for j in outer]
    return reduce_representative(forms)


def random_xn_monoid(rng, nvars, degree, max_terms=3):
    """Homogeneous polynomial of total degree `degree`, degree <= 1 in the
    last variable."""
    n = nvars - 1
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        if degree >= 1 and rng.random() < 0.5:
            expo = random_exponent(rng, n, degree - 1) + (1,)
        else:
            expo = random_exponent(rng, n, degree) + (0,)
        terms[expo] = random_coeff(rng)
    p = Polynomial.from_dict(terms, nvars)
    if not p.terms:
        raise DomainError("degenerate monoid sample")
    return p


def random_jonquieres(rng, n, max_attempts=200):
    """Random monomial-support de Jonquieres map of projective n-space."""
    for _ in range(max_attempts):
        support = random_monomial_cremona(rng, n - 1)
        s = support.rep.degree
        r = rng.randint(0, 2)
        try:
            if r == 0:
                q = Polynomial.one(n + 1)
            else:
                q = random_xn_monoid(rng, n + 1, r)
            f = random_xn_monoid(rng, n + 1, r + s)
            return make_jonquieres(support, q, f)
        except NewtonDualError:
            continue
    raise DomainError("could not sample a valid de Jonquieres map")
