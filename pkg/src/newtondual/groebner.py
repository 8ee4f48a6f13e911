"""Self-contained Buchberger engine over the rationals.

Reduced Groebner bases, normal forms, elimination by block orders, ideal
quotient via the tag-variable intersection, saturation via the inverse-tag
trick, and ideal equality by mutual normal forms.  Pair selection uses the
normal strategy (minimal lcm degree first) with Buchberger's coprime-lead and
chain criteria.  Coefficients stay exact rationals throughout; bihomogeneous
inputs are treated as ordinary polynomials in the union variable set.

Internally a polynomial is a list of (order key, exponent, coefficient)
triples in strictly descending key order, so the leading term is element 0
and arithmetic is a sorted merge.
"""

from __future__ import annotations

import heapq
import time

from .errors import AmbientMismatchError, DomainError, GroebnerDeadlineError
from .poly import Polynomial, expo_add, expo_divides, expo_sub


class TermOrder:
    """A monomial order: degrevlex, deglex, or a two-block elimination order
    comparing a front variable block first (degrevlex inside each block)."""

    __slots__ = ("kind", "nvars", "front", "key")

    def __init__(self, kind, nvars, front=None):
        self.kind = kind
        self.nvars = nvars
        self.front = tuple(front) if front is not None else None
        if kind == "degrevlex":
            self.key = _degrevlex_key
        elif kind == "deglex":
            self.key = _deglex_key
        elif kind == "block":
            if not self.front:
                raise DomainError("block order needs a nonempty front block")
            fr = self.front
            rest = tuple(i for i in range(nvars) if i not in set(fr))
            self.key = _block_key_fn(fr, rest)
        else:
            raise DomainError(f"unknown term order kind {kind!r}")

    @classmethod
    def degrevlex(cls, nvars):
        return cls("degrevlex", nvars)

    @classmethod
    def deglex(cls, nvars):
        return cls("deglex", nvars)

    @classmethod
    def elimination(cls, front, nvars):
        return cls("block", nvars, front)

    def signature(self):
        return (self.kind, self.nvars, self.front)


def _degrevlex_key(e):
    return (sum(e),) + tuple(-x for x in reversed(e))


def _deglex_key(e):
    return (sum(e),) + e


def _block_key_fn(front, rest):
    def key(e):
        ef = tuple(e[i] for i in front)
        er = tuple(e[i] for i in rest)
        return ((sum(ef),) + tuple(-x for x in reversed(ef))
                + (sum(er),) + tuple(-x for x in reversed(er)))
    return key


# -- engine representation ---------------------------------------------------


def _ep_from_poly(p, order):
    lst = [(order.key(e), e, c) for e, c in p.terms]
    lst.sort(key=lambda t: t[0], reverse=True)
    return lst


def _ep_to_poly(ep, nvars):
    return Polynomial.from_dict({e: c for _, e, c in ep}, nvars)


def _ep_shift(ep, mexpo, scale, key):
    """scale * x^mexpo * ep; order-preserving since monomial orders are
    translation invariant."""
    return [(key(expo_add(e, mexpo)), expo_add(e, mexpo), c * scale)
            for _, e, c in ep]


def _ep_sub(a, b):
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        ka = a[i][0]
        kb = b[j][0]
        if ka > kb:
            out.append(a[i])
            i += 1
        elif ka < kb:
            t = b[j]
            out.append((t[0], t[1], -t[2]))
            j += 1
        else:
            c = a[i][2] - b[j][2]
            if c:
                out.append((ka, a[i][1], c))
            i += 1
            j += 1
    if i < la:
        out.extend(a[i:])
    while j < lb:
        t = b[j]
        out.append((t[0], t[1], -t[2]))
        j += 1
    return out


def _ep_monic(ep):
    lc = ep[0][2]
    if lc == 1:
        return ep
    inv = 1 / lc
    return [(k, e, c * inv) for k, e, c in ep]


def _ep_reduce(ep, basis, key):
    """Full normal form of ep against a list of (ep, lead expo, 1) entries."""
    out = []
    work = ep
    wi = 0
    while wi < len(work):
        _, e, c = work[wi]
        reducer = None
        for entry in basis:
            if expo_divides(entry[1], e):
                reducer = entry
                break
        if reducer is None:
            out.append(work[wi])
            wi += 1
        else:
            shifted = _ep_shift(reducer[0], expo_sub(e, reducer[1]), c, key)
            work = _ep_sub(work[wi:], shifted)
            wi = 0
    return out


class _Deadline:
    __slots__ = ("limit",)

    def __init__(self, seconds):
        self.limit = None if seconds is None else time.monotonic() + seconds

    def check(self):
        if self.limit is not None and time.monotonic() > self.limit:
            raise GroebnerDeadlineError("Groebner computation exceeded deadline")


def _buchberger(eps, order, deadline):
    key = order.key
    basis = []  # (ep monic, lead expo)
    heap = []
    done = set()

    def push_pairs(t):
        le_t = basis[t][1]
        for i in range(t):
            lcm = tuple(max(a, b) for a, b in zip(basis[i][1], le_t))
            heapq.heappush(heap, (sum(lcm), key(lcm), i, t))

    for ep in eps:
        if not ep:
            continue
        ep = _ep_monic(ep)
        basis.append((ep, ep[0][1]))
        push_pairs(len(basis) - 1)

    while heap:
        deadline.check()
        _, _, i, j = heapq.heappop(heap)
        if (i, j) in done:
            continue
        done.add((i, j))
        lead_i = basis[i][1]
        lead_j = basis[j][1]
        lcm = tuple(max(a, b) for a, b in zip(lead_i, lead_j))
        # coprime-lead criterion
        if all(a + b == m for a, b, m in zip(lead_i, lead_j, lcm)):
            continue
        # chain criterion: some treated third element divides the lcm
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if expo_divides(basis[k][1], lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in done and pjk in done:
                    skip = True
                    break
        if skip:
            continue
        fi, fj = basis[i][0], basis[j][0]
        s = _ep_sub(_ep_shift(fi, expo_sub(lcm, lead_i), fi[0][2] ** -1, key),
                    _ep_shift(fj, expo_sub(lcm, lead_j), fj[0][2] ** -1, key))
        s = _ep_reduce(s, basis, key)
        if s:
            s = _ep_monic(s)
            basis.append((s, s[0][1]))
            push_pairs(len(basis) - 1)
    return _reduce_basis(basis, key)


def _reduce_basis(basis, key):
    """Minimalize leads, then tail-reduce everything: the reduced basis."""
    entries = sorted(basis, key=lambda b: key(b[1]))
    kept = []
    for ep, lead in entries:
        if not any(expo_divides(other[1], lead) for other in kept):
            kept.append((ep, lead))
    reduced = []
    for pos, (ep, lead) in enumerate(kept):
        others = kept[:pos] + kept[pos + 1:]
        nf = _ep_reduce(ep, others, key)
        reduced.append((_ep_monic(nf), lead))
    reduced.sort(key=lambda b: key(b[1]), reverse=True)
    return reduced


class Ideal:
    """Generator list in an ambient split into an x-block and a y-block.

    ny = 0 gives a plain polynomial ideal in x-variables.  Generators are
    nonzero and canonical; the zero ideal is the empty list.  Groebner bases
    are cached per term order.
    """

    __slots__ = ("nvars", "nx", "ny", "gens", "_gb_cache")

    def __init__(self, gens, nx, ny=0):
        self.nx = nx
        self.ny = ny
        self.nvars = nx + ny
        cleaned = []
        for g in gens:
            if g.nvars != self.nvars:
                raise AmbientMismatchError("generator outside the ideal's ambient")
            if g.terms:
                cleaned.append(g)
        self.gens = tuple(cleaned)
        self._gb_cache = {}

    @property
    def is_zero(self):
        return not self.gens

    def groebner(self, order=None, deadline=None):
        if order is None:
            order = TermOrder.degrevlex(self.nvars)
        sig = order.signature()
        cached = self._gb_cache.get(sig)
        if cached is None:
            cached = groebner_basis(self, order, deadline)
            self._gb_cache[sig] = cached
        return cached

    def contains(self, p, deadline=None):
        return not normal_form(p, self.groebner(deadline=deadline)).terms

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.gens)
        return f"Ideal([{inner}], nx={self.nx}, ny={self.ny})"


class GroebnerBasis:
    """Reduced, monic, auto-reduced basis under a fixed term order."""

    __slots__ = ("order", "basis", "_engine")

    def __init__(self, order, engine_entries, nvars):
        self.order = order
        self._engine = engine_entries
        self.basis = tuple(_ep_to_poly(ep, nvars) for ep, _ in engine_entries)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)


def groebner_basis(ideal, order=None, deadline=None):
    """The unique reduced Groebner basis of the ideal for the given order."""
    gens = ideal.gens if isinstance(ideal, Ideal) else tuple(ideal)
    if not gens:
        nvars = ideal.nvars if isinstance(ideal, Ideal) else 0
        return GroebnerBasis(order or TermOrder.degrevlex(nvars), [], nvars)
    nvars = gens[0].nvars
    if order is None:
        order = TermOrder.degrevlex(nvars)
    if order.nvars != nvars:
        raise AmbientMismatchError("term order ambient does not match generators")
    eps = [_ep_from_poly(g, order) for g in gens if g.terms]
    entries = _buchberger(eps, order, _Deadline(deadline))
    return GroebnerBasis(order, entries, nvars)


def normal_form(p, gb):
    """Unique remainder of p modulo a Groebner basis; zero iff p is in the
    ideal."""
    if gb.basis and p.nvars != gb.basis[0].nvars:
        raise AmbientMismatchError("polynomial outside the basis ambient")
    ep = _ep_from_poly(p, gb.order)
    nf = _ep_reduce(ep, gb._engine, gb.order.key)
    return _ep_to_poly(nf, p.nvars)


def eliminate(ideal, front, deadline=None):
    """Generators of the elimination ideal: intersect with the subring of
    the variables outside `front` (indices into the flat ambient)."""
    front = sorted(set(front))
    if not front:
        return Ideal(ideal.gens, ideal.nx, ideal.ny)
    for i in front:
        if not 0 <= i < ideal.nvars:
            raise DomainError(f"front variable {i} outside the ambient")
    keep = [i for i in range(ideal.nvars) if i not in set(front)]
    new_nx = sum(1 for i in keep if i < ideal.nx)
    new_ny = len(keep) - new_nx
    if ideal.is_zero:
        return Ideal([], new_nx, new_ny)
    order = TermOrder.elimination(front, ideal.nvars)
    gb = groebner_basis(ideal, order, deadline)
    front_set = set(front)
    kept = []
    for g in gb.basis:
        lead, _ = g.leading_term()
        # in a block order a front-free lead forces a front-free polynomial
        if all(lead[i] == 0 for i in front_set):
            kept.append(g.select_variables(keep))
    out = Ideal(kept, new_nx, new_ny)
    # the projected elements form a reduced basis for the induced order,
    # which on the surviving block is plain degrevlex
    if kept:
        inner = TermOrder.degrevlex(len(keep))
        entries = []
        for g in kept:
            ep = _ep_from_poly(g, inner)
            entries.append((ep, ep[0][1]))
        out._gb_cache[inner.signature()] = GroebnerBasis(inner, entries, len(keep))
    return out


def ideal_quotient(ideal, f, deadline=None):
    """(I : f), computed through the tag-variable intersection I ∩ (f)."""
    if not f.terms:
        raise DomainError("quotient by the zero polynomial")
    if f.nvars != ideal.nvars:
        raise AmbientMismatchError("divisor outside the ideal's ambient")
    if f.is_constant:
        return Ideal(ideal.gens, ideal.nx, ideal.ny)
    if ideal.is_zero:
        return Ideal([], ideal.nx, ideal.ny)
    nv = ideal.nvars
    tag = Polynomial.variable(nv, nv + 1)
    lifted = [tag * g.extend(nv + 1) for g in ideal.gens]
    fe = f.extend(nv + 1)
    lifted.append(fe - tag * fe)
    mixed = Ideal(lifted, ideal.nx, ideal.ny + 1)
    intersection = eliminate(mixed, [nv], deadline)
    quotient = [g.exact_div(f) for g in intersection.gens]
    return Ideal(quotient, ideal.nx, ideal.ny)


def saturate(ideal, f, deadline=None):
    """(I : f^infinity) by the inverse-tag trick: adjoin w, add w*f - 1,
    eliminate w."""
    if not f.terms:
        raise DomainError("saturation by the zero polynomial")
    if f.nvars != ideal.nvars:
        raise AmbientMismatchError("divisor outside the ideal's ambient")
    if f.is_constant:
        return Ideal(ideal.gens, ideal.nx, ideal.ny)
    nv = ideal.nvars
    tag = Polynomial.variable(nv, nv + 1)
    lifted = [g.extend(nv + 1) for g in ideal.gens]
    lifted.append(tag * f.extend(nv + 1) - Polynomial.one(nv + 1))
    mixed = Ideal(lifted, ideal.nx, ideal.ny + 1)
    return eliminate(mixed, [nv], deadline)


def ideal_equal(left, right, deadline=None):
    """Mutual containment through normal forms."""
    if left.nvars != right.nvars:
        raise AmbientMismatchError("ideals live in different ambients")
    gb_left = left.groebner(deadline=deadline)
    if any(normal_form(g, gb_left).terms for g in right.gens):
        return False
    gb_right = right.groebner(deadline=deadline)
    return not any(normal_form(g, gb_right).terms for g in left.gens)
