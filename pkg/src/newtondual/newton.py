"""Newton matrices, directrix vectors, and the complementary dual of forms.

A form set is an ordered tuple of nonzero homogeneous polynomials of one
common degree d >= 1.  Its Newton matrix concatenates the exponent columns of
all terms, form by form, each column paired with its coefficient (the frame).
The directrix vector collects the row-wise maxima; the complementary dual
replaces every column a by directrix - a, keeping the frame.
"""

from __future__ import annotations

from .errors import AmbientMismatchError, DomainError
from .poly import Polynomial, expo_sub, poly_gcd_list


class FormSet:
    """Ordered tuple of equal-degree forms in one ambient."""

    __slots__ = ("forms", "nvars", "degree")

    def __init__(self, forms):
        forms = tuple(forms)
        if not forms:
            raise DomainError("a form set needs at least one form")
        nvars = forms[0].nvars
        for f in forms:
            if f.nvars != nvars:
                raise AmbientMismatchError("forms disagree on ambient")
            if not f.terms:
                raise DomainError("zero form in form set")
            if not f.is_homogeneous:
                raise DomainError(f"non-homogeneous member: {f}")
        degree = forms[0].degree()
        for f in forms[1:]:
            if f.degree() != degree:
                raise DomainError("forms of unequal degrees")
        if degree < 1:
            raise DomainError("forms must have degree >= 1")
        self.forms = forms
        self.nvars = nvars
        self.degree = degree

    def __len__(self):
        return len(self.forms)

    def __iter__(self):
        return iter(self.forms)

    def __getitem__(self, i):
        return self.forms[i]

    def __eq__(self, other):
        if not isinstance(other, FormSet):
            return NotImplemented
        return self.forms == other.forms

    def __hash__(self):
        return hash(self.forms)

    def __repr__(self):
        inner = ", ".join(str(f) for f in self.forms)
        return f"FormSet([{inner}], nvars={self.nvars})"


class NewtonMatrix:
    """Exponent columns of a form set with the aligned coefficient frame.

    Columns are grouped into per-form blocks; within a block they follow the
    canonical term order of that form.  Every column sums to the common
    degree, so the matrix is integer stochastic up to the factor d.
    """

    __slots__ = ("nvars", "cols", "frame", "blocks")

    def __init__(self, nvars, cols, frame, blocks):
        self.nvars = nvars
        self.cols = tuple(cols)
        self.frame = tuple(frame)
        self.blocks = tuple(blocks)  # number of columns per form

    def block_slices(self):
        start = 0
        for size in self.blocks:
            yield start, start + size
            start += size

    def reconstruct(self):
        """Rebuild the form set from blocks and frame."""
        forms = []
        for lo, hi in self.block_slices():
            acc = {self.cols[i]: self.frame[i] for i in range(lo, hi)}
            forms.append(Polynomial.from_dict(acc, self.nvars))
        return FormSet(forms)

    def __eq__(self, other):
        if not isinstance(other, NewtonMatrix):
            return NotImplemented
        return (self.nvars, self.cols, self.frame, self.blocks) == \
            (other.nvars, other.cols, other.frame, other.blocks)

    def __repr__(self):
        return f"NewtonMatrix(cols={self.cols}, frame={self.frame}, blocks={self.blocks})"


def newton_matrix(g):
    """Newton matrix of a form set (or of a single form)."""
    if isinstance(g, Polynomial):
        g = FormSet([g])
    cols = []
    frame = []
    blocks = []
    for f in g.forms:
        cols.extend(f.exponents())
        frame.extend(f.coefficients())
        blocks.append(len(f.terms))
    return NewtonMatrix(g.nvars, cols, frame, blocks)


def directrix(matrix):
    """Row-wise maxima of a Newton matrix."""
    if isinstance(matrix, (FormSet, Polynomial)):
        matrix = newton_matrix(matrix)
    if not matrix.cols:
        raise DomainError("directrix of an empty matrix is undefined")
    return tuple(max(col[i] for col in matrix.cols) for i in range(matrix.nvars))


def dual_forms(g):
    """Dual of each member against the directrix of the whole set.

    Returns plain polynomials; entries degenerate to constants exactly when
    every column of the set equals the directrix.
    """
    alpha = directrix(g)
    out = []
    for f in g.forms:
        acc = {expo_sub(alpha, e): c for e, c in f.terms}
        out.append(Polynomial.from_dict(acc, g.nvars))
    return out


def dual_set(g):
    """Newton complementary dual set, frames preserved, blocks preserved."""
    duals = dual_forms(g)
    if duals[0].is_constant:
        raise DomainError("dual set degenerates to degree 0 "
                          "(all terms share one exponent column)")
    return FormSet(duals)


def dual_form(p):
    """Newton complementary dual of a single form (its own directrix)."""
    if isinstance(p, FormSet):
        raise DomainError("dual_form takes a single polynomial")
    if not p.terms:
        raise DomainError("dual of the zero polynomial is undefined")
    if not p.is_homogeneous or p.degree() < 1:
        raise DomainError("dual is defined for forms of degree >= 1")
    return dual_forms(FormSet([p]))[0]


def canonical_restrictions(g):
    """True when gcd of the set is 1 and every variable occurs somewhere."""
    support = set()
    for f in g.forms:
        support |= f.support_variables()
    if support != set(range(g.nvars)):
        return False
    return poly_gcd_list(list(g.forms)).is_constant
