"""Exception hierarchy shared by all newtondual modules."""


class NewtonDualError(Exception):
    """Base class for every error raised by this package."""


class AmbientMismatchError(NewtonDualError):
    """Operands live in polynomial rings with different variable counts."""


class DomainError(NewtonDualError):
    """Input outside an operation's domain (zero polynomial, bad degree, ...)."""


class NotDivisibleError(NewtonDualError):
    """Exact division requested but no exact quotient exists."""


class DegenerateInputError(NewtonDualError):
    """An identity verifier hit a degenerate input (zero coordinate from
    cancellation) that the underlying statement excludes."""


class IdentityViolationError(NewtonDualError):
    """An unconditional identity failed to verify.  This always indicates an
    implementation bug, never a bad input."""


class NotInverseError(NewtonDualError):
    """The candidate pair of maps is not an inverse pair."""


class NotBirationalError(NewtonDualError):
    """The bounded inverse search found no inverse for a monomial map."""


class RestrictionsNotSatisfiedError(NewtonDualError):
    """The form set fails the canonical restrictions (trivial gcd, every
    variable present in some term)."""


class XVariableFactorError(NewtonDualError):
    """An x-variable divides a biform where the operation forbids it."""


class GroebnerDeadlineError(NewtonDualError):
    """A cooperative deadline expired during a Groebner basis computation."""


class NotMonoidError(NewtonDualError):
    """Polynomial has degree above one in the distinguished last variable."""


class NotCoprimeError(NewtonDualError):
    """The two monoid factors of a de Jonquieres map share a factor."""


class NoPositiveXnDegreeError(NewtonDualError):
    """Neither monoid factor involves the distinguished last variable."""


class DegreeMismatchError(NewtonDualError):
    """Degrees of the de Jonquieres pieces do not assemble consistently."""


class NonMonomialSupportError(NewtonDualError):
    """The commutation criterion requires a monomial support map."""


class ParseError(NewtonDualError):
    """Syntax error in a polynomial expression, with source position."""

    def __init__(self, message, line, col):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class UndeclaredVariableError(ParseError):
    """Expression references a variable outside the declared ambient."""


class NonHomogeneousInputError(NewtonDualError):
    """A command that requires a form received a non-homogeneous polynomial."""
