import pytest

from newtondual.bigraded import BiPolynomial
from newtondual.newton import FormSet
from newtondual.parsing import parse_polynomial


@pytest.fixture
def P():
    """Parse a polynomial over x0..x_{nx-1} (plus y-block when ny > 0)."""
    return parse_polynomial


@pytest.fixture
def FS():
    def build(texts, nvars):
        return FormSet([parse_polynomial(t, nvars) for t in texts])
    return build


@pytest.fixture
def B():
    def build(text, nx, ny):
        return BiPolynomial(parse_polynomial(text, nx, ny), nx, ny)
    return build
