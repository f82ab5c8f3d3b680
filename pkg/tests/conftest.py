import numpy as np
import pytest

from qent.algebra import AlgebraParams, Element


@pytest.fixture
def params():
    return AlgebraParams(q=0.5)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def gens(params):
    """(a, a*, c, c*) as Elements."""
    return tuple(Element.generator(params, g) for g in ("a", "a*", "c", "c*"))
