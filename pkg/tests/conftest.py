import functools

import pytest

from weylkit import (
    Bicharacter,
    FinAbGroup,
    Phase,
    ZERO,
    induced_model,
    subgroup_span,
    window_group,
    window_weyl,
)


@functools.cache
def window(p, k, d):
    return window_group(p, k, d)


@functools.cache
def window_model(p, k, d):
    return window_weyl(window(p, k, d))


@functools.cache
def z9_setup():
    """(Z/9)^2 with the symplectic form, L = 3Z x 3Z, and its induced model."""
    G = FinAbGroup([9, 9])
    m = Bicharacter(G, [[ZERO, Phase(1, 9)], [Phase(-1, 9), ZERO]]).to_multiplier()
    L = subgroup_span(G, [G.element([3, 0]), G.element([0, 3])])
    W = induced_model(G, m, L)
    return G, m, L, W


@functools.cache
def f2_setup(two_d=2):
    """F_2^{2d} with the strict-lower-triangular multiplier (a bicharacter)."""
    G = FinAbGroup([2] * two_d)
    mat = [[Phase(1, 2) if i > j else ZERO for j in range(two_d)] for i in range(two_d)]
    m = Bicharacter(G, mat).to_multiplier()
    return G, m


@pytest.fixture(scope="session")
def z9():
    return z9_setup()


@pytest.fixture(scope="session")
def f2():
    return f2_setup(2)
