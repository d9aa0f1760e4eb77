import numpy as np
import pytest

from weylkit.errors import InputError
from weylkit.groups import double_image
from weylkit.models import check_rep_law
from weylkit.multipliers import antisymmetrize, is_heisenberg
from weylkit.padic import (
    representative_slack_check,
    vacuum_profile,
    window_group,
    window_reducibility_check,
)
from conftest import window, window_model


def test_window_group_examples():
    w = window(3, 1, 1)
    assert w.group.moduli == (9, 9)
    assert w.L.order == 9

    w2 = window(2, 1, 1)
    assert w2.group.moduli == (4, 4)
    assert {e.coords for e in w2.L.elements()} == {(0, 0), (2, 0), (0, 2), (2, 2)}

    w3 = window(2, 2, 2)
    assert w3.group.order == 65536
    assert w3.L.order == 256


def test_window_rejects_composite():
    with pytest.raises(InputError):
        window_group(4, 1, 1)
    with pytest.raises(InputError):
        window_group(2, 0, 1)


def test_window_weyl_matrices_211():
    W = window_model(2, 1, 1)
    G = W.group
    assert np.allclose(W.operator(G.element([0, 1])).matrix, np.diag([1, -1, 1, -1]))
    shift = W.operator(G.element([1, 0])).matrix
    expect = np.zeros((4, 4))
    for s in range(4):
        expect[s, (s + 1) % 4] = 1
    assert np.allclose(shift, expect)
    assert np.allclose(W.operator(G.zero()).matrix, np.eye(4))


def test_window_weyl_law_311_exhaustive():
    W = window_model(3, 1, 1)
    rep = check_rep_law(W)
    assert rep.passed
    assert rep.max_residual == 0.0


def test_representative_slack():
    for key in [(2, 1, 1), (3, 1, 1), (2, 2, 1)]:
        assert representative_slack_check(window(*key)).passed


def test_heisenberg_parity():
    assert is_heisenberg(window(3, 1, 1).m)
    assert is_heisenberg(window(5, 1, 1).m)
    assert not is_heisenberg(window(2, 1, 1).m)
    assert not is_heisenberg(window(2, 2, 1).m)


@pytest.mark.parametrize("p,k,d,vdim", [
    (3, 1, 1, 1),
    (2, 1, 1, 2),
    (2, 1, 2, 4),
    (2, 2, 1, 2),
])
def test_vacuum_profiles(p, k, d, vdim):
    prof = vacuum_profile(window(p, k, d))
    assert prof["report"].passed, str(prof["report"])
    assert prof["vacuum_dim"] == vdim
    if p == 2:
        assert prof["v2_order"] == 4 ** d
        assert prof["clifford_residual_max"] <= 1e-9


def test_profile_311_sectors_all_lines():
    prof = vacuum_profile(window(3, 1, 1))
    dims = prof["sector_dims"]
    assert set(dims.values()) == {1}
    assert len(dims) == 9


def test_profile_211_pauli_pair():
    prof = vacuum_profile(window(2, 1, 1))
    C = prof["clifford"]
    mats = [E.matrix for E in C.operators]
    assert any(np.allclose(M, np.array([[0, 1], [1, 0]])) for M in mats)
    assert any(np.allclose(M, np.diag([1, -1])) for M in mats)
    # the action on F_2: (W''(a1,a2) f)(c) = chi(c.a2 + a1.a2) f(c + a1),
    # whose generator matrices are exactly the swap and the sign flip
    assert prof["report"].passed


def test_vacuum_dim_independent_of_k():
    for p, d in [(2, 1), (3, 1)]:
        a = vacuum_profile(window(p, 1, d))
        b = vacuum_profile(window(p, 2, d))
        assert a["vacuum_dim"] == b["vacuum_dim"]
        assert a["v2_order"] == b["v2_order"]


def test_reducibility_split():
    for key in [(2, 1, 1), (2, 1, 2), (2, 2, 1)]:
        rep = window_reducibility_check(window(*key))
        assert rep.passed, str(rep)
    with pytest.raises(InputError):
        window_reducibility_check(window(3, 1, 1))


def test_window_L_is_not_2L_exactly_for_p2():
    w = window(2, 1, 1)
    assert double_image(w.group, w.L) != w.L
    w3 = window(3, 1, 1)
    assert double_image(w3.group, w3.L) == w3.L


def test_window_radical_pattern():
    # the antisymmetrization halves precision: its radical is the
    # p^{2k-1}-multiples; for k = 1, p = 2 that is exactly 2G
    w = window(2, 1, 1)
    rad = antisymmetrize(w.m).radical()
    from weylkit.groups import subgroup_span
    twoG = subgroup_span(w.group, [2 * g for g in w.group.generators()])
    assert rad == twoG
    w2 = window(2, 2, 1)
    rad2 = antisymmetrize(w2.m).radical()
    assert rad2.order == 4  # (2^{2k-1} multiples)^{2d}

    # odd p: trivial radical
    assert antisymmetrize(window(3, 1, 1).m).radical().order == 1


def test_largest_window_fast():
    import time
    t0 = time.time()
    prof = vacuum_profile(window(2, 2, 2))
    elapsed = time.time() - t0
    assert prof["vacuum_dim"] == 4
    assert prof["v2_order"] == 16
    assert prof["report"].passed
    assert elapsed < 10.0
