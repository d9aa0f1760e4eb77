import numpy as np
import pytest

from weylkit.errors import PreconditionError
from weylkit.groups import FinAbGroup, Subgroup, subgroup_span
from weylkit.models import check_rep_law, regular_rep
from weylkit.multipliers import antisymmetrize
from weylkit.phases import HALF, ZERO
from weylkit.vacuum import (
    clifford_basis,
    coherent_states,
    descend,
    generated_subspace,
    normalizer_check,
    permute_check,
    sectors,
    vacuum,
)

from conftest import window, window_model


# -- sector decomposition ----------------------------------------------------

def test_sectors_z9(z9):
    G, m, L, W = z9
    S = sectors(W, L)
    assert S.labeled
    assert len(S.dims) == 9
    assert all(d == 1 for d in S.dims.values())
    assert S.vacuum_dim == 1
    assert S.eigen_check().passed
    assert set(S.coset_dims().values()) == {1}


def test_sectors_p2_window():
    W = window_model(2, 1, 1)
    w = window(2, 1, 1)
    S = sectors(W, w.L)
    assert S.vacuum_dim == 2
    assert sum(S.dims.values()) == 4
    dims = S.coset_dims()
    assert dims[(0, 0)] == 2
    assert S.eigen_check().passed


def test_sectors_regular_rep_full_group():
    # with L = G and trivial multiplier the sectors are the character lines
    G = FinAbGroup([3])
    R = regular_rep(G)
    S = sectors(R, Subgroup.full(G))
    assert sorted(S.dims.values()) == [1, 1, 1]
    assert not S.labeled
    assert S.eigen_check().passed


def test_sectors_match_bruteforce_eigenspaces():
    # oracle: intersect the numeric eigenspaces of the commuting W(a), a in L
    W = window_model(2, 1, 1)
    w = window(2, 1, 1)
    S = sectors(W, w.L)
    for u, d in S.dims.items():
        nums = S.char_nums(u)
        count = 0
        # dimension of the joint eigenspace by rank of the averaged projector,
        # rebuilt here directly from eigen-decompositions
        P = np.eye(W.dim, dtype=complex)
        for k, a in enumerate(S.elems):
            M = W.operator(a).matrix
            lam = np.exp(2j * np.pi * nums[k] / S.char_exp)
            vals, vecs = np.linalg.eig(M)
            keep = vecs[:, np.abs(vals - lam) < 1e-8]
            P = P @ (keep @ np.linalg.pinv(keep))
        count = int(round(np.trace(P).real))
        assert count == d


def test_sectors_require_isotropy(z9):
    G, m, L, W = z9
    full = subgroup_span(G, [G.element([1, 0]), G.element([0, 1])])
    with pytest.raises(PreconditionError):
        sectors(W, full)


# -- vacuum dimensions -------------------------------------------------------

@pytest.mark.parametrize("p,k,d,expected", [
    (3, 1, 1, 1),
    (2, 1, 1, 2),
    (2, 2, 1, 2),
])
def test_vacuum_dims(p, k, d, expected):
    W = window_model(p, k, d)
    B = vacuum(W, window(p, k, d).L)
    assert B.shape[1] == expected


# -- permutation of sectors --------------------------------------------------

def test_permute_by_subgroup_element_fixes(z9):
    G, m, L, W = z9
    S = sectors(W, L)
    assert permute_check(S, G.element([3, 0])).passed  # x in L: [2x] = [0]


def test_permute_shift_z9(z9):
    G, m, L, W = z9
    S = sectors(W, L)
    rep = permute_check(S, G.element([1, 0]))
    assert rep.passed


def test_permute_p2_window_stays_put():
    # 2x lands in L for the k=1 window, so every sector maps to itself
    W = window_model(2, 1, 1)
    w = window(2, 1, 1)
    S = sectors(W, w.L)
    G = w.group
    mt = antisymmetrize(w.m)
    for x in G.generators():
        assert all(mt(h, x) == ZERO for h in S.gens)  # the character shift is trivial
        assert permute_check(S, x).passed


# -- normalizer ---------------------------------------------------------------

def test_normalizer_z9(z9):
    G, m, L, W = z9
    rep = normalizer_check(W, L)
    assert rep.passed


def test_normalizer_p2_k1_all_preserve():
    W = window_model(2, 1, 1)
    w = window(2, 1, 1)
    rep = normalizer_check(W, w.L)
    assert rep.passed
    vacuous = [c for c in rep.checks if c.name == "outside L/2 moves vacuum"]
    assert vacuous and "vacuously" in vacuous[0].note


def test_normalizer_p2_k2_outside_moves():
    W = window_model(2, 2, 1)
    w = window(2, 2, 1)
    rep = normalizer_check(W, w.L)
    assert rep.passed
    moved = [c for c in rep.checks if c.name == "outside L/2 moves vacuum"]
    assert moved and moved[0].passed


# -- generated subspaces -------------------------------------------------------

def test_generated_fills_space_z9(z9):
    G, m, L, W = z9
    B0 = vacuum(W, L)
    span = generated_subspace(W, L, B0)
    assert span.shape[1] == W.dim


def test_generated_gap_p2_k1():
    W = window_model(2, 1, 1)
    w = window(2, 1, 1)
    B0 = vacuum(W, w.L)
    span = generated_subspace(W, w.L, B0)
    assert span.shape[1] == B0.shape[1] == 2  # generation stalls on the vacuum


def test_generated_zero():
    W = window_model(2, 1, 1)
    w = window(2, 1, 1)
    K = np.zeros((W.dim, 0))
    span = generated_subspace(W, w.L, K)
    assert span.shape[1] == 0


def test_generated_orthogonality_preserved(z9):
    G, m, L, W = z9
    WW = W.direct_sum(W)
    B0 = vacuum(WW, L)
    assert B0.shape[1] == 2
    K1 = B0[:, :1]
    K2 = B0[:, 1:]
    S1 = generated_subspace(WW, L, K1)
    S2 = generated_subspace(WW, L, K2)
    assert np.abs(S1.conj().T @ S2).max() < 1e-9


def test_generated_rejects_noninvariant():
    W = window_model(2, 2, 1)
    w = window(2, 2, 1)
    B0 = vacuum(W, w.L)
    K = B0[:, :1]  # a single vacuum line is moved around by W(L/2) here
    with pytest.raises(PreconditionError):
        generated_subspace(W, w.L, K)


# -- descent -------------------------------------------------------------------

def test_descend_z9_trivial(z9):
    G, m, L, W = z9
    D = descend(W, L)
    assert D.v2.order == 1
    assert D.rep0.dim == 1


def test_descend_p2_k1():
    W = window_model(2, 1, 1)
    w = window(2, 1, 1)
    D = descend(W, w.L)
    assert D.v2.order == 4
    assert D.v2.moduli == (2, 2)
    assert D.rep0.dim == 2
    assert D.report.passed
    # generators act as a Pauli-like pair up to phase
    ops = [D.rep0.operator(v).matrix for v in D.v2.elements() if not v.is_zero()]
    kinds = set()
    for M in ops:
        if np.abs(M - np.diag(np.diag(M))).max() < 1e-9:
            kinds.add("diag")
        elif np.abs(np.diag(M)).max() < 1e-9:
            kinds.add("offdiag")
    assert {"diag", "offdiag"} <= kinds


def test_descend_p2_d2():
    W = window_model(2, 1, 2)
    w = window(2, 1, 2)
    D = descend(W, w.L)
    assert D.v2.order == 16
    assert D.rep0.dim == 4
    assert check_rep_law(D.rep0).passed


def test_descend_section_is_canonical():
    W = window_model(2, 1, 1)
    w = window(2, 1, 1)
    D = descend(W, w.L)
    # rank-minimal representatives: exactly the 0/1 coordinate vectors
    assert set(D.section_coords) == {(0, 0), (1, 0), (0, 1), (1, 1)}


# -- clifford extraction --------------------------------------------------------

def test_clifford_d1_base_case(f2):
    G, m = f2
    # the standard basis of F_2^2 already has the required Gram for m~
    mt = antisymmetrize(m)
    e1, e2 = G.element([1, 0]), G.element([0, 1])
    assert mt(e1, e2) == HALF


def test_clifford_p2_k1():
    W = window_model(2, 1, 1)
    w = window(2, 1, 1)
    D = descend(W, w.L)
    C = clifford_basis(D)
    assert len(C.elements) == 2
    assert C.max_residual <= 1e-9
    assert C.gram == [[0, 1], [1, 0]]
    assert C.commutant_dim == 1
    mats = [E.matrix for E in C.operators]
    # Pauli pair on the canonical vacuum basis
    assert any(np.allclose(M, np.array([[0, 1], [1, 0]])) for M in mats)
    assert any(np.allclose(M, np.diag([1, -1])) for M in mats)


def test_clifford_2d4_search():
    W = window_model(2, 1, 2)
    w = window(2, 1, 2)
    D = descend(W, w.L)
    C = clifford_basis(D)
    assert len(C.elements) == 4
    assert C.max_residual <= 1e-9
    for i in range(4):
        for j in range(4):
            assert C.gram[i][j] == (0 if i == j else 1)
    assert C.commutant_dim == 1


def test_clifford_trivial(z9):
    G, m, L, W = z9
    D = descend(W, L)
    C = clifford_basis(D)
    assert C.elements == []
    assert C.commutant_dim == 1


# -- coherent states -------------------------------------------------------------

def test_coherent_states_z9(z9):
    G, m, L, W = z9
    rep, basis = coherent_states(W, L)
    assert rep.passed
    assert basis.shape == (9, 9)


def test_coherent_states_reducible(z9):
    G, m, L, W = z9
    rep, basis = coherent_states(W.direct_sum(W), L)
    assert rep.passed  # the equivalence holds: reducible and vacuum_dim > 1
    assert basis is None


def test_coherent_states_trivial_group():
    G = FinAbGroup([])
    from weylkit.models import induced_model
    from weylkit.multipliers import zero_multiplier
    W = induced_model(G, zero_multiplier(G), Subgroup.full(G))
    rep, basis = coherent_states(W, Subgroup.full(G))
    assert rep.passed
    assert basis.shape == (1, 1)


def test_coherent_states_requires_2_divisible():
    W = window_model(2, 1, 1)
    w = window(2, 1, 1)
    with pytest.raises(PreconditionError):
        coherent_states(W, w.L)
