"""Vacuum-sector analysis of a representation restricted to a compact-side subgroup.

Given a model W and a subgroup L on which the multiplier vanishes, W|_L is an
ordinary representation of a finite abelian group and splits into joint
eigenspaces, one per character of L.  When L is maximal isotropic the
characters that occur are labelled by cosets [y] through a |-> m(a, y).  The
trivial character gives the vacuum space; its fine structure (normalizer,
descent to (L/2)/L, anticommuting generators) is what this module computes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

import numpy as np

from .errors import DefectError, InputError, PreconditionError
from .groups import FinAbGroup, GroupElement, Quotient, Subgroup, double_image, double_preimage, subquotient
from .isotropy import is_isotropic, polar
from .models import (
    DEFAULT_TOL,
    SV_ZERO,
    Operator,
    ProjectiveRep,
    commutant_d,
)
from .multipliers import (
    Bicharacter,
    Multiplier,
    PhaseMap,
    TableMultiplier,
    antisymmetrize,
    split_symmetric,
)
from .phases import HALF, Phase, ZERO
from .reports import VerificationReport


def _orthonormal_range(P: np.ndarray, tol: float = SV_ZERO) -> np.ndarray:
    """Canonical orthonormal basis of the range of a projector.

    Modified Gram-Schmidt over the columns of P in index order, so the basis
    is deterministic and, for monomial projectors, aligned with the natural
    coordinates.
    """
    dim = P.shape[0]
    basis = []
    for j in range(P.shape[1]):
        v = P[:, j].astype(complex)
        for b in basis:
            v = v - b * (b.conj() @ v)
        nrm = np.linalg.norm(v)
        if nrm > tol:
            basis.append(v / nrm)
    if not basis:
        return np.zeros((dim, 0), dtype=complex)
    return np.stack(basis, axis=1)


def _orthonormal_columns(M: np.ndarray, tol: float = SV_ZERO) -> np.ndarray:
    """Orthonormal basis of the column space of M (SVD rank with absolute cutoff)."""
    if M.size == 0:
        return np.zeros((M.shape[0], 0), dtype=complex)
    u, s, _ = np.linalg.svd(M, full_matrices=False)
    k = int((s > tol).sum())
    return u[:, :k]


class SectorDecomposition:
    """Joint eigenspace decomposition of W|_L, indexed by characters of L.

    ``dims`` maps a character index tuple u (coordinates against the
    invariant-factor generators of L) to the multiplicity of that character.
    When L is maximal isotropic and |L|^2 = |G| the characters are in
    bijection with cosets of G/L and ``coset_label`` translates.
    """

    def __init__(self, rep: ProjectiveRep, L: Subgroup, tol: float = DEFAULT_TOL):
        G = rep.group
        if L.ambient != G:
            raise InputError("subgroup does not live in the representation's group")
        m = rep.multiplier
        if not is_isotropic(L, m):
            raise PreconditionError("the multiplier does not vanish on L x L")
        self.rep = rep
        self.L = L
        self.tol = tol
        self.elems = L.elements()
        self.gens, self.orders = L.decomposition()
        self.char_exp = lcm(*self.orders) if self.orders else 1
        # character value numerators over char_exp: row a, column j
        self._tcoords = np.array([L.coordinates_of(a) for a in self.elems],
                                 dtype=np.int64).reshape(len(self.elems), len(self.orders))
        self._ops = [rep.operator(a) for a in self.elems]
        self._bases: dict[tuple, np.ndarray] = {}
        self.dims = {}
        self._compute_dims()
        self._labeled = None

    @property
    def labeled(self) -> bool:
        """True when y |-> (a |-> m(a, y)) is a bijection of G/L with the dual of L.

        Requires |L|^2 = |G| and injectivity of the labeling, which is checked
        directly: for an alternating bicharacter it is equivalent to L being
        maximal isotropic, but a one-sided polar condition is not enough for
        general multipliers.
        """
        if self._labeled is None:
            G = self.rep.group
            m = self.rep.multiplier
            ok = self.L.order ** 2 == G.order and polar(self.L, m) == self.L
            if ok:
                bilinear = getattr(m, "bichar", None) is not None
                labels = set()
                for y in self.L.transversal():
                    try:
                        u = self.char_of_coset(y)
                    except ValueError:
                        ok = False
                        break
                    if not bilinear:
                        # the label must actually be a character of L
                        for a in self.elems:
                            val = ZERO
                            for uj, tj, d in zip(u, self.L.coordinates_of(a), self.orders):
                                val = val + Phase(uj * tj, d)
                            if m(a, y) != val:
                                ok = False
                                break
                        if not ok:
                            break
                    labels.add(u)
                ok = ok and len(labels) == self.L.index
            self._labeled = bool(ok)
        return self._labeled

    # -- characters -------------------------------------------------------
    def characters(self):
        """All character index tuples u, in rank order of the dual group."""
        dual = FinAbGroup(self.orders)
        return [u.coords for u in dual.elements()]

    def char_nums(self, u) -> np.ndarray:
        """Numerators of chi_u(a) over char_exp for every a in L (element order)."""
        E = self.char_exp
        if not self.orders:
            return np.zeros(len(self.elems), dtype=np.int64)
        w = np.array([ui * (E // d) for ui, d in zip(u, self.orders)], dtype=np.int64)
        return (self._tcoords @ w) % E

    def char_of_coset(self, y: GroupElement) -> tuple:
        """The character a |-> m(a, y) as an index tuple."""
        m = self.rep.multiplier
        u = []
        for h, d in zip(self.gens, self.orders):
            ph = m(h, y)
            u.append(ph.numerator_at(d) % d)
        return tuple(u)

    def coset_label(self, u) -> GroupElement | None:
        """A coset representative y with chi_u = m(., y), if the labeling applies."""
        if not self.labeled:
            return None
        for y in self.L.transversal():
            if self.char_of_coset(y) == tuple(u):
                return y
        return None

    # -- sectors ----------------------------------------------------------
    def _compute_dims(self):
        traces = np.array([op.trace() for op in self._ops])
        nL = len(self.elems)
        total = 0
        for u in self.characters():
            nums = self.char_nums(u)
            val = (np.exp(-2j * np.pi * nums / self.char_exp) * traces).sum().real / nL
            d = int(round(val))
            if abs(val - d) > 1e-6:
                raise DefectError(f"sector dimension {val} is not an integer (char {u})")
            if d:
                self.dims[tuple(u)] = d
            total += d
        if total != self.rep.dim:
            raise DefectError(
                f"sector dimensions sum to {total}, expected {self.rep.dim}")

    def projector(self, u) -> np.ndarray:
        nums = self.char_nums(u)
        coeff = np.exp(-2j * np.pi * nums / self.char_exp) / len(self.elems)
        P = np.zeros((self.rep.dim, self.rep.dim), dtype=complex)
        eye = np.eye(self.rep.dim, dtype=complex)
        for c, op in zip(coeff, self._ops):
            P += c * op.apply(eye)
        return P

    def basis_of(self, u) -> np.ndarray:
        u = tuple(u)
        if u not in self._bases:
            if u not in self.dims:
                self._bases[u] = np.zeros((self.rep.dim, 0), dtype=complex)
            else:
                B = _orthonormal_range(self.projector(u))
                if B.shape[1] != self.dims[u]:
                    raise DefectError(
                        f"sector basis rank {B.shape[1]} != trace dimension {self.dims[u]}")
                self._bases[u] = B
        return self._bases[u]

    def vacuum_basis(self) -> np.ndarray:
        return self.basis_of((0,) * len(self.orders))

    @property
    def vacuum_dim(self) -> int:
        return self.dims.get((0,) * len(self.orders), 0)

    def coset_dims(self) -> dict:
        """Sector dimensions keyed by coset representative coordinates (labeled case)."""
        if not self.labeled:
            raise InputError("sectors are not labeled by cosets here")
        out = {}
        for y in self.L.transversal():
            u = self.char_of_coset(y)
            out[y.coords] = self.dims.get(u, 0)
        return out

    def eigen_check(self, max_sectors: int | None = None) -> VerificationReport:
        """|| W(a) psi - e(chi(a)) psi || <= tol for every sector basis vector."""
        rep = VerificationReport("sector eigen-characterization")
        worst = 0.0
        tested = 0
        for u in sorted(self.dims):
            if max_sectors is not None and tested >= max_sectors:
                break
            B = self.basis_of(u)
            nums = self.char_nums(u)
            for k, (a, op) in enumerate(zip(self.elems, self._ops)):
                lam = np.exp(2j * np.pi * nums[k] / self.char_exp)
                worst = max(worst, float(np.abs(op.apply(B) - lam * B).max()))
            tested += 1
        rep.add("eigenvalue", worst <= self.tol, residual=worst, tolerance=self.tol,
                note=f"{tested} sectors")
        return rep


def sectors(W: ProjectiveRep, L: Subgroup, tol: float = DEFAULT_TOL) -> SectorDecomposition:
    """Decompose W|_L into character eigenspaces via group-averaged projectors."""
    return SectorDecomposition(W, L, tol)


def vacuum(W: ProjectiveRep, L: Subgroup, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of the L-fixed subspace."""
    return sectors(W, L, tol).vacuum_basis()


def permute_check(S: SectorDecomposition, x: GroupElement,
                  tol: float | None = None) -> VerificationReport:
    """W(x) maps the sector of chi to the sector of chi + m~(., x)."""
    tol = tol if tol is not None else S.tol
    rep = VerificationReport(f"sector permutation by {x.coords}")
    mt = antisymmetrize(S.rep.multiplier)
    Wx = S.rep.operator(x)
    worst = 0.0
    ok_dims = True
    for u in sorted(S.dims):
        target = tuple((ui + mt(h, x).numerator_at(d)) % d
                       for ui, h, d in zip(u, S.gens, S.orders))
        B = S.basis_of(u)
        Bt = S.basis_of(target)
        if S.dims.get(target, 0) != S.dims[u]:
            ok_dims = False
        img = Wx.apply(B)
        resid = float(np.abs(img - Bt @ (Bt.conj().T @ img)).max()) if Bt.size else \
            float(np.abs(img).max())
        worst = max(worst, resid)
    rep.add("image containment", worst <= tol, residual=worst, tolerance=tol)
    rep.add("dimension transport", ok_dims)
    return rep


def vacuum_normalizer(W: ProjectiveRep, L: Subgroup) -> Subgroup:
    """The subgroup whose operators preserve the vacuum space.

    An element x preserves H^L exactly when the character a |-> m~(a, x) is
    trivial on L, i.e. when x lies in the m~-polar of L.  For an alternating
    bicharacter multiplier this is L/2 (the polar relation), which is the
    form the statement usually takes.
    """
    from .isotropy import polar
    return polar(L, antisymmetrize(W.multiplier))


def normalizer_check(W: ProjectiveRep, L: Subgroup, tol: float = DEFAULT_TOL,
                     samples: int = 64, seed: int = 0) -> VerificationReport:
    """L/2 normalizes the vacuum space; nothing else does; W on it is 2L-periodic.

    The normalizer is computed as the m~-polar of L, which equals the double
    preimage L/2 whenever the multiplier is an alternating bicharacter (the
    setting of the statement); the coincidence is asserted there.
    """
    G = W.group
    S = sectors(W, L, tol)
    B0 = S.vacuum_basis()
    if B0.shape[1] == 0:
        raise PreconditionError("vacuum space is zero")
    rep = VerificationReport("vacuum normalizer")
    L2 = vacuum_normalizer(W, L)
    form = getattr(W.multiplier, "bichar", None)
    if form is not None and form.is_alternating:
        rep.add("normalizer equals L/2", L2 == double_preimage(G, L))
    twoL = double_image(G, L)
    P0 = B0 @ B0.conj().T
    eye = np.eye(W.dim)

    rng = np.random.default_rng(seed)

    def pick(elems, cap):
        elems = list(elems)
        if len(elems) <= cap:
            return elems
        idx = rng.choice(len(elems), size=cap, replace=False)
        return [elems[i] for i in idx]

    inside = pick(L2.elements(), samples) if L2.order <= 100_000 else \
        [t for t in L2.generators]
    worst_in = 0.0
    for x in inside:
        img = W.operator(x).apply(B0)
        worst_in = max(worst_in, float(np.abs(img - P0 @ img).max()))
    rep.add("L/2 preserves vacuum", worst_in <= tol, residual=worst_in, tolerance=tol,
            note=f"{len(inside)} elements")

    outside_all = [x for x in G.elements() if not L2.contains(x)] \
        if G.order <= 4096 else []
    if not outside_all and G.order > 4096:
        # sample the complement
        moduli = np.array(G.moduli, dtype=np.int64)
        while len(outside_all) < samples:
            cand = G.element(rng.integers(0, moduli))
            if not L2.contains(cand):
                outside_all.append(cand)
    outside = pick(outside_all, samples)
    if outside:
        min_defect = None
        for x in outside:
            img = W.operator(x).apply(B0)
            defect = float(np.abs(img - P0 @ img).max())
            min_defect = defect if min_defect is None else min(min_defect, defect)
        rep.add("outside L/2 moves vacuum", min_defect > tol, residual=min_defect,
                tolerance=tol, note=f"{len(outside)} elements, defect must exceed tol")
    else:
        rep.add("outside L/2 moves vacuum", True, note="L/2 = G; vacuously true")

    worst_per = 0.0
    for x in pick(L2.elements(), samples) if L2.order <= 100_000 else L2.generators:
        Wx = W.operator(x).apply(B0)
        for a in pick(twoL.elements(), samples):
            Wxa = W.operator(x + a).apply(B0)
            worst_per = max(worst_per, float(np.abs(Wxa - Wx).max()))
    rep.add("2L-periodicity on vacuum", worst_per <= tol, residual=worst_per, tolerance=tol)
    return rep


def generated_subspace(W: ProjectiveRep, L: Subgroup, K: np.ndarray,
                       tol: float = DEFAULT_TOL) -> np.ndarray:
    """Smallest W-invariant subspace containing K <= H^L; P projects it back onto K.

    K must be contained in the vacuum space and invariant under the vacuum
    normalizer (W(L/2) in the alternating setting); returns an orthonormal
    basis of span{ W(x) K }, x over coset representatives of G/L.
    """
    G = W.group
    B0 = vacuum(W, L, tol)
    K = np.asarray(K, dtype=complex).reshape(W.dim, -1)
    if K.shape[1]:
        Kb = _orthonormal_columns(K)
    else:
        Kb = K
    P0 = B0 @ B0.conj().T
    if Kb.size and float(np.abs(Kb - P0 @ Kb).max()) > tol:
        raise PreconditionError("K is not contained in the vacuum space")
    L2 = vacuum_normalizer(W, L)
    PK = Kb @ Kb.conj().T
    for x in L2.generators:
        img = W.operator(x).apply(Kb) if Kb.size else Kb
        if Kb.size and float(np.abs(img - PK @ img).max()) > tol:
            raise PreconditionError(
                f"K is not invariant under the vacuum normalizer (witness {x.coords})")
    if not Kb.size:
        return np.zeros((W.dim, 0), dtype=complex)
    cols = [W.operator(r).apply(Kb) for r in L.transversal()]
    span = _orthonormal_columns(np.concatenate(cols, axis=1))
    # the projection back to the vacuum space must return exactly K
    back = _orthonormal_columns(P0 @ span)
    PB = back @ back.conj().T
    if float(np.abs(PB - PK).max()) > tol:
        raise DefectError("projection of the generated subspace differs from K")
    return span


@dataclass
class DescendedRep:
    """The vacuum action of W pushed down to the finite 2-group (L/2)/L."""

    source: ProjectiveRep
    L: Subgroup
    quotient: Quotient
    v2: FinAbGroup
    vacuum_basis: np.ndarray
    rep0: ProjectiveRep
    m0: TableMultiplier
    n: Bicharacter
    report: VerificationReport = field(repr=False, default=None)

    @property
    def section_coords(self):
        return [s.coords for _, s in self.quotient.section_list]


def descend(W: ProjectiveRep, L: Subgroup, tol: float = DEFAULT_TOL) -> DescendedRep:
    """Compress W to the vacuum space and factor it through V2 = (L/2)/L.

    W0(v) = W(s(v))|_{H^L} for the rank-minimal section s; the multiplier of
    the compression is m0(v, w) = m(s(v), s(w)) + m(a, s(v+w)) with
    a = s(v) + s(w) - s(v+w) in L.  Its antisymmetrization must descend from
    m~ and be nondegenerate on V2.
    """
    G = W.group
    m = W.multiplier
    S = sectors(W, L, tol)
    B0 = S.vacuum_basis()
    if B0.shape[1] == 0:
        raise PreconditionError("vacuum space is zero; nothing to descend")
    L2 = double_preimage(G, L)
    mt = antisymmetrize(m)
    for x in L2.generators:
        for a in L.generators:
            if mt(x, a) != ZERO:
                raise PreconditionError(
                    f"m~({x.coords}, {a.coords}) != 0; the action does not factor through L")
    q = subquotient(L2, L)
    V2 = q.group
    report = VerificationReport("descent to (L/2)/L")

    ops = {}
    for v in V2.elements():
        s = q.section(v)
        img = W.operator(s).apply(B0)
        M = B0.conj().T @ img
        try:
            ops[v.rank] = Operator(B0.shape[1], dense=M, tol=tol)
        except InputError as exc:
            raise DefectError(f"W({s.coords}) does not preserve the vacuum space: {exc}")

    def m0_phase(v, w):
        sv, sw, svw = q.section(v), q.section(w), q.section(v + w)
        a = sv + sw - svw
        return m(sv, sw) + m(a, svw)

    m0 = TableMultiplier.from_function(V2, m0_phase)
    rep0 = ProjectiveRep(V2, m0, B0.shape[1], lambda v: ops[v.rank], label="descended")

    from .models import check_rep_law
    law = check_rep_law(rep0, tolerance=tol)
    report.extend(law, prefix="W0 ")
    if not law.passed:
        raise DefectError("descended operators violate the representation law for m0")

    n = antisymmetrize(m0)
    if not n.is_nondegenerate:
        raise DefectError("descended antisymmetrization is degenerate",
                          witness=[g.coords for g in n.radical().generators])
    report.add("n nondegenerate", True)

    lift_ok = True
    witness = None
    for x in L2.elements() if L2.order <= 64 else L2.generators:
        for y in L2.elements() if L2.order <= 64 else L2.generators:
            if n(q.project(x), q.project(y)) != mt(x, y):
                lift_ok = False
                witness = (x.coords, y.coords)
                break
        if not lift_ok:
            break
    report.add("lift of n equals m~ on L/2", lift_ok, witness=witness)
    if not lift_ok:
        raise DefectError("descended form does not lift to m~", witness=witness)
    return DescendedRep(W, L, q, V2, B0, rep0, m0, n, report)


@dataclass
class CliffordBasis:
    """Anticommuting involutions generating the descended vacuum action."""

    elements: list
    twist: PhaseMap
    operators: list
    gram: list
    residual_squares: float
    residual_anticommute: float
    commutant_dim: int

    @property
    def max_residual(self) -> float:
        return max(self.residual_squares, self.residual_anticommute)


def _find_gram_basis(V2: FinAbGroup, n: Bicharacter, twod: int):
    """Basis e_1..e_{2d} of V2 with n(e_i, e_j) = 1/2 exactly for i != j."""
    elems = [e for e in V2.elements() if not e.is_zero()]

    def reduce_vec(v, rows):
        w = list(v)
        for r, p in rows:
            if w[p]:
                w = [(a + b) % 2 for a, b in zip(w, r)]
        return w

    def dfs(chosen, rows):
        if len(chosen) == twod:
            return chosen
        for e in elems:
            if any(e == c for c in chosen):
                continue
            if any(n(c, e) != HALF for c in chosen):
                continue
            red = reduce_vec(e.coords, rows)
            if not any(red):
                continue
            p = next(i for i, a in enumerate(red) if a)
            out = dfs(chosen + [e], rows + [(red, p)])
            if out is not None:
                return out
        return None

    return dfs([], [])


def clifford_basis(D: DescendedRep, tol: float = DEFAULT_TOL) -> CliffordBasis:
    """Extract 2d anticommuting involutions from the descended representation.

    Finds a basis with the all-ones-off-diagonal Gram for n, twists the
    multiplier onto the strict-lower-triangular form over that basis, and
    returns the twisted operators E_i with E_i^2 = 1 and E_i E_j = -E_j E_i.
    """
    V2 = D.v2
    if any(d != 2 for d in V2.moduli):
        raise PreconditionError("descended group is not an elementary 2-group")
    twod = V2.rank
    if twod % 2:
        raise DefectError("descended group has odd F2-dimension")
    if twod == 0:
        return CliffordBasis([], PhaseMap(V2, {(): ZERO} if V2.rank == 0 else {}),
                             [], [], 0.0, 0.0, 1 if D.rep0.dim == 1 else D.rep0.dim ** 2)

    basis = _find_gram_basis(V2, D.n, twod)
    if basis is None:
        raise DefectError("no basis with the required Gram exists (search exhausted)")

    # coordinates over the found basis, by F2 linear algebra
    B = np.array([e.coords for e in basis], dtype=np.int64).T % 2

    def f2_solve(vec):
        A = np.concatenate([B.copy(), np.array(vec, dtype=np.int64).reshape(-1, 1)], axis=1) % 2
        rows, cols = A.shape
        r = 0
        piv = []
        for c in range(cols - 1):
            pr = next((i for i in range(r, rows) if A[i, c]), None)
            if pr is None:
                continue
            A[[r, pr]] = A[[pr, r]]
            for i in range(rows):
                if i != r and A[i, c]:
                    A[i] = (A[i] + A[r]) % 2
            piv.append(c)
            r += 1
        t = np.zeros(cols - 1, dtype=np.int64)
        for i, c in enumerate(piv):
            t[c] = A[i, -1]
        return t

    tcoords = {v.coords: f2_solve(v.coords) for v in V2.elements()}

    def m1_phase(v, w):
        tv, tw = tcoords[v.coords], tcoords[w.coords]
        s = sum(int(tv[i]) * int(tw[j]) for i in range(twod) for j in range(i))
        return Phase(s, 2)

    m1 = TableMultiplier.from_function(V2, m1_phase)
    dden = lcm(D.m0.den, 2)
    diff = (D.m0.num * (dden // D.m0.den) - m1.num * (dden // 2)) % dden
    if (diff != diff.T).any():
        raise DefectError("difference of m0 and the triangular form is not symmetric")
    diff_m = TableMultiplier(V2, dden, diff)
    c = split_symmetric(diff_m)

    ops = [D.rep0.operator(e).scaled(c(e)) for e in basis]
    eye = np.eye(D.rep0.dim)
    r_sq = max(float(np.abs(E.matrix @ E.matrix - eye).max()) for E in ops)
    r_ac = 0.0
    for i in range(twod):
        for j in range(i + 1, twod):
            r_ac = max(r_ac, float(np.abs(ops[i].matrix @ ops[j].matrix
                                          + ops[j].matrix @ ops[i].matrix).max()))
    gram = [[1 if D.n(a, b) == HALF else 0 for b in basis] for a in basis]
    for i in range(twod):
        for j in range(twod):
            if gram[i][j] != (0 if i == j else 1):
                raise DefectError("Gram matrix of the found basis is wrong",
                                  witness=(i, j))
    cdim = _matrix_set_commutant_dim([E.matrix for E in ops])
    return CliffordBasis(basis, c, ops, gram, r_sq, r_ac, cdim)


def _matrix_set_commutant_dim(mats, sv_zero: float = SV_ZERO) -> int:
    if not mats:
        return 0
    d = mats[0].shape[0]
    eye = np.eye(d)
    K = np.vstack([np.kron(M.T, eye) - np.kron(eye, M) for M in mats])
    sv = np.linalg.svd(K, compute_uv=False)
    return int((sv <= sv_zero).sum()) + (d * d - len(sv))


def coherent_states(W: ProjectiveRep, L: Subgroup,
                    tol: float = DEFAULT_TOL) -> tuple[VerificationReport, np.ndarray | None]:
    """Sector structure when L = 2L: irreducibility is equivalent to a vacuum line.

    Verifies the equivalence commutant_d(W) = 1  <=>  dim H^L = 1 (and then
    all sectors are one-dimensional coherent states, returned as a basis).
    """
    G = W.group
    if double_image(G, L) != L:
        raise PreconditionError("L != 2L here; use the descent / fermionic path instead")
    S = sectors(W, L, tol)
    rep = VerificationReport("coherent state structure")
    cd = commutant_d(W)
    vdim = S.vacuum_dim
    rep.add("L = 2L", True)
    rep.add("irreducible iff vacuum line", (cd == 1) == (vdim == 1),
            note=f"commutant={cd}, vacuum_dim={vdim}")
    basis = None
    if cd == 1:
        all_one = all(d == 1 for d in S.dims.values())
        rep.add("all sectors one-dimensional", all_one, note=f"{len(S.dims)} sectors")
        cols = [S.basis_of(u) for u in sorted(S.dims)]
        basis = np.concatenate(cols, axis=1)
        rep.extend(S.eigen_check())
    else:
        rep.add("reducible as expected", vdim > 1, note=f"vacuum_dim={vdim}")
    return rep, basis
