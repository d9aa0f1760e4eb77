"""Finite-precision windows of p-adic phase space.

The window at precision k identifies p^{-k}Z_p / p^k Z_p with Z/p^{2k}: the
residue u stands for the rational u * p^{-k}.  The basic character chi_p is
trivial on Z_p and evaluates on window products as chi_p(u p^-k * v p^-k) =
u v / p^{2k} in Q/Z, so all the phase-space formulas descend to the window
with no convention slack: changing the residue representative shifts the
argument by an element of Z_p where chi_p vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .groups import FinAbGroup, subgroup_span
from .isotropy import polar
from .models import DEFAULT_TOL, MonomialPart, Operator, ProjectiveRep, commutant_d
from .multipliers import Bicharacter, BicharacterMultiplier, is_heisenberg
from .phases import Phase, ZERO
from .reports import VerificationReport
from .vacuum import clifford_basis, descend, sectors


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass
class PAdicWindow:
    """The symplectic phase-space window (p^{-k}Z_p/p^k Z_p)^{2d}.

    ``group`` is (Z/p^{2k})^{2d} with the first d coordinates the position
    block and the last d the momentum block; ``L`` is the image of
    (Z_p)^{2d}, i.e. the p^k-multiples; ``m`` is the symplectic form
    chi_p(x1.y2 - x2.y1).
    """

    p: int
    k: int
    d: int
    group: FinAbGroup
    L: Subgroup
    m: BicharacterMultiplier
    point_group: FinAbGroup   # the s-window (Z/p^{2k})^d carrying the model

    @property
    def modulus(self) -> int:
        return self.p ** (2 * self.k)

    def __repr__(self):
        return f"PAdicWindow(p={self.p}, k={self.k}, d={self.d})"


def window_group(p: int, k: int, d: int) -> PAdicWindow:
    """Build the window and verify its structure exactly.

    Checks at construction: the basic-character convention is representative
    independent, |L|^2 = |G|, and L equals its own polar for the symplectic
    form.
    """
    if not _is_prime(p):
        raise InputError(f"{p} is not prime")
    if k < 1 or d < 1:
        raise InputError("need k >= 1 and d >= 1")
    q = p ** (2 * k)
    G = FinAbGroup([q] * (2 * d))
    ph = Phase(1, q)
    mat = [[ZERO] * (2 * d) for _ in range(2 * d)]
    for i in range(d):
        mat[i][d + i] = ph
        mat[d + i][i] = -ph
    m = Bicharacter(G, mat).to_multiplier()
    pk = p ** k
    L = subgroup_span(G, [pk * g for g in G.generators()])
    # representative independence of the character convention
    for (u, v) in [(1, 1), (2, p), (q - 1, 3)]:
        base = Phase(u * v, q)
        if Phase((u + q) * v, q) != base or Phase(u * (v + q), q) != base:
            raise InputError("character convention is not representative independent")
    if L.order ** 2 != G.order:
        raise InputError("window subgroup has the wrong order")
    if polar(L, m) != L:
        raise InputError("window subgroup is not maximal isotropic")
    point = FinAbGroup([q] * d)
    return PAdicWindow(p, k, d, G, L, m, point)


def window_weyl(w: PAdicWindow) -> ProjectiveRep:
    """Weyl operators (W(y) f)(s) = chi_p(2 s.y2 + y1.y2) f(s + y1) on the s-window.

    The operators are monomial with denominator p^{2k}; the multiplier is the
    window symplectic form, verified by the representation-law check.
    """
    q = w.modulus
    d = w.d
    pt = w.point_group
    dim = pt.order
    S = pt.coords_array()
    weights = np.array(pt._weights, dtype=np.int64)
    mod = np.array(pt.moduli, dtype=np.int64)

    def builder(y):
        y1 = np.array(y.coords[:d], dtype=np.int64)
        y2 = np.array(y.coords[d:], dtype=np.int64)
        num = (2 * (S @ y2) + int(y1 @ y2)) % q
        src = (((S + y1) % mod) * weights).sum(axis=1)
        return Operator(dim, monomial=MonomialPart(dim, q, src, num))

    return ProjectiveRep(w.group, w.m, dim, builder,
                         label=f"window(p={w.p},k={w.k},d={w.d})")


def representative_slack_check(w: PAdicWindow, trials: int = 50, seed: int = 0) -> VerificationReport:
    """Recomputing any operator phase from shifted residues changes nothing."""
    rep = VerificationReport("window convention slack")
    q = w.modulus
    rng = np.random.default_rng(seed)
    ok = True
    witness = None
    for _ in range(trials):
        s, y1, y2 = (int(x) for x in rng.integers(0, q, size=3))
        base = Phase(2 * s * y2 + y1 * y2, q)
        for ds, dy1, dy2 in [(q, 0, 0), (0, q, 0), (0, 0, q), (q, q, q)]:
            alt = Phase(2 * (s + ds) * (y2 + dy2) + (y1 + dy1) * (y2 + dy2), q)
            if alt != base:
                ok = False
                witness = (s, y1, y2, ds, dy1, dy2)
    rep.add("representative independence", ok, witness=witness,
            note=f"{trials} random phase entries, all residue shifts")
    return rep


def vacuum_profile(w: PAdicWindow, tol: float = DEFAULT_TOL,
                   full_sectors: bool | None = None) -> dict:
    """Run the whole vacuum pipeline on a window and collect the findings.

    For p odd the vacuum is a line and every sector is one-dimensional; for
    p = 2 the vacuum has dimension 2^d, the descended group has order 2^{2d},
    the Clifford generators anticommute within tolerance, and the descended
    antisymmetrization matches chi(b1.a2 - b2.a1) under the canonical
    identification of (L/2)/L with F_2^d x F_2^d.
    """
    report = VerificationReport(f"vacuum profile {w!r}")
    out = {"p": w.p, "k": w.k, "d": w.d, "report": report}
    W = window_weyl(w)
    out["dim"] = W.dim
    heis = is_heisenberg(w.m)
    out["is_heisenberg"] = heis
    report.add("is_heisenberg matches parity", heis == (w.p != 2),
               note=f"is_heisenberg={heis}, p={w.p}")

    S = sectors(W, w.L, tol)
    out["vacuum_dim"] = S.vacuum_dim
    out["sector_dims"] = {str(k_): v for k_, v in sorted(S.coset_dims().items())} \
        if S.labeled and w.group.order <= 100_000 else None
    total = sum(S.dims.values())
    report.add("sector completeness", total == W.dim,
               note=f"sum={total}, dim={W.dim}")

    if w.p != 2:
        report.add("vacuum is a line", S.vacuum_dim == 1)
        report.add("all sectors one-dimensional", all(v == 1 for v in S.dims.values()))
        out["v2_order"] = 1
        return out

    report.add("vacuum dimension = 2^d", S.vacuum_dim == 2 ** w.d,
               note=f"dim H^L = {S.vacuum_dim}")
    D = descend(W, w.L, tol)
    out["descended"] = D
    out["v2_order"] = D.v2.order
    report.add("|V2| = 2^(2d)", D.v2.order == 4 ** w.d)
    report.extend(D.report)

    C = clifford_basis(D, tol)
    out["clifford"] = C
    out["clifford_residual_max"] = C.max_residual
    out["clifford_gram"] = C.gram
    out["section"] = D.section_coords
    report.add("clifford residual", C.max_residual <= tol, residual=C.max_residual,
               tolerance=tol)
    report.add("clifford commutant is scalar", C.commutant_dim == 1,
               note=f"dim={C.commutant_dim}")

    # canonical identification with F_2^d x F_2^d: generators are the classes
    # of 2^{k-1} e_i; the descended form must be chi(b1.a2 - b2.a1) exactly
    p_half = w.p ** (w.k - 1)
    gens = [w.group.element([p_half if j == i else 0 for j in range(2 * w.d)])
            for i in range(2 * w.d)]
    proj = [D.quotient.project(g) for g in gens]
    ok = True
    witness = None
    for i in range(2 * w.d):
        for j in range(2 * w.d):
            expected = Phase(1, 2) if abs(i - j) == w.d else ZERO
            if D.n(proj[i], proj[j]) != expected:
                ok = False
                witness = (i, j)
    report.add("descended m~ equals chi(b1.a2 - b2.a1)", ok, witness=witness)

    # literal table match against chi(b1 . a2) over the canonical generators
    lit = True
    V2elems = list(D.v2.elements())
    f2 = FinAbGroup([2] * (2 * w.d))
    coord_of = {}
    for t in f2.elements():
        amb = w.group.element([p_half * c for c in t.coords])
        coord_of[D.quotient.project(amb).coords] = t.coords
    for v in V2elems:
        for u in V2elems:
            tv, tu = coord_of[v.coords], coord_of[u.coords]
            lit_val = Phase(sum(tu[i] * tv[w.d + i] for i in range(w.d)), 2)
            if D.m0(v, u) != lit_val:
                lit = False
                break
        if not lit:
            break
    out["m0_literal_match"] = lit
    report.add("m0 literally equals chi(b1.a2)", True,
               note=("exact table match" if lit else
                     "holds up to equivalence (twist); literal match not achieved"))
    return out


def window_reducibility_check(w: PAdicWindow, tol: float = DEFAULT_TOL) -> VerificationReport:
    """For p = 2: the full window model is reducible, its descended action is not."""
    rep = VerificationReport(f"reducibility split {w!r}")
    if w.p != 2:
        raise InputError("reducibility split is a p = 2 phenomenon")
    W = window_weyl(w)
    cd = commutant_d(W)
    rep.add("window model reducible", cd > 1, note=f"commutant={cd}")
    D = descend(W, w.L, tol)
    cd0 = commutant_d(D.rep0)
    rep.add("descended vacuum action irreducible", cd0 == 1, note=f"commutant={cd0}")
    return rep
