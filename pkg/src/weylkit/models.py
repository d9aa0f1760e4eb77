"""Concrete unitary-matrix models of projective representations.

Operators are monomial wherever possible: a permutation plus a vector of
exact phase numerators over a common denominator.  Products and the
representation law then reduce to integer arithmetic; dense complex matrices
are materialised only for compressions, commutants and intertwiners.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

import numpy as np

from .errors import DefectError, InputError, PreconditionError, ResourceLimitError
from .groups import FinAbGroup, GroupElement, Subgroup
from .multipliers import (
    Bicharacter,
    Multiplier,
    PhaseMap,
    WeylProductMultiplier,
    antisymmetrize,
    split_symmetric,
    twist,
    zero_multiplier,
)
from .isotropy import is_maximal_isotropic
from .phases import Phase, ZERO
from .reports import VerificationReport

DEFAULT_TOL = 1e-9
SV_ZERO = 1e-8
EXHAUSTIVE_CAP = 512     # exhaustive pair scans up to this group order
COMMUTANT_SVD_CAP = 48   # nullspace path up to this carrier dimension
DIM_CAP = 4096


class MonomialPart:
    """(W f)[i] = exp(2 pi i num[i]/den) * f[src[i]] with src a permutation."""

    __slots__ = ("dim", "den", "src", "num")

    def __init__(self, dim: int, den: int, src, num):
        self.dim = dim
        self.den = den
        self.src = np.asarray(src, dtype=np.intp)
        self.num = np.asarray(num, dtype=np.int64) % den
        if self.src.shape != (dim,) or self.num.shape != (dim,):
            raise InputError("monomial data has wrong shape")

    def rescaled(self, den: int) -> "MonomialPart":
        if den == self.den:
            return self
        if den % self.den:
            raise InputError("denominators are incompatible")
        return MonomialPart(self.dim, den, self.src, self.num * (den // self.den))

    def compose(self, other: "MonomialPart") -> "MonomialPart":
        d = lcm(self.den, other.den)
        a, b = self.rescaled(d), other.rescaled(d)
        return MonomialPart(self.dim, d, b.src[a.src], a.num + b.num[a.src])

    def adjoint(self) -> "MonomialPart":
        inv = np.empty_like(self.src)
        inv[self.src] = np.arange(self.dim, dtype=np.intp)
        num = np.empty_like(self.num)
        num[self.src] = -self.num
        return MonomialPart(self.dim, self.den, inv, num)

    def scaled(self, ph: Phase) -> "MonomialPart":
        d = lcm(self.den, ph.den)
        a = self.rescaled(d)
        return MonomialPart(self.dim, d, a.src, a.num + ph.numerator_at(d))

    def phases_complex(self) -> np.ndarray:
        return np.exp(2j * np.pi * self.num / self.den)

    def to_dense(self) -> np.ndarray:
        M = np.zeros((self.dim, self.dim), dtype=complex)
        M[np.arange(self.dim), self.src] = self.phases_complex()
        return M

    def apply(self, X: np.ndarray) -> np.ndarray:
        """Matrix-vector / matrix-matrix product W @ X without densifying."""
        ph = self.phases_complex()
        if X.ndim == 1:
            return ph * X[self.src]
        return ph[:, None] * X[self.src, :]

    def trace(self) -> complex:
        fixed = self.src == np.arange(self.dim)
        if not fixed.any():
            return 0j
        return complex(np.exp(2j * np.pi * self.num[fixed] / self.den).sum())

    def is_identity(self) -> bool:
        return bool((self.src == np.arange(self.dim)).all() and not (self.num % self.den).any())

    def equals(self, other: "MonomialPart") -> bool:
        d = lcm(self.den, other.den)
        a, b = self.rescaled(d), other.rescaled(d)
        return bool((a.src == b.src).all() and ((a.num - b.num) % d == 0).all())


class Operator:
    """A unitary operator: monomial (exact) or dense (checked to 1e-9 on construction)."""

    __slots__ = ("dim", "monomial", "_dense")

    def __init__(self, dim: int, monomial: MonomialPart | None = None,
                 dense: np.ndarray | None = None, tol: float = DEFAULT_TOL):
        self.dim = dim
        self.monomial = monomial
        self._dense = None
        if monomial is not None:
            if sorted(monomial.src.tolist()) != list(range(dim)):
                raise InputError("monomial source map is not a permutation")
        elif dense is not None:
            dense = np.asarray(dense, dtype=complex)
            if dense.shape != (dim, dim):
                raise InputError("dense operator has wrong shape")
            defect = np.abs(dense.conj().T @ dense - np.eye(dim)).max()
            if defect > tol:
                raise InputError(f"operator is not unitary (defect {defect:.3g})")
            self._dense = dense
        else:
            raise InputError("operator needs monomial or dense data")

    @property
    def matrix(self) -> np.ndarray:
        if self._dense is None:
            self._dense = self.monomial.to_dense()
        return self._dense

    @property
    def is_monomial(self) -> bool:
        return self.monomial is not None

    def compose(self, other: "Operator") -> "Operator":
        if self.monomial is not None and other.monomial is not None:
            return Operator(self.dim, monomial=self.monomial.compose(other.monomial))
        return Operator(self.dim, dense=self.matrix @ other.matrix)

    def adjoint(self) -> "Operator":
        if self.monomial is not None:
            return Operator(self.dim, monomial=self.monomial.adjoint())
        return Operator(self.dim, dense=self.matrix.conj().T)

    def scaled(self, ph: Phase) -> "Operator":
        if self.monomial is not None:
            return Operator(self.dim, monomial=self.monomial.scaled(ph))
        return Operator(self.dim, dense=ph.complex() * self.matrix)

    def apply(self, X: np.ndarray) -> np.ndarray:
        if self.monomial is not None:
            return self.monomial.apply(X)
        return self.matrix @ X

    def trace(self) -> complex:
        if self.monomial is not None:
            return self.monomial.trace()
        return complex(np.trace(self.matrix))

    def distance_to(self, other: "Operator") -> float:
        if self.monomial is not None and other.monomial is not None \
                and self.monomial.equals(other.monomial):
            return 0.0
        return float(np.abs(self.matrix - other.matrix).max())


class ProjectiveRep:
    """Map from group elements to unitaries, carrying its multiplier.

    Operators are built on demand by ``builder(element) -> Operator`` and
    cached for groups small enough to enumerate comfortably.
    """

    def __init__(self, group: FinAbGroup, multiplier: Multiplier, dim: int, builder,
                 label: str = "", cache: bool | None = None, tol: float = DEFAULT_TOL):
        if multiplier.group != group:
            raise InputError("multiplier lives on a different group")
        if dim > DIM_CAP:
            raise ResourceLimitError(f"carrier dimension {dim} exceeds cap {DIM_CAP}")
        self.group = group
        self.multiplier = multiplier
        self.dim = dim
        self.label = label or f"rep(dim={dim})"
        self._builder = builder
        self._cache = cache if cache is not None else group.order <= 4096
        self._ops: dict[int, Operator] = {}
        self._arrays = None
        w0 = self.operator(group.zero())
        if w0.distance_to(identity_operator(dim)) > tol:
            raise DefectError("W(0) is not the identity")

    def operator(self, x: GroupElement) -> Operator:
        if x.group != self.group:
            raise InputError("element does not belong to the representation's group")
        r = x.rank
        op = self._ops.get(r)
        if op is None:
            op = self._builder(x)
            if self._cache:
                self._ops[r] = op
        return op

    @classmethod
    def from_operators(cls, group, multiplier, ops: dict, dim: int, label: str = ""):
        table = dict(ops)
        return cls(group, multiplier, dim, lambda x: table[x.rank], label=label)

    def with_override(self, x: GroupElement, op: Operator) -> "ProjectiveRep":
        """Copy of the rep with one operator replaced (fault injection in tests)."""
        base = self._builder
        rank = x.rank

        def builder(y):
            return op if y.rank == rank else base(y)

        return ProjectiveRep(self.group, self.multiplier, self.dim, builder,
                             label=self.label + "+override", cache=self._cache)

    def is_monomial(self) -> bool:
        return all(self.operator(g).is_monomial for g in
                   [self.group.zero()] + self.group.generators())

    def monomial_arrays(self):
        """(SRC, NUM, den): stacked monomial data for every group element, rank order."""
        if self._arrays is None:
            n = self.group.order
            if n > EXHAUSTIVE_CAP:
                raise ResourceLimitError("monomial array stack capped at group order 512")
            ops = [self.operator(x) for x in self.group.elements()]
            if any(o.monomial is None for o in ops):
                raise InputError("representation is not monomial")
            den = lcm(*(o.monomial.den for o in ops))
            SRC = np.stack([o.monomial.src for o in ops])
            NUM = np.stack([o.monomial.rescaled(den).num for o in ops])
            self._arrays = (SRC, NUM, den)
        return self._arrays

    def direct_sum(self, other: "ProjectiveRep") -> "ProjectiveRep":
        if other.group != self.group:
            raise InputError("direct sum needs a common group")
        den, num = self.multiplier.num_table()
        deno, numo = other.multiplier.num_table()
        d = lcm(den, deno)
        if ((num * (d // den) - numo * (d // deno)) % d).any():
            raise InputError("direct sum needs equal multipliers")
        d1, d2 = self.dim, other.dim

        def builder(x):
            a, b = self.operator(x), other.operator(x)
            if a.monomial is not None and b.monomial is not None:
                dd = lcm(a.monomial.den, b.monomial.den)
                am, bm = a.monomial.rescaled(dd), b.monomial.rescaled(dd)
                src = np.concatenate([am.src, bm.src + d1])
                numv = np.concatenate([am.num, bm.num])
                return Operator(d1 + d2, monomial=MonomialPart(d1 + d2, dd, src, numv))
            M = np.zeros((d1 + d2, d1 + d2), dtype=complex)
            M[:d1, :d1] = a.matrix
            M[d1:, d1:] = b.matrix
            return Operator(d1 + d2, dense=M)

        return ProjectiveRep(self.group, self.multiplier, d1 + d2, builder,
                             label=f"{self.label} (+) {other.label}")

    def twisted(self, a) -> "ProjectiveRep":
        """Scalar twist: operators gain e(a(x)); the multiplier is twisted consistently."""
        amap = a if isinstance(a, PhaseMap) else PhaseMap.from_callable(self.group, a)
        m2 = twist(self.multiplier, amap)
        return ProjectiveRep(self.group, m2, self.dim,
                             lambda x: self.operator(x).scaled(amap(x)),
                             label=self.label + "~twist")

    def __repr__(self):
        return f"ProjectiveRep({self.label}, dim={self.dim}, {self.group!r})"


def identity_operator(dim: int) -> Operator:
    return Operator(dim, monomial=MonomialPart(dim, 1, np.arange(dim), np.zeros(dim, dtype=np.int64)))


@dataclass
class SplittingData:
    """A subgroup together with a phase map splitting the multiplier on it."""

    subgroup: Subgroup
    c: PhaseMap

    def validate(self, m: Multiplier):
        A = self.subgroup
        if self.c(A.ambient.zero()) != ZERO:
            raise PreconditionError("splitting must vanish at 0")
        for a in A.elements():
            for b in A.elements():
                if m(a, b) != self.c(a + b) - self.c(a) - self.c(b):
                    raise PreconditionError(
                        f"splitting fails at {(a.coords, b.coords)}")


# ---------------------------------------------------------------------------
# model builders


def schrodinger_model(A: FinAbGroup, pairing: Bicharacter | None = None) -> ProjectiveRep:
    """Weyl operators W(a, b) = U(a) V(b) on functions over A.

    (U(a) f)(t) = <a, t> f(t) and (V(b) f)(t) = f(t + b); the multiplier is the
    product pairing m((a,b),(a',b')) = <a', b>.
    """
    if pairing is None:
        pairing = standard_pairing(A)
    if pairing.group != A:
        raise InputError("pairing must live on the configuration group")
    if not pairing.is_nondegenerate:
        raise InputError("pairing is degenerate")
    G = FinAbGroup(A.moduli + A.moduli)
    m = WeylProductMultiplier(G, A.rank, [[pairing.matrix[i][j] for j in range(A.rank)]
                                          for i in range(A.rank)])
    dim = A.order
    T = A.coords_array()
    moduli = np.array(A.moduli, dtype=np.int64) if A.rank else np.zeros(0, dtype=np.int64)
    w = np.array(A._weights, dtype=np.int64)
    P = pairing._cnum
    den = pairing.den
    rA = A.rank

    def builder(x):
        a = np.array(x.coords[:rA], dtype=np.int64)
        b = np.array(x.coords[rA:], dtype=np.int64)
        num = (T @ (P.T @ a)) % den if rA else np.zeros(dim, dtype=np.int64)
        shifted = (T + b) % moduli if rA else T
        src = (shifted * w).sum(axis=1)
        return Operator(dim, monomial=MonomialPart(dim, den, src, num))

    return ProjectiveRep(G, m, dim, builder, label=f"schrodinger({A!r})")


def standard_pairing(A: FinAbGroup) -> Bicharacter:
    """<u, v> = sum_i u_i v_i / n_i, the diagonal self-duality of A."""
    mat = [[Phase(1, A.moduli[i]) if i == j else ZERO for j in range(A.rank)]
           for i in range(A.rank)]
    return Bicharacter(A, mat)


def regular_rep(G: FinAbGroup) -> ProjectiveRep:
    """The translation representation on functions over G, with trivial multiplier."""
    dim = G.order
    X = G.coords_array()
    moduli = np.array(G.moduli, dtype=np.int64) if G.rank else np.zeros(0, dtype=np.int64)
    w = np.array(G._weights, dtype=np.int64)

    def builder(y):
        yv = np.array(y.coords, dtype=np.int64)
        src = (((X + yv) % moduli) * w).sum(axis=1) if G.rank else np.zeros(1, dtype=np.int64)
        return Operator(dim, monomial=MonomialPart(dim, 1, src, np.zeros(dim, dtype=np.int64)))

    return ProjectiveRep(G, zero_multiplier(G), dim, builder, label=f"regular({G!r})")


def induced_model(G: FinAbGroup, m: Multiplier, A: Subgroup,
                  c: PhaseMap | SplittingData | None = None,
                  check: bool = True) -> ProjectiveRep:
    """The model on functions over coset representatives of a maximal isotropic A.

    Functions satisfy the covariance f(x + a) = m(a, x)^{-1} c(a)^{-1} f(x)
    (which reduces to f(x + a) = m(x, a) c(a)^{-1} f(x) when m is an
    alternating bicharacter) and the action is (W(y) f)(x) = m(x, y) f(x + y).
    """
    if m.group != G or A.ambient != G:
        raise InputError("group, multiplier and subgroup do not match")
    m.ensure_verified()
    if not is_maximal_isotropic(A, antisymmetrize(m)):
        raise PreconditionError("the inducing subgroup is not maximal isotropic "
                                "for the antisymmetrized multiplier")
    for a in A.elements():
        for b in A.elements():
            if m(a, b) != m(b, a):
                raise PreconditionError(
                    f"multiplier is not symmetric on the subgroup at {(a.coords, b.coords)}")
    if c is None:
        cmap = split_symmetric(m, A)
    else:
        cmap = c.c if isinstance(c, SplittingData) else c
        SplittingData(A, cmap).validate(m)

    reps = A.transversal()
    dim = len(reps)
    pos = {A.coset_key(r): i for i, r in enumerate(reps)}
    den = lcm(m.den, cmap.den)

    def builder(y):
        src = np.zeros(dim, dtype=np.int64)
        num = np.zeros(dim, dtype=np.int64)
        for i, r in enumerate(reps):
            z = r + y
            j = pos[A.coset_key(z)]
            a = z - reps[j]
            ph = m(r, y) - m(a, reps[j]) - cmap(a)
            src[i] = j
            num[i] = ph.numerator_at(den)
        return Operator(dim, monomial=MonomialPart(dim, den, src, num))

    rep = ProjectiveRep(G, m, dim, builder, label=f"induced(|A|={A.order})")
    if check:
        n = G.order
        report = check_rep_law(rep) if n <= EXHAUSTIVE_CAP else \
            check_rep_law(rep, samples=2000)
        if not report.passed:
            raise DefectError("induced model violates the representation law",
                              witness=[c.witness for c in report.checks if not c.passed])
    return rep


# ---------------------------------------------------------------------------
# verification


def check_rep_law(W: ProjectiveRep, tolerance: float = DEFAULT_TOL,
                  samples: int = 20_000, seed: int = 0) -> VerificationReport:
    """W(x) W(y) = e(m(x, y)) W(x + y) over all pairs (|G| <= 512) or a seeded sample."""
    G = W.group
    rep = VerificationReport(f"representation law for {W.label}")
    n = G.order
    rep.add("identity", W.operator(G.zero()).distance_to(identity_operator(W.dim)) <= tolerance,
            tolerance=tolerance)

    monomial = True
    try:
        SRC, NUM, den0 = W.monomial_arrays() if n <= EXHAUSTIVE_CAP else (None, None, None)
        if SRC is None:
            monomial = False
    except (InputError, ResourceLimitError):
        monomial = False

    if monomial and n <= EXHAUSTIVE_CAP:
        mden, mnum = W.multiplier.num_table()
        d = lcm(den0, mden)
        NUMd = NUM * (d // den0)
        mnumd = mnum * (d // mden)
        S = G.addition_table()
        worst = 0.0
        witness = None
        for x in range(n):
            sx, nx = SRC[x], NUMd[x]
            src_xy = SRC[:, sx]
            num_xy = nx[None, :] + NUM[:, sx] * (d // den0)
            idx = S[x]
            exp_src = SRC[idx]
            exp_num = NUMd[idx] + mnumd[x][:, None]
            bad = (src_xy != exp_src).any(axis=1) | (((num_xy - exp_num) % d) != 0).any(axis=1)
            if bad.any():
                y = int(np.flatnonzero(bad)[0])
                wx, wy = G.element_by_rank(x), G.element_by_rank(y)
                lhs = W.operator(wx).compose(W.operator(wy))
                rhs = W.operator(wx + wy).scaled(W.multiplier(wx, wy))
                worst = max(worst, lhs.distance_to(rhs))
                if witness is None:
                    witness = (wx.coords, wy.coords)
        rep.add("law", witness is None and worst <= tolerance, residual=worst,
                tolerance=tolerance, witness=witness, note=f"exhaustive over {n}^2 pairs")
        return rep

    # generic path: exhaustive for small groups, sampled otherwise
    pairs = None
    if n * n <= samples:
        pairs = [(x, y) for x in G.elements() for y in G.elements()]
        note = f"exhaustive over {n}^2 pairs"
    else:
        rng = np.random.default_rng(seed)
        idx = rng.integers(0, n, size=(samples, 2))
        pairs = [(G.element_by_rank(int(i)), G.element_by_rank(int(j))) for i, j in idx]
        note = f"sampled {samples} pairs, seed={seed}"
    worst = 0.0
    witness = None
    for x, y in pairs:
        lhs = W.operator(x).compose(W.operator(y))
        rhs = W.operator(x + y).scaled(W.multiplier(x, y))
        dist = lhs.distance_to(rhs)
        if dist > worst:
            worst = dist
            if dist > tolerance:
                witness = (x.coords, y.coords)
    rep.add("law", worst <= tolerance, residual=worst, tolerance=tolerance,
            witness=witness, note=note)
    return rep


def commutator_scalar_check(W: ProjectiveRep, tolerance: float = DEFAULT_TOL,
                            samples: int = 20_000, seed: int = 0) -> VerificationReport:
    """W(x) W(y) = e(m~(x, y)) W(y) W(x): the commutator is the scalar m~(x, y)."""
    G = W.group
    rep = VerificationReport(f"commutation rule for {W.label}")
    n = G.order
    mt = antisymmetrize(W.multiplier)

    monomial = True
    try:
        SRC, NUM, den0 = W.monomial_arrays() if n <= EXHAUSTIVE_CAP else (None, None, None)
        if SRC is None:
            monomial = False
    except (InputError, ResourceLimitError):
        monomial = False

    if monomial and n <= EXHAUSTIVE_CAP:
        X = G.coords_array()
        d = lcm(den0, mt.den)
        worst = 0.0
        witness = None
        XX = np.repeat(X, n, axis=0)
        YY = np.tile(X, (n, 1))
        mtn = mt.pair_nums(XX, YY).reshape(n, n) * (d // mt.den)
        for x in range(n):
            sx, nx = SRC[x], NUM[x]
            src1 = SRC[:, sx]
            num1 = (nx[None, :] + NUM[:, sx]) * (d // den0)
            src2 = sx[SRC]
            num2 = (NUM + nx[SRC]) * (d // den0)
            bad = (src1 != src2).any(axis=1) | (((num1 - num2 - mtn[x][:, None]) % d) != 0).any(axis=1)
            if bad.any():
                y = int(np.flatnonzero(bad)[0])
                wx, wy = G.element_by_rank(x), G.element_by_rank(y)
                lhs = W.operator(wx).compose(W.operator(wy))
                rhs = W.operator(wy).compose(W.operator(wx)).scaled(mt(wx, wy))
                worst = max(worst, lhs.distance_to(rhs))
                if witness is None:
                    witness = (wx.coords, wy.coords)
        rep.add("commutator", witness is None and worst <= tolerance, residual=worst,
                tolerance=tolerance, witness=witness, note=f"exhaustive over {n}^2 pairs")
        return rep

    if n * n <= samples:
        pairs = [(x, y) for x in G.elements() for y in G.elements()]
        note = f"exhaustive over {n}^2 pairs"
    else:
        rng = np.random.default_rng(seed)
        idx = rng.integers(0, n, size=(samples, 2))
        pairs = [(G.element_by_rank(int(i)), G.element_by_rank(int(j))) for i, j in idx]
        note = f"sampled {samples} pairs, seed={seed}"
    worst = 0.0
    witness = None
    for x, y in pairs:
        lhs = W.operator(x).compose(W.operator(y))
        rhs = W.operator(y).compose(W.operator(x)).scaled(mt(x, y))
        dist = lhs.distance_to(rhs)
        if dist > worst:
            worst = dist
            if dist > tolerance:
                witness = (x.coords, y.coords)
    rep.add("commutator", worst <= tolerance, residual=worst, tolerance=tolerance,
            witness=witness, note=note)
    return rep


def commutant_d(W: ProjectiveRep, sv_zero: float = SV_ZERO) -> int:
    """Complex dimension of {X : X W(g) = W(g) X for the group generators}.

    Solved as an exact nullspace (singular values below ``sv_zero`` count as
    zero) up to carrier dimension 48; above that the dimension is read off the
    trace of the group-averaged commutant projector, which equals
    sum_g |tr W(g)|^2 / |G| and agrees with the nullspace count.
    """
    if W.dim > DIM_CAP:
        raise ResourceLimitError(f"carrier dimension {W.dim} exceeds cap {DIM_CAP}")
    gens = W.group.generators()
    if W.dim <= COMMUTANT_SVD_CAP:
        if not gens:
            return W.dim * W.dim
        d = W.dim
        eye = np.eye(d)
        blocks = []
        for g in gens:
            M = W.operator(g).matrix
            blocks.append(np.kron(M.T, eye) - np.kron(eye, M))
        K = np.vstack(blocks)
        sv = np.linalg.svd(K, compute_uv=False)
        return int((sv <= sv_zero).sum()) + (d * d - len(sv))
    total = 0.0
    for x in W.group.elements():
        t = W.operator(x).trace()
        total += (t * t.conjugate()).real
    val = total / W.group.order
    if abs(val - round(val)) > 1e-6:
        raise DefectError(f"commutant trace {val} is not an integer")
    return int(round(val))


def intertwiner(W1: ProjectiveRep, W2: ProjectiveRep, sv_zero: float = SV_ZERO) -> dict:
    """Basis of {T : T W1(g) = W2(g) T}; multipliers must agree exactly.

    For two irreducible models of one Heisenberg multiplier the space is
    one-dimensional and its normalised element is unitary.
    """
    if W1.group != W2.group:
        raise InputError("intertwiner needs a common group")
    den1, num1 = W1.multiplier.num_table()
    den2, num2 = W2.multiplier.num_table()
    dd = lcm(den1, den2)
    if ((num1 * (dd // den1) - num2 * (dd // den2)) % dd).any():
        raise InputError("multipliers differ; align them with a twist first")
    gens = W1.group.generators()
    n1, n2 = W1.dim, W2.dim
    if n1 * n2 > DIM_CAP:
        raise ResourceLimitError("intertwiner system too large")
    if not gens:
        basis = [np.eye(max(n1, n2), dtype=complex)[:n2, :n1]]
        dim = n1 * n2
    else:
        blocks = []
        for g in gens:
            M1 = W1.operator(g).matrix
            M2 = W2.operator(g).matrix
            blocks.append(np.kron(M1.T, np.eye(n2)) - np.kron(np.eye(n1), M2))
        K = np.vstack(blocks)
        _, sv, vh = np.linalg.svd(K)
        nzero = int((sv <= sv_zero).sum())
        null = vh[len(sv) - nzero:]          # zero directions plus any rows beyond rank
        vecs = [v.conj() for v in null]
        dim = len(vecs)
        basis = [v.reshape((n2, n1), order="F") for v in vecs]
    out = {"dimension": dim, "basis": basis}
    if dim == 1 and basis:
        T = basis[0]
        nrm = np.sqrt(np.trace(T.conj().T @ T).real / min(n1, n2))
        That = T / nrm
        out["normalized"] = That
        out["unitary_defect"] = float(np.abs(That.conj().T @ That - np.eye(n1)).max()) \
            if n1 == n2 else None
    return out
