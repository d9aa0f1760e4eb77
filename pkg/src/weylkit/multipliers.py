"""Multipliers (normalized 2-cocycles valued in Q/Z) and bicharacters.

Three multiplier backings exist:

* ``BicharacterMultiplier`` -- m(x, y) = x . B . y for a phase matrix B;
* ``WeylProductMultiplier`` -- m((a,b), (a',b')) = <a', b> for a pairing of
  the two halves of a product group (a bilinear form, stored with its split);
* ``TableMultiplier``       -- a full table of integer numerators over a
  common denominator.  Tables are the oracle; the structured backings are the
  fast path and must agree with their own tables.

All verification is exact: tables are integer arrays reduced mod a common
denominator, so the cocycle identity is decided without tolerance.
"""

from __future__ import annotations

from math import lcm

import numpy as np

from .errors import DefectError, InputError, PreconditionError, ResourceLimitError, UnsupportedOperationError
from .groups import FinAbGroup, GroupElement, Subgroup
from .intmat import diagonal_of, smith_decompose
from .phases import Phase, ZERO
from .reports import VerificationReport

TABLE_CAP = 512          # exhaustive cocycle verification up to this group order
TWIST_CAP = 1024         # twisting materialises a table
SAMPLED_TRIPLES = 100_000


class PhaseMap:
    """A finite map from group elements to Q/Z, stored by coordinate tuple."""

    __slots__ = ("group", "values")

    def __init__(self, group: FinAbGroup, values: dict):
        self.group = group
        self.values = {tuple(k): v for k, v in values.items()}

    @classmethod
    def from_callable(cls, group: FinAbGroup, fn) -> "PhaseMap":
        if group.order > TWIST_CAP:
            raise ResourceLimitError("group too large to materialise a phase map")
        return cls(group, {x.coords: fn(x) for x in group.elements()})

    @classmethod
    def zero(cls, group: FinAbGroup) -> "PhaseMap":
        return cls.from_callable(group, lambda x: ZERO)

    def __call__(self, x) -> Phase:
        key = x.coords if isinstance(x, GroupElement) else tuple(x)
        try:
            return self.values[key]
        except KeyError:
            raise InputError(f"phase map is undefined at {key}") from None

    def __contains__(self, x):
        key = x.coords if isinstance(x, GroupElement) else tuple(x)
        return key in self.values

    @property
    def den(self) -> int:
        return lcm(*(v.den for v in self.values.values())) if self.values else 1

    def items_by_rank(self):
        return sorted(self.values.items(), key=lambda kv: self.group.rank_of(kv[0]))


class Bicharacter:
    """Phase-valued bilinear form b(x, y) = sum_ij x_i B_ij y_j on a finite abelian group."""

    __slots__ = ("group", "matrix", "_den", "_cnum", "_alternating")

    def __init__(self, group: FinAbGroup, matrix):
        self.group = group
        r = group.rank
        matrix = tuple(tuple(matrix[i][j] for j in range(r)) for i in range(r))
        for i in range(r):
            for j in range(r):
                b = matrix[i][j]
                if (group.moduli[i] * b) or (group.moduli[j] * b):
                    raise InputError(
                        f"entry B[{i}][{j}]={b} is not killed by the moduli; "
                        "the form is not well defined on the group")
        self.matrix = matrix
        self._den = lcm(*(b.den for row in matrix for b in row)) if r else 1
        self._cnum = np.array(
            [[b.numerator_at(self._den) for b in row] for row in matrix], dtype=np.int64
        ).reshape(r, r)
        alt = all(matrix[i][i] == ZERO for i in range(r)) and all(
            matrix[i][j] + matrix[j][i] == ZERO for i in range(r) for j in range(i + 1, r))
        self._alternating = alt

    @classmethod
    def zero(cls, group: FinAbGroup) -> "Bicharacter":
        z = [[ZERO] * group.rank for _ in range(group.rank)]
        return cls(group, z)

    @property
    def den(self) -> int:
        return self._den

    def __call__(self, x: GroupElement, y: GroupElement) -> Phase:
        if x.group != self.group or y.group != self.group:
            raise InputError("elements do not belong to the form's group")
        xv = np.array(x.coords, dtype=np.int64)
        yv = np.array(y.coords, dtype=np.int64)
        num = int(xv @ self._cnum @ yv) % self._den
        return Phase(num, self._den)

    def pair_nums(self, XC: np.ndarray, YC: np.ndarray) -> np.ndarray:
        return np.einsum("ij,jk,ik->i", XC, self._cnum, YC) % self._den

    @property
    def is_alternating(self) -> bool:
        return self._alternating

    def radical(self) -> Subgroup:
        """{x : b(x, y) = 0 for every y}, computed by integer linear algebra."""
        rows = [list(self._cnum[:, j]) for j in range(self.group.rank)]
        return congruence_solution_subgroup(self.group, rows, self._den)

    @property
    def is_nondegenerate(self) -> bool:
        return self.radical().order == 1

    @property
    def is_symplectic(self) -> bool:
        return self._alternating and self.is_nondegenerate

    def scale(self, k: int) -> "Bicharacter":
        return Bicharacter(self.group, [[k * b for b in row] for row in self.matrix])

    def __add__(self, other: "Bicharacter") -> "Bicharacter":
        if other.group != self.group:
            raise InputError("forms on different groups")
        return Bicharacter(self.group,
                           [[a + b for a, b in zip(ra, rb)]
                            for ra, rb in zip(self.matrix, other.matrix)])

    def __sub__(self, other: "Bicharacter") -> "Bicharacter":
        return self + other.scale(-1)

    def __eq__(self, other):
        return (isinstance(other, Bicharacter) and other.group == self.group
                and other.matrix == self.matrix)

    def __hash__(self):
        return hash((self.group, self.matrix))

    def to_multiplier(self) -> "BicharacterMultiplier":
        return BicharacterMultiplier(self)

    def __repr__(self):
        return f"Bicharacter({self.group!r}, den={self._den})"


def congruence_solution_subgroup(G: FinAbGroup, rows, modulus: int) -> Subgroup:
    """The subgroup {x in G : row . x == 0 (mod modulus) for every row}."""
    r = G.rank
    if r == 0 or not rows:
        return Subgroup.full(G)
    K = [list(map(int, row)) for row in rows]
    U, D, V = smith_decompose(K)
    s = diagonal_of(D)
    t = []
    for i in range(r):
        si = s[i] if i < len(s) else 0
        if si == 0:
            t.append(1)
        else:
            from math import gcd
            t.append(modulus // gcd(si, modulus))
    cols = []
    for i in range(r):
        col = [V[a][i] * t[i] for a in range(r)]
        cols.append(col)
    gens = [G.element(c) for c in cols]
    return Subgroup.span(G, gens)


class Multiplier:
    """Base class; subclasses provide exact evaluation and vectorised numerators."""

    group: FinAbGroup

    def __init__(self, group: FinAbGroup):
        self.group = group
        self._verified = None
        self._table = None

    # -- evaluation ------------------------------------------------------
    @property
    def den(self) -> int:
        raise NotImplementedError

    def phase(self, x: GroupElement, y: GroupElement) -> Phase:
        raise NotImplementedError

    def __call__(self, x, y) -> Phase:
        return self.phase(x, y)

    def pair_nums(self, XC: np.ndarray, YC: np.ndarray) -> np.ndarray:
        """Numerators of m(x_i, y_i) over self.den for coordinate arrays."""
        raise NotImplementedError

    def num_table(self):
        """(den, order x order int64 array); only for groups of order <= TABLE_CAP."""
        if self._table is None:
            n = self.group.order
            if n > TABLE_CAP:
                raise ResourceLimitError(f"no full table for a group of order {n}")
            X = self.group.coords_array()
            XX = np.repeat(X, n, axis=0)
            YY = np.tile(X, (n, 1))
            self._table = self.pair_nums(XX, YY).reshape(n, n)
        return self.den, self._table

    def backing(self) -> str:
        raise NotImplementedError

    # -- verification ----------------------------------------------------
    def ensure_verified(self):
        if self._verified is None:
            rep = check_multiplier(self)
            self._verified = rep.passed
            if not rep.passed:
                bad = next(c for c in rep.checks if not c.passed)
                raise PreconditionError(
                    f"not a multiplier: {bad.name} fails at {bad.witness}")
        elif not self._verified:
            raise PreconditionError("not a multiplier (cached failure)")


class BicharacterMultiplier(Multiplier):
    """Multiplier backed by a bicharacter; the cocycle identity holds identically."""

    def __init__(self, bichar: Bicharacter):
        super().__init__(bichar.group)
        self.bichar = bichar

    @property
    def den(self) -> int:
        return self.bichar.den

    def phase(self, x, y):
        return self.bichar(x, y)

    def pair_nums(self, XC, YC):
        return self.bichar.pair_nums(XC, YC)

    def backing(self):
        return "bicharacter"

    def __repr__(self):
        return f"BicharacterMultiplier({self.group!r})"


class WeylProductMultiplier(BicharacterMultiplier):
    """m((a,b), (a',b')) = <a', b> on G = A x B for a pairing A x B -> Q/Z.

    Stored as the bilinear form with the pairing transposed into the corner
    block, so it shares the bicharacter fast path.
    """

    def __init__(self, group: FinAbGroup, left_rank: int, pairing):
        r = group.rank
        if not (0 <= left_rank <= r):
            raise InputError("left_rank out of range")
        rb = r - left_rank
        pairing = [[pairing[i][j] for j in range(rb)] for i in range(left_rank)]
        mat = [[ZERO] * r for _ in range(r)]
        # m(x, y) = <y_A, x_B> = sum_j sum_i y_j P[j][i] x_{left_rank + i}
        for j in range(left_rank):
            for i in range(rb):
                mat[left_rank + i][j] = pairing[j][i]
        super().__init__(Bicharacter(group, mat))
        self.left_rank = left_rank
        self.pairing = tuple(tuple(row) for row in pairing)

    def backing(self):
        return "weyl_product"

    def __repr__(self):
        return f"WeylProductMultiplier({self.group!r}, left_rank={self.left_rank})"


class TableMultiplier(Multiplier):
    """Full table of numerators over a common denominator, indexed by element rank."""

    def __init__(self, group: FinAbGroup, den: int, num: np.ndarray):
        super().__init__(group)
        n = group.order
        if n > TABLE_CAP:
            raise ResourceLimitError(f"table multiplier capped at group order {TABLE_CAP}")
        num = np.asarray(num, dtype=np.int64) % den
        if num.shape != (n, n):
            raise InputError(f"table must be {n} x {n}")
        self._den = den
        self.num = num
        self._table = num

    @classmethod
    def from_function(cls, group: FinAbGroup, fn) -> "TableMultiplier":
        vals = [[fn(x, y) for y in group.elements()] for x in group.elements()]
        den = lcm(*(v.den for row in vals for v in row))
        num = np.array([[v.numerator_at(den) for v in row] for row in vals], dtype=np.int64)
        return cls(group, den, num)

    @classmethod
    def from_multiplier(cls, m: Multiplier) -> "TableMultiplier":
        den, num = m.num_table()
        return cls(m.group, den, num.copy())

    @property
    def den(self) -> int:
        return self._den

    def phase(self, x, y):
        if x.group != self.group or y.group != self.group:
            raise InputError("elements do not belong to the multiplier's group")
        return Phase(int(self.num[x.rank, y.rank]), self._den)

    def pair_nums(self, XC, YC):
        w = np.array(self.group._weights, dtype=np.int64)
        xr = (XC * w).sum(axis=1)
        yr = (YC * w).sum(axis=1)
        return self.num[xr, yr]

    def backing(self):
        return "table"

    def __repr__(self):
        return f"TableMultiplier({self.group!r}, den={self._den})"


# ---------------------------------------------------------------------------
# operations


def check_multiplier(m: Multiplier, *, triples: int = SAMPLED_TRIPLES,
                     seed: int = 0) -> VerificationReport:
    """Verify normalization and the cocycle identity, exactly.

    Exhaustive over all |G|^3 triples when |G| <= TABLE_CAP, by vectorised
    integer arithmetic; above the cap a seeded sample of at least ``triples``
    triples is tested.  On failure the report carries a witness triple.
    """
    G = m.group
    rep = VerificationReport(f"multiplier on {G!r} ({m.backing()})")
    n = G.order
    if n <= TABLE_CAP:
        den, num = m.num_table()
        zr = G.zero().rank
        norm_ok = not num[zr, :].any() and not num[:, zr].any()
        wit = None
        if not norm_ok:
            bad = int(np.flatnonzero(num[zr, :])[0]) if num[zr, :].any() else \
                int(np.flatnonzero(num[:, zr])[0])
            wit = G.coords_of(bad)
        rep.add("normalization", norm_ok, witness=wit)

        S = G.addition_table()
        witness = None
        for z in range(n):
            lhs = num[S, z] + num                             # m(x+y, z) + m(x, y)
            rhs = num[:, S[:, z]] + num[:, z][None, :]        # m(x, y+z) + m(y, z)
            bad = np.argwhere((lhs - rhs) % den != 0)
            if bad.size:
                x, y = map(int, bad[0])
                witness = (G.coords_of(x), G.coords_of(y), G.coords_of(z))
                break
        rep.add("cocycle", witness is None, witness=witness,
                note=f"exhaustive over {n}^3 triples")
        return rep

    # sampled path (structured backings only; tables are capped by construction)
    rng = np.random.default_rng(seed)
    moduli = np.array(G.moduli, dtype=np.int64)
    den = m.den

    def sample(k):
        return rng.integers(0, moduli, size=(k, G.rank), dtype=np.int64)

    zeros = np.zeros((triples // 10, G.rank), dtype=np.int64)
    xs = sample(triples // 10)
    norm = (m.pair_nums(xs, zeros) % den).any() or (m.pair_nums(zeros, xs) % den).any()
    rep.add("normalization", not norm, note="sampled")

    X, Y, Z = sample(triples), sample(triples), sample(triples)
    XY = (X + Y) % moduli
    YZ = (Y + Z) % moduli
    lhs = (m.pair_nums(XY, Z) + m.pair_nums(X, Y)) % den
    rhs = (m.pair_nums(X, YZ) + m.pair_nums(Y, Z)) % den
    bad = np.flatnonzero(lhs != rhs)
    witness = None
    if bad.size:
        i = int(bad[0])
        witness = (tuple(X[i]), tuple(Y[i]), tuple(Z[i]))
    rep.add("cocycle", witness is None, witness=witness,
            note=f"sampled {triples} triples, seed={seed}")
    return rep


def antisymmetrize(m: Multiplier) -> Bicharacter:
    """The alternating bicharacter m~(x, y) = m(x, y) - m(y, x).

    The matrix form is recovered on basis pairs and then checked pointwise
    against the definition (exhaustively for small groups, sampled above).
    """
    m.ensure_verified()
    G = m.group
    gens = [G.element([1 if j == i else 0 for j in range(G.rank)]) for i in range(G.rank)]
    mat = [[m(gi, gj) - m(gj, gi) for gj in gens] for gi in gens]
    try:
        b = Bicharacter(G, mat)
    except InputError as exc:
        raise DefectError(f"antisymmetrization is not a bicharacter: {exc}") from exc
    if not b.is_alternating:
        raise DefectError("antisymmetrization is not alternating", witness=b.matrix)
    # pointwise agreement with the definition
    n = G.order
    if n <= TABLE_CAP:
        den, num = m.num_table()
        d = lcm(den, b.den)
        mt = (num - num.T) % den * (d // den)
        X = G.coords_array()
        XX = np.repeat(X, n, axis=0)
        YY = np.tile(X, (n, 1))
        bt = b.pair_nums(XX, YY).reshape(n, n) * (d // b.den)
        if (mt % d != bt % d).any():
            i, j = map(int, np.argwhere(mt % d != bt % d)[0])
            raise DefectError("matrix form disagrees with m(x,y) - m(y,x)",
                              witness=(G.coords_of(i), G.coords_of(j)))
    else:
        rng = np.random.default_rng(1)
        moduli = np.array(G.moduli, dtype=np.int64)
        X = rng.integers(0, moduli, size=(20_000, G.rank), dtype=np.int64)
        Y = rng.integers(0, moduli, size=(20_000, G.rank), dtype=np.int64)
        den = m.den
        d = lcm(den, b.den)
        mt = (m.pair_nums(X, Y) - m.pair_nums(Y, X)) % den * (d // den)
        bt = b.pair_nums(X, Y) * (d // b.den)
        if (mt % d != bt % d).any():
            raise DefectError("matrix form disagrees with m(x,y) - m(y,x) (sampled)")
    return b


def twist(m: Multiplier, a) -> Multiplier:
    """The equivalent multiplier m'(x,y) = m(x,y) + a(x) + a(y) - a(x+y)."""
    G = m.group
    if G.order > TWIST_CAP:
        raise ResourceLimitError("twist materialises a table; group too large")
    amap = a if isinstance(a, PhaseMap) else PhaseMap.from_callable(G, a) if callable(a) \
        else PhaseMap(G, a)
    if amap(G.zero()) != ZERO:
        raise InputError("twist function must vanish at 0")
    den0, num0 = m.num_table()
    aden = amap.den
    d = lcm(den0, aden)
    avec = np.array([amap(x).numerator_at(d) for x in G.elements()], dtype=np.int64)
    S = G.addition_table()
    num = num0 * (d // den0) + avec[:, None] + avec[None, :] - avec[S]
    return TableMultiplier(G, d, num % d)


def equivalent(m1: Multiplier, m2: Multiplier) -> bool:
    """True iff the two multipliers have equal antisymmetrization."""
    if m1.group != m2.group:
        raise InputError("multipliers on different groups")
    return antisymmetrize(m1) == antisymmetrize(m2)


def sqrt_bicharacter(beta: Bicharacter) -> Bicharacter:
    """The unique bicharacter with 2 * result = beta, on a 2-regular group."""
    G = beta.group
    if not G.is_p_regular(2):
        raise UnsupportedOperationError("square root needs a 2-regular group")
    halves = [pow(2, -1, n) if n > 1 else 0 for n in G.moduli]
    mat = [[(2 * halves[i] * halves[j]) * beta.matrix[i][j] for j in range(G.rank)]
           for i in range(G.rank)]
    out = Bicharacter(G, mat)
    if out.scale(2) != beta:
        raise DefectError("doubling the square root does not recover the form")
    return out


def split_symmetric(m: Multiplier, A: Subgroup | None = None) -> PhaseMap:
    """Solve m(a, b) = c(a+b) - c(a) - c(b) on a subgroup where m is symmetric.

    Returns the canonical solution: among all solutions (they differ by a
    character of A) the one whose numerator vector over the common denominator
    D' = D * exponent(A) is lexicographically least, elements in rank order.
    The residual is re-verified exactly; a nonzero residual is a defect, never
    a data condition.
    """
    G = m.group
    if A is None:
        A = Subgroup.full(G)
    if A.ambient != G:
        raise InputError("subgroup does not live in the multiplier's group")
    m.ensure_verified()
    elems = A.elements()
    if len(elems) > TABLE_CAP:
        raise ResourceLimitError("splitting capped at subgroup order 512")
    D = 1
    for i, a in enumerate(elems):
        for b in elems[i:]:
            vab = m(a, b)
            if vab != m(b, a):
                raise PreconditionError(
                    f"multiplier is not symmetric on the subgroup at {(a.coords, b.coords)}")
            D = lcm(D, vab.den)

    gens, orders = A.decomposition()
    c = {G.zero().coords: ZERO}
    for g, d in zip(gens, orders):
        # splitting on the cyclic factor <g>
        msum = ZERO
        partial = [ZERO]
        for s in range(d):
            term = m(s * g, g)
            msum = msum + term
            partial.append(partial[-1] + term)
        x = Phase(-msum.num, msum.den * d)          # d * x = -msum
        sigma = [t * x + partial[t] for t in range(d)]
        new_c = {}
        for coords, cb in c.items():
            b = G.element(coords)
            for t in range(d):
                e = b + t * g
                new_c[e.coords] = cb + sigma[t] + m(b, t * g)
        c = new_c
    if len(c) != A.order:
        raise DefectError("generator tower did not cover the subgroup")

    for a in elems:
        for b in elems:
            if m(a, b) != c[(a + b).coords] - c[a.coords] - c[b.coords]:
                raise DefectError("splitting residual is nonzero",
                                  witness=(a.coords, b.coords))

    # canonical representative among character shifts
    Dp = D * A.exponent
    order_elems = sorted(elems, key=lambda e: e.rank)
    tcoords = {a.coords: A.coordinates_of(a) for a in elems}
    best = None
    best_vals = None
    for u_rank in range(A.order):
        u = []
        rest = u_rank
        for d in orders:
            rest, ui = divmod(rest, d)
            u.append(ui)
        shifted = {}
        for a in order_elems:
            chi = ZERO
            for ui, ti, d in zip(u, tcoords[a.coords], orders):
                chi = chi + Phase(ui * ti, d)
            shifted[a.coords] = c[a.coords] + chi
        vec = tuple(shifted[a.coords].numerator_at(Dp) for a in order_elems)
        if best is None or vec < best:
            best = vec
            best_vals = shifted
    return PhaseMap(G, best_vals)


def is_heisenberg(m: Multiplier) -> bool:
    """True iff the antisymmetrization is nondegenerate (symplectic)."""
    return antisymmetrize(m).is_nondegenerate


def zero_multiplier(G: FinAbGroup) -> BicharacterMultiplier:
    return Bicharacter.zero(G).to_multiplier()
