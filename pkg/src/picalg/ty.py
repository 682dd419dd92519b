"""The classification category of triples (A0, A1, a : A0/2A0 -> A1).

A triple records pi0, pi1 and the self-braiding invariant of a symmetric
categorical group; morphisms are pairs (f0, f1) making the evident square
commute.  Equivalence of triples is decided by a rank-profile invariant of
the F2 matrix of `a` relative to the filtrations that group automorphisms
can actually realize.
"""

from __future__ import annotations

from .abgroup import (
    AbHom,
    DivisibleGroup,
    FgAbGroup,
    TRIVIAL,
    HomGroup,
    canonical_direct_sum,
    quotient,
    subgroup,
)
from . import intmat


def _v2(n):
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v


def mod2_quotient(A: FgAbGroup):
    return quotient(A, [A.scale(2, g) for g in A.gens()])


class TyObject:
    """Triple (A0, A1, a) with a stored as a hom out of A0/2A0."""

    __slots__ = ("A0", "A1", "mod2", "proj2", "a")

    def __init__(self, A0: FgAbGroup, A1: FgAbGroup, a_mat):
        self.A0 = A0
        self.A1 = A1
        mod2, proj2, _ = mod2_quotient(A0)
        self.mod2 = mod2
        self.proj2 = proj2
        # the AbHom check enforces that every value is 2-torsion in A1
        self.a = AbHom(mod2, A1, a_mat)

    @classmethod
    def from_k(cls, A0, A1, k_values):
        """Build from the values of the k-invariant on the generators of A0."""
        mod2, proj2, section = mod2_quotient(A0)
        mat = intmat.zeros(A1.ngens, mod2.ngens)
        for j in range(mod2.ngens):
            rep = section(mod2.gen(j))
            val = A1.zero()
            for c, kv in zip(rep, k_values):
                val = A1.add(val, A1.scale(c, kv))
            for i in range(A1.ngens):
                mat[i][j] = val[i]
        return cls(A0, A1, mat)

    def k_of(self, x):
        """Value of the induced invariant on an element of A0."""
        return self.a(self.proj2(x))

    def is_trivial(self):
        return self.A0.is_trivial() and self.A1.is_trivial()

    def __eq__(self, other):
        return (
            isinstance(other, TyObject)
            and self.A0 == other.A0
            and self.A1 == other.A1
            and self.a == other.a
        )

    def __hash__(self):
        return hash((self.A0, self.A1, self.a))

    def __repr__(self):
        return "TyObject(%s, %s, a=%r)" % (
            self.A0.pretty(),
            self.A1.pretty(),
            self.a.mat,
        )

    # -- equivalence ---------------------------------------------------------

    def _profile_matrix(self):
        """F2 matrix of `a` in the pure bases, with filtration labels.

        Columns: generators of A0 that survive in A0/2A0, labelled by
        v = v2(order) (None for free generators, meaning infinity).
        Rows: the elements (d/2) * g over even-order generators g of A1,
        labelled by h = v2(order).
        """
        cols = []
        for i, d in enumerate(self.A0.orders()):
            if d == 0:
                cols.append((i, None))
            elif d % 2 == 0:
                cols.append((i, _v2(d)))
        rows = []
        for j, e in enumerate(self.A1.orders()):
            if e and e % 2 == 0:
                rows.append((j, _v2(e)))
        mat = [[0] * len(cols) for _ in rows]
        for c, (i, _) in enumerate(cols):
            val = self.k_of(self.A0.gen(i))
            for r, (j, _) in enumerate(rows):
                e = self.A1.orders()[j]
                x = val[j] % e
                # 2-torsion coordinate is 0 or e/2
                mat[r][c] = 1 if x == e // 2 and x else 0
        return mat, [v for (_, v) in cols], [h for (_, h) in rows]

    def rank_profile(self):
        """Complete equivalence invariant of the triple.

        For every pair of filtration levels (t, s): the F2 rank of the
        submatrix on columns of depth <= t and rows of height < s.  The label
        sets are determined by A0 and A1, so profiles of triples with equal
        groups are directly comparable.
        """
        mat, vlab, hlab = self._profile_matrix()
        inf = float("inf")
        vkeys = [inf if v is None else v for v in vlab]
        tlevels = sorted(set(vkeys))
        slevels = sorted(set(hlab)) + [inf]
        prof = []
        for t in tlevels:
            cols = [c for c, v in enumerate(vkeys) if v <= t]
            for s in slevels:
                rows = [r for r, h in enumerate(hlab) if h < s]
                prof.append((t, s, _f2_rank([[mat[r][c] for c in cols] for r in rows])))
        return (self.A0, self.A1, tuple(prof))

    def equivalent(self, other: "TyObject"):
        """Isomorphism of triples: groups equal and rank profiles agree."""
        if self.A0 != other.A0 or self.A1 != other.A1:
            return False
        return self.rank_profile() == other.rank_profile()

    def canonical_a(self):
        """Canonical orbit representative for the matrix of `a`.

        Pivots are placed block by block (ascending depth, then ascending
        height) from the block counts determined by the rank profile; two
        triples are equivalent iff their canonical matrices coincide.
        """
        mat, vlab, hlab = self._profile_matrix()
        vclasses = sorted({v for v in vlab}, key=lambda v: (v is None, v))
        hclasses = sorted({h for h in hlab})

        def rank_upto(vi, hi):
            cols = [c for c, v in enumerate(vlab)
                    if _vkey(v) <= _vkey(vclasses[vi])] if vi >= 0 else []
            rows = [r for r, h in enumerate(hlab) if h <= hclasses[hi]] if hi >= 0 else []
            return _f2_rank([[mat[r][c] for c in cols] for r in rows])

        counts = {}
        for vi in range(len(vclasses)):
            for hi in range(len(hclasses)):
                counts[(vi, hi)] = (
                    rank_upto(vi, hi)
                    - rank_upto(vi - 1, hi)
                    - rank_upto(vi, hi - 1)
                    + rank_upto(vi - 1, hi - 1)
                )
        out = [[0] * len(vlab) for _ in hlab]
        used_rows, used_cols = set(), set()
        for vi, vc in enumerate(vclasses):
            for hi, hc in enumerate(hclasses):
                n = counts.get((vi, hi), 0)
                rows = [r for r, h in enumerate(hlab) if h == hc and r not in used_rows]
                cols = [c for c, v in enumerate(vlab) if v == vc and c not in used_cols]
                for k in range(n):
                    out[rows[k]][cols[k]] = 1
                    used_rows.add(rows[k])
                    used_cols.add(cols[k])
        return out


def _vkey(v):
    return float("inf") if v is None else v


def _f2_rank(mat):
    mat = [row[:] for row in mat]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    col = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col] & 1:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][col] & 1:
                mat[r] = [(a + b) % 2 for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


class TyMorphism:
    __slots__ = ("src", "dst", "f0", "f1")

    def __init__(self, src: TyObject, dst: TyObject, f0: AbHom, f1: AbHom, check=True):
        self.src = src
        self.dst = dst
        self.f0 = f0
        self.f1 = f1
        if check and not self.square_commutes():
            raise ValueError("pair does not commute with the k-invariants")

    def square_commutes(self):
        for i in range(self.src.A0.ngens):
            e = self.src.A0.gen(i)
            lhs = self.dst.k_of(self.f0(e))
            rhs = self.f1(self.src.k_of(e))
            if lhs != rhs:
                return False
        return True

    def compose(self, other: "TyMorphism"):
        """self after other."""
        return TyMorphism(
            other.src,
            self.dst,
            self.f0.compose(other.f0),
            self.f1.compose(other.f1),
            check=False,
        )

    def add(self, other):
        return TyMorphism(self.src, self.dst, self.f0.add(other.f0), self.f1.add(other.f1), check=False)

    def __eq__(self, other):
        return (
            isinstance(other, TyMorphism)
            and self.f0 == other.f0
            and self.f1 == other.f1
        )

    def __hash__(self):
        return hash((self.f0, self.f1))

    def __repr__(self):
        return "TyMorphism(f0=%r, f1=%r)" % (self.f0.mat, self.f1.mat)


class InjectiveTyTarget:
    """The triple r(Q) for divisible Q; the injective normal form."""

    __slots__ = ("div", "two_torsion")

    def __init__(self, div: DivisibleGroup):
        self.div = div
        self.two_torsion = div.two_torsion()

    def __repr__(self):
        return "InjectiveTyTarget(%s)" % self.div.pretty()


def build_special(kind, M):
    """The named triples: l(M), r(M), M[0] = deg0, M[1] = deg1."""
    if kind == "l":
        mod2, _, _ = mod2_quotient(M)
        return TyObject(M, mod2, intmat.identity(mod2.ngens))
    if kind == "r":
        if isinstance(M, DivisibleGroup):
            return InjectiveTyTarget(M)
        tors, incl, _ = AbHom.scalar(M, 2).kernel()
        # a: tors/2tors = tors -> M is the inclusion of the 2-torsion
        mod2, _, section = mod2_quotient(tors)
        mat = intmat.zeros(M.ngens, mod2.ngens)
        for j in range(mod2.ngens):
            img = incl(tors.reduce(section(mod2.gen(j))))
            for i in range(M.ngens):
                mat[i][j] = img[i]
        return TyObject(tors, M, mat)
    if kind == "deg0":
        return TyObject(M, TRIVIAL, _zero_a(M, TRIVIAL))
    if kind == "deg1":
        return TyObject(TRIVIAL, M, _zero_a(TRIVIAL, M))
    raise ValueError("unknown kind %r" % (kind,))


def _zero_a(A0, A1):
    mod2, _, _ = mod2_quotient(A0)
    return intmat.zeros(A1.ngens, mod2.ngens)


class TyHomGroup:
    """The abelian group of Ty-morphisms X -> Y with representatives."""

    def __init__(self, X: TyObject, Y: TyObject):
        self.src = X
        self.dst = Y
        self._h0 = HomGroup(X.A0, Y.A0)
        self._h1 = HomGroup(X.A1, Y.A1)
        P, embed, split = canonical_direct_sum([self._h0.group, self._h1.group])
        self._P = P
        self._embed = embed
        self._split = split
        # defect of the commuting square, one Y.A1 value per A0 generator
        T, t_embed, _ = canonical_direct_sum([Y.A1] * X.A0.ngens)
        mat = intmat.zeros(T.ngens, P.ngens)
        for col in range(P.ngens):
            c0, c1 = split(P.gen(col))
            f0 = self._h0.from_coords(c0)
            f1 = self._h1.from_coords(c1)
            total = T.zero()
            for j in range(X.A0.ngens):
                e = X.A0.gen(j)
                d = Y.A1.add(Y.k_of(f0(e)), Y.A1.neg(f1(X.k_of(e))))
                total = T.add(total, t_embed(j, d))
            for i in range(T.ngens):
                mat[i][col] = total[i]
        defect = AbHom(P, T, mat, check=False)
        self.group, self._incl, self._express = defect.kernel()

    def from_coords(self, coords):
        c0, c1 = self._split(self._incl(coords))
        return TyMorphism(
            self.src,
            self.dst,
            self._h0.from_coords(c0),
            self._h1.from_coords(c1),
            check=False,
        )

    def basis(self):
        return [self.from_coords(self.group.gen(i)) for i in range(self.group.ngens)]

    def coords(self, f: TyMorphism):
        p = self._P.add(
            self._embed(0, self._h0.coords(f.f0)),
            self._embed(1, self._h1.coords(f.f1)),
        )
        c = self._express(p)
        if c is None:
            raise ValueError("pair is not a Ty-morphism")
        return c


def ty_hom_group(X, Y):
    """(group of Ty-morphisms, representing morphisms)."""
    hg = TyHomGroup(X, Y)
    return hg.group, hg.basis()


def classify(X, f: TyMorphism = None):
    """Projectivity/injectivity of an object, plus morphism flags when given.

    Projective objects are exactly those of shape l(free); injective ones are
    r(divisible), which for a finitely generated nonzero pi1 never happens.
    """
    flags = {}
    if isinstance(X, InjectiveTyTarget):
        flags["projective"] = X.div.is_trivial() and X.two_torsion.is_trivial()
        flags["injective"] = True
    else:
        free = not X.A0.torsion
        flags["projective"] = free and X.a.is_iso()
        if X.A1.is_trivial():
            # divisible f.g. group = 0; need A0 = 2-torsion(0) = 0 as well
            flags["injective"] = X.A0.is_trivial()
        else:
            flags["injective"] = False
    if f is not None:
        flags["essentially_surjective"] = f.f0.is_surjective()
        flags["faithful"] = f.f1.is_injective()
    return flags
