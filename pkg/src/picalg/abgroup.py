"""Finitely generated abelian groups in invariant-factor form.

A group is Z^rank + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk, di >= 2.
Generators are ordered torsion first, free last; an element is an int tuple of
length ngens with torsion coordinates canonically reduced into [0, di).

Everything downstream (Picard groups, homology, Ext) reduces to the three
constructions here: presenting a quotient of Z^n by a relation lattice,
cutting out a subgroup with expression maps, and hom/ext of two groups.
"""

from __future__ import annotations

import itertools
from math import gcd

from . import intmat


class FgAbGroup:
    __slots__ = ("rank", "torsion")

    def __init__(self, rank=0, torsion=()):
        torsion = tuple(int(d) for d in torsion)
        if rank < 0:
            raise ValueError("negative rank")
        for d in torsion:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
        for a, b in zip(torsion, torsion[1:]):
            if b % a:
                raise ValueError("invariant factors must form a divisibility chain")
        self.rank = int(rank)
        self.torsion = torsion

    @property
    def ngens(self):
        return len(self.torsion) + self.rank

    def orders(self):
        """Per-generator order, 0 meaning infinite."""
        return self.torsion + (0,) * self.rank

    def is_trivial(self):
        return self.ngens == 0

    def order(self):
        """Group order, or None when infinite."""
        if self.rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def zero(self):
        return (0,) * self.ngens

    def reduce(self, vec):
        if len(vec) != self.ngens:
            raise ValueError("element has wrong length for %r" % self)
        out = []
        for x, d in zip(vec, self.orders()):
            out.append(x % d if d else x)
        return tuple(out)

    def add(self, a, b):
        return self.reduce([x + y for x, y in zip(a, b)])

    def neg(self, a):
        return self.reduce([-x for x in a])

    def scale(self, n, a):
        return self.reduce([n * x for x in a])

    def gen(self, i):
        v = [0] * self.ngens
        v[i] = 1
        return tuple(v)

    def gens(self):
        return [self.gen(i) for i in range(self.ngens)]

    def elements(self):
        """Iterate all elements; only for finite groups."""
        if self.rank:
            raise ValueError("infinite group")
        for combo in itertools.product(*[range(d) for d in self.torsion]):
            yield tuple(combo)

    def element_order(self, a):
        a = self.reduce(a)
        if any(a[len(self.torsion):]):
            return None
        n = 1
        for x, d in zip(a, self.torsion):
            if x:
                n = n * (d // gcd(d, x)) // gcd(n, d // gcd(d, x))
        return n

    def relation_cols(self):
        """Columns d_i * e_i spanning the relation lattice in Z^ngens."""
        k = len(self.torsion)
        cols = intmat.zeros(self.ngens, k)
        for i, d in enumerate(self.torsion):
            cols[i][i] = d
        return cols

    def __eq__(self, other):
        return (
            isinstance(other, FgAbGroup)
            and self.rank == other.rank
            and self.torsion == other.torsion
        )

    def __hash__(self):
        return hash((self.rank, self.torsion))

    def __repr__(self):
        return "FgAbGroup(rank=%d, torsion=%r)" % (self.rank, list(self.torsion))

    def pretty(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append("Z^%d" % self.rank)
        parts.extend("Z/%d" % d for d in self.torsion)
        return " + ".join(parts) if parts else "0"


Z = FgAbGroup(rank=1)
TRIVIAL = FgAbGroup()


def cyclic(d):
    return FgAbGroup(torsion=(d,)) if d else Z


def canonical_direct_sum(groups):
    """Canonical form of a direct sum, with coordinate transport both ways.

    Returns (G, embed, split): embed(i, vec) maps an element of groups[i] into
    G, split(vec) maps back to the tuple of components.
    """
    orders = [d for g in groups for d in g.orders()]
    n = len(orders)
    rel = []
    for idx, o in enumerate(orders):
        if o:
            col = [0] * n
            col[idx] = o
            rel.append(col)
    pres = Presentation(n, rel)
    G = pres.group
    offsets = []
    off = 0
    for g in groups:
        offsets.append(off)
        off += g.ngens

    def embed(i, vec):
        raw = [0] * n
        for k, x in enumerate(vec):
            raw[offsets[i] + k] = x
        return pres.to_group(raw)

    def split(coords):
        raw = pres.lift(coords)
        out = []
        for g, o in zip(groups, offsets):
            out.append(g.reduce(raw[o:o + g.ngens]))
        return tuple(out)

    return G, embed, split


class AbHom:
    """Homomorphism given by its matrix: column j = image of j-th generator.

    Entries of torsion codomain coordinates are stored reduced; equality of
    homs is equality of reduced matrices.
    """

    __slots__ = ("src", "dst", "mat")

    def __init__(self, src: FgAbGroup, dst: FgAbGroup, mat, check=True):
        self.src = src
        self.dst = dst
        if len(mat) != dst.ngens or any(len(row) != src.ngens for row in mat):
            raise ValueError("hom matrix has wrong shape")
        dorders = dst.orders()
        self.mat = [
            [x % d if d else x for x in row] for row, d in zip(mat, dorders)
        ]
        if check:
            self._check()

    def _check(self):
        for j, d in enumerate(self.src.orders()):
            if d == 0:
                continue
            col = [self.mat[i][j] for i in range(self.dst.ngens)]
            if any(x for x in self.dst.reduce(self.dst.scale(d, col))):
                raise ValueError(
                    "ill-defined hom: order-%d generator %d has image of larger order"
                    % (d, j)
                )

    @classmethod
    def zero(cls, src, dst):
        return cls(src, dst, intmat.zeros(dst.ngens, src.ngens), check=False)

    @classmethod
    def identity(cls, g):
        return cls(g, g, intmat.identity(g.ngens), check=False)

    @classmethod
    def scalar(cls, g, n):
        m = intmat.zeros(g.ngens, g.ngens)
        for i in range(g.ngens):
            m[i][i] = n
        return cls(g, g, m, check=False)

    def __call__(self, vec):
        vec = self.src.reduce(vec)
        return self.dst.reduce(intmat.matvec(self.mat, list(vec)))

    def compose(self, other: "AbHom") -> "AbHom":
        """self after other."""
        if other.dst != self.src:
            raise ValueError("compose: type mismatch")
        return AbHom(other.src, self.dst, intmat.matmul(self.mat, other.mat), check=False)

    def add(self, other):
        if (other.src, other.dst) != (self.src, self.dst):
            raise ValueError("add: type mismatch")
        m = [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.mat, other.mat)]
        return AbHom(self.src, self.dst, m, check=False)

    def neg(self):
        return AbHom(self.src, self.dst, [[-a for a in row] for row in self.mat], check=False)

    def scale(self, n):
        return AbHom(self.src, self.dst, [[n * a for a in row] for row in self.mat], check=False)

    def is_zero(self):
        return all(v == 0 for row in self.mat for v in row)

    def __eq__(self, other):
        return (
            isinstance(other, AbHom)
            and self.src == other.src
            and self.dst == other.dst
            and self.mat == other.mat
        )

    def __hash__(self):
        return hash((self.src, self.dst, tuple(map(tuple, self.mat))))

    def __repr__(self):
        return "AbHom(%s -> %s, %r)" % (self.src.pretty(), self.dst.pretty(), self.mat)

    # -- structural maps ---------------------------------------------------

    def kernel_lattice(self):
        """Basis columns in Z^{src.ngens} of {x : f(x) = 0 in dst}."""
        stacked = intmat.hstack(
            [row[:] for row in self.mat], self.dst.relation_cols()
        )
        basis = intmat.kernel_basis(stacked, cols=self.src.ngens + len(self.dst.torsion))
        ncols = len(basis[0]) if basis else 0
        return [[basis[i][j] for j in range(ncols)] for i in range(self.src.ngens)]

    def kernel(self):
        return subgroup(self.src, columns_of(self.kernel_lattice()))

    def image(self):
        return subgroup(self.dst, [self(self.src.gen(j)) for j in range(self.src.ngens)])

    def cokernel(self):
        return quotient(self.dst, [self(self.src.gen(j)) for j in range(self.src.ngens)])

    def is_injective(self):
        k, _, _ = self.kernel()
        return k.is_trivial()

    def is_surjective(self):
        q, _, _ = self.cokernel()
        return q.is_trivial()

    def is_iso(self):
        return self.is_injective() and self.is_surjective()


def columns_of(mat):
    if not mat:
        return []
    rows = len(mat)
    return [tuple(mat[i][j] for i in range(rows)) for j in range(len(mat[0]))]


def hom_vec_solve(dst: FgAbGroup, cols, target):
    """Integer coefficients c with sum c_j * cols_j == target in dst, or None."""
    n = dst.ngens
    mat = [[c[i] for c in cols] for i in range(n)]
    stacked = intmat.hstack(mat, dst.relation_cols())
    sol = intmat.solve(stacked, list(target), cols=len(cols) + len(dst.torsion))
    if sol is None:
        return None
    return sol[: len(cols)]


# -- presentations ----------------------------------------------------------


class Presentation:
    """Quotient of Z^ngens by the column lattice of `relations`.

    Exposes the canonical group together with both transport directions:
    to_group maps a Z^ngens vector to canonical coordinates, and lift gives a
    preimage in Z^ngens of each canonical generator.
    """

    __slots__ = ("ngens", "group", "_umat", "_keep", "_lift_cols")

    def __init__(self, ngens, relations):
        # relations: list of length-ngens int vectors (columns of the lattice)
        rel = [[int(r[i]) for r in relations] for i in range(ngens)]
        if not relations:
            rel = [[] for _ in range(ngens)]
        if ngens == 0:
            self.ngens = 0
            self.group = TRIVIAL
            self._umat = []
            self._keep = []
            self._lift_cols = []
            return
        res = intmat.snf(rel)
        diag = res.diagonal + [0] * (ngens - len(res.diagonal))
        keep = []
        torsion = []
        for i, d in enumerate(diag):
            d = abs(d)
            if d == 1:
                continue
            keep.append(i)
            if d >= 2:
                torsion.append(d)
        nfree = sum(1 for i in keep if abs(diag[i]) == 0)
        # SNF diagonal is an ascending divisibility chain, so `torsion`
        # already satisfies the invariant-factor constraints.
        self.ngens = ngens
        self.group = FgAbGroup(rank=nfree, torsion=torsion)
        self._umat = res.U
        self._keep = keep
        self._lift_cols = [
            tuple(res.Uinv[r][i] for r in range(ngens)) for i in keep
        ]

    def to_group(self, vec):
        if self.ngens == 0:
            return ()
        y = intmat.matvec(self._umat, list(vec))
        return self.group.reduce([y[i] for i in self._keep])

    def lift(self, coords):
        """A Z^ngens representative of the element with canonical coordinates."""
        out = [0] * self.ngens
        for c, col in zip(coords, self._lift_cols):
            if c:
                for i in range(self.ngens):
                    out[i] += c * col[i]
        return out


def subgroup(G: FgAbGroup, gens):
    """Subgroup of G generated by `gens`.

    Returns (H, incl, express): H canonical, incl: AbHom H -> G, and
    express(g) giving H-coordinates of g or None when g is outside.
    """
    gens = [G.reduce(g) for g in gens]
    k = len(gens)
    if k == 0:
        H = TRIVIAL
        return H, AbHom.zero(H, G), lambda g: (() if not any(G.reduce(g)) else None)
    w = [[g[i] for g in gens] for i in range(G.ngens)]
    stacked = intmat.hstack(w, G.relation_cols())
    sols = intmat.kernel_basis(stacked, cols=k + len(G.torsion))
    rel_cols = []
    ncols = len(sols[0]) if sols else 0
    for j in range(ncols):
        rel_cols.append([sols[i][j] for i in range(k)])
    pres = Presentation(k, rel_cols)
    H = pres.group
    incl_mat = intmat.zeros(G.ngens, H.ngens)
    for idx in range(H.ngens):
        lift = pres.lift(H.gen(idx))
        img = G.zero()
        for c, g in zip(lift, gens):
            img = G.add(img, G.scale(c, g))
        for i in range(G.ngens):
            incl_mat[i][idx] = img[i]
    incl = AbHom(H, G, incl_mat)

    def express(g):
        coeffs = hom_vec_solve(G, gens, G.reduce(g))
        if coeffs is None:
            return None
        return pres.to_group(coeffs)

    return H, incl, express


def quotient(G: FgAbGroup, gens):
    """Quotient of G by the subgroup generated by `gens`.

    Returns (Q, proj, section) with proj: AbHom G -> Q and section mapping
    canonical Q-coordinates to representatives in G.
    """
    rel = columns_of(G.relation_cols()) + [G.reduce(g) for g in gens]
    pres = Presentation(G.ngens, [list(r) for r in rel])
    Q = pres.group
    proj_mat = [[0] * G.ngens for _ in range(Q.ngens)]
    for j in range(G.ngens):
        c = pres.to_group(G.gen(j))
        for i in range(Q.ngens):
            proj_mat[i][j] = c[i]
    proj = AbHom(G, Q, proj_mat, check=False)

    def section(coords):
        return G.reduce(pres.lift(coords))

    return Q, proj, section


# -- hom and ext ------------------------------------------------------------


class HomGroup:
    """hom(A, B) as a canonical group plus representing homomorphisms."""

    def __init__(self, A: FgAbGroup, B: FgAbGroup):
        self.src = A
        self.dst = B
        raw = []  # (i, j, scale, order); order 0 = infinite
        for j, dj in enumerate(A.orders()):
            for i, ei in enumerate(B.orders()):
                if dj == 0:
                    raw.append((i, j, 1, ei))
                elif ei == 0:
                    continue  # torsion into free is zero
                else:
                    g = gcd(dj, ei)
                    if g > 1:
                        raw.append((i, j, ei // g, g))
        self._raw = raw
        rel = []
        for idx, (_, _, _, o) in enumerate(raw):
            if o:
                col = [0] * len(raw)
                col[idx] = o
                rel.append(col)
        self._pres = Presentation(len(raw), rel)
        self.group = self._pres.group

    def _from_raw(self, coeffs):
        mat = intmat.zeros(self.dst.ngens, self.src.ngens)
        for c, (i, j, s, _) in zip(coeffs, self._raw):
            mat[i][j] += c * s
        return AbHom(self.src, self.dst, mat, check=False)

    def basis(self):
        return [self.from_coords(self.group.gen(i)) for i in range(self.group.ngens)]

    def from_coords(self, coords):
        return self._from_raw(self._pres.lift(coords))

    def coords(self, f: AbHom):
        if (f.src, f.dst) != (self.src, self.dst):
            raise ValueError("hom has wrong type")
        raw = []
        for (i, j, s, o) in self._raw:
            ei = self.dst.orders()[i]
            v = f.mat[i][j]
            if ei == 0:
                raw.append(v)  # s == 1 here
            else:
                # solve c*s = v (mod ei); well-definedness makes s | v possible
                c = _solve_scalar_cong(s, v, ei)
                if c is None:
                    raise ValueError("matrix does not define a hom")
                raw.append(c)
        # entries not covered by raw generators must vanish
        covered = {(i, j) for (i, j, _, _) in self._raw}
        for i in range(self.dst.ngens):
            for j in range(self.src.ngens):
                if (i, j) not in covered and f.mat[i][j]:
                    raise ValueError("matrix does not define a hom")
        return self._pres.to_group(raw)


def _solve_scalar_cong(a, b, m):
    """c with c*a == b (mod m), m > 0."""
    g = gcd(a, m)
    if b % g:
        return None
    a, b, m2 = a // g, b // g, m // g
    return (b * pow(a, -1, m2)) % m2 if m2 > 1 else 0


def hom_group(A, B):
    """The group hom(A, B) with a basis of representing homomorphisms."""
    hg = HomGroup(A, B)
    return hg.group, hg.basis()


class ExtGroup:
    """Ext^1(A, B) = sum of B/d_j B over the torsion generators of A.

    class_coords maps a list (one B-element per torsion generator of A,
    representing the restriction class on that cyclic summand) to canonical
    coordinates.
    """

    def __init__(self, A: FgAbGroup, B: FgAbGroup):
        self.src = A
        self.dst = B
        self._parts = []
        raw_orders = []
        for d in A.torsion:
            Q, proj, _ = quotient(B, [B.scale(d, g) for g in B.gens()])
            self._parts.append((d, Q, proj))
            raw_orders.extend(Q.orders())
        rel = []
        n = len(raw_orders)
        for idx, o in enumerate(raw_orders):
            if o:
                col = [0] * n
                col[idx] = o
                rel.append(col)
        self._pres = Presentation(n, rel)
        self.group = self._pres.group

    def class_coords(self, reps):
        """reps: one B-element per torsion generator of A."""
        raw = []
        for (d, Q, proj), r in zip(self._parts, reps):
            raw.extend(proj(self.dst.reduce(r)))
        return self._pres.to_group(raw)


def ext_group(A, B):
    return ExtGroup(A, B).group


def two_functors(A):
    """(A/2A with projection, 2-torsion subgroup with inclusion)."""
    mod2, proj, _ = quotient(A, [A.scale(2, g) for g in A.gens()])
    tors, incl, _ = AbHom.scalar(A, 2).kernel()
    return (mod2, proj), (tors, incl)


def sub_quotient(f: AbHom):
    """(kernel + inclusion, cokernel + projection, image) of a hom."""
    ker, kincl, _ = f.kernel()
    cok, cproj, _ = f.cokernel()
    img, _, _ = f.image()
    return (ker, kincl), (cok, cproj), img


# -- divisible groups --------------------------------------------------------


def _factorize(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class DivisibleGroup:
    """Q^q_rank + sum of Pruefer groups Z(p^inf); injective targets only."""

    __slots__ = ("q_rank", "pruefer")

    def __init__(self, q_rank=0, pruefer=()):
        self.q_rank = q_rank
        self.pruefer = tuple(sorted(pruefer))  # (prime, multiplicity)

    def two_torsion(self):
        mult = dict(self.pruefer).get(2, 0)
        return FgAbGroup(torsion=(2,) * mult)

    def is_trivial(self):
        return self.q_rank == 0 and not self.pruefer

    def __eq__(self, other):
        return (
            isinstance(other, DivisibleGroup)
            and self.q_rank == other.q_rank
            and self.pruefer == other.pruefer
        )

    def __hash__(self):
        return hash((self.q_rank, self.pruefer))

    def pretty(self):
        parts = []
        if self.q_rank == 1:
            parts.append("Q")
        elif self.q_rank > 1:
            parts.append("Q^%d" % self.q_rank)
        parts.extend("Z(%d^inf)^%d" % (p, m) if m > 1 else "Z(%d^inf)" % p
                     for p, m in self.pruefer)
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return "DivisibleGroup(%s)" % self.pretty()


class Hull:
    """Divisible hull of a finitely generated group with embedding data.

    Each torsion generator of order d gets its own Z(p^inf) for every prime
    p | d, embedded as 1/p^{v_p(d)}; free generators land in Q summands.
    gen_summands[i] lists (prime, exponent, summand index) per generator.
    """

    def __init__(self, A: FgAbGroup):
        self.src = A
        counts = {}
        q_rank = 0
        self.gen_summands = []
        for d in A.orders():
            if d == 0:
                self.gen_summands.append([("q", 0, q_rank)])
                q_rank += 1
            else:
                entry = []
                for p, k in sorted(_factorize(d).items()):
                    idx = counts.get(p, 0)
                    counts[p] = idx + 1
                    entry.append((p, k, idx))
                self.gen_summands.append(entry)
        self.div = DivisibleGroup(q_rank=q_rank, pruefer=tuple(counts.items()))
        # order the p=2 summands for the two-torsion basis
        self._two_slots = []
        for i, entry in enumerate(self.gen_summands):
            for (p, k, idx) in entry:
                if p == 2:
                    self._two_slots.append((idx, i, k))
        self._two_slots.sort()

    def two_torsion(self):
        return self.div.two_torsion()

    def two_torsion_map(self, tors: FgAbGroup, incl: AbHom):
        """AbHom from the 2-torsion of src (given with its inclusion) to 2Q."""
        W = self.two_torsion()
        mat = intmat.zeros(W.ngens, tors.ngens)
        for j in range(tors.ngens):
            rep = incl(tors.gen(j))  # an order <= 2 element of src
            for slot, (idx, i, k) in enumerate(self._two_slots):
                a = rep[i]
                # component of a / 2^k in Z(2^inf); order <= 2 forces 2^{k-1} | a
                if a % (1 << (k - 1)):
                    raise ValueError("element is not 2-torsion")
                mat[slot][j] = (a >> (k - 1)) & 1
        return AbHom(tors, W, mat, check=False)

    def describe_gen(self, i):
        d = self.src.orders()[i]
        entry = self.gen_summands[i]
        if d == 0:
            return "gen %d -> 1 in Q_%d" % (i, entry[0][2])
        return "gen %d -> " % i + " + ".join(
            "1/%d in Z(%d^inf)_%d" % (p ** k, p, idx) for (p, k, idx) in entry
        )


def divisible_hull(A: FgAbGroup) -> Hull:
    return Hull(A)
