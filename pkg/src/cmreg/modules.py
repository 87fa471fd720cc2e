"""Finitely presented graded modules and the subquotient calculus.

A module is a cokernel: free module of generators (with twists) modulo the
span of relation columns; over a quotient ring the defining ideal is folded
in by the Groebner layer.  Kernels, homology, colons and annihilators all
reduce to one primitive: syzygies of an explicit list of vectors, computed
by the basis-element elimination trick (adjoin a unit tag column per
vector, take basis elements supported only on the tags).
"""

from math import inf

from .freemod import (FreeModule, GradedMap, column_from_vec, vec_degree,
                      vec_from_column, vec_is_homogeneous)
from .groebner import groebner_basis, syzygy_generators
from .hilbert import HilbertSeries, monomial_ideal_numerator
from .minimize import minimize_presentation
from .poly import Polynomial, mono_deg


class PresentedModule:
    __slots__ = ("ring", "gens_free", "rel_cols", "_cache")

    def __init__(self, ring, gens_free, rel_cols):
        self.ring = ring
        self.gens_free = gens_free
        cols = []
        for c in rel_cols:
            if not c:
                continue
            if not vec_is_homogeneous(c, gens_free.twists):
                raise ValueError("relation column is not homogeneous")
            cols.append(dict(c))
        self.rel_cols = tuple(cols)
        self._cache = {}

    # -- constructors ----------------------------------------------------
    @classmethod
    def free(cls, ring, twists):
        return cls(ring, FreeModule(ring, twists), [])

    @classmethod
    def zero(cls, ring):
        return cls(ring, FreeModule(ring, []), [])

    @classmethod
    def cyclic(cls, ring, ideal_gens):
        """R / (ideal_gens), generated in degree zero."""
        F = FreeModule(ring, [0])
        cols = [vec_from_column([ring.reduce(g)]) for g in ideal_gens]
        return cls(ring, F, cols)

    @classmethod
    def coker(cls, gmap):
        return cls(gmap.ring, gmap.target, list(gmap.cols))

    # -- presentation access ---------------------------------------------
    @property
    def rank(self):
        return self.gens_free.rank

    def relation_degrees(self):
        return [vec_degree(c, self.gens_free.twists) for c in self.rel_cols]

    def presentation_map(self):
        F1 = FreeModule(self.ring, self.relation_degrees())
        return GradedMap(F1, self.gens_free, list(self.rel_cols))

    def gb(self):
        got = self._cache.get("gb")
        if got is None:
            got = groebner_basis(self.rel_cols, self.ring, self.gens_free)
            self._cache["gb"] = got
        return got

    def element_is_zero(self, vec):
        return self.gb().contains(vec)

    def reduce_element(self, vec):
        return self.gb().normal_form(vec)

    # -- elementary constructions ----------------------------------------
    def twist(self, d):
        return PresentedModule(self.ring, self.gens_free.twist(d),
                               [dict(c) for c in self.rel_cols])

    def direct_sum(self, other):
        if other.ring != self.ring:
            raise ValueError("modules over different rings")
        F = self.gens_free.direct_sum(other.gens_free)
        r = self.rank
        cols = [dict(c) for c in self.rel_cols]
        cols += [{(p + r, m): c for (p, m), c in col.items()} for col in other.rel_cols]
        return PresentedModule(self.ring, F, cols)

    def lift_to_cover(self):
        """The same module viewed over the polynomial cover."""
        ring = self.ring
        if ring.is_polynomial:
            return self
        cover = ring.cover
        F = FreeModule(cover, self.gens_free.twists)
        cols = [dict(c) for c in self.rel_cols]
        for f in ring.defining:
            for p in range(F.rank):
                cols.append({(p, m): c for m, c in f.terms.items()})
        return PresentedModule(cover, F, cols)

    def minimized(self):
        """Isomorphic module with a minimal presentation."""
        got = self._cache.get("minimized")
        if got is None:
            tw, cols, _ = minimize_presentation(self.gens_free.twists,
                                                self.rel_cols, self.ring.field)
            got = PresentedModule(self.ring, FreeModule(self.ring, tw), cols)
            self._cache["minimized"] = got
        return got

    # -- numerical invariants --------------------------------------------
    def hilbert_series(self):
        got = self._cache.get("hs")
        if got is None:
            got = hilbert_series(self)
            self._cache["hs"] = got
        return got

    def dimension(self):
        return self.hilbert_series().dimension()

    def indeg(self):
        return self.hilbert_series().indeg()

    def top_degree(self):
        return self.hilbert_series().top_degree()

    def hilbert_function(self, j):
        return self.hilbert_series().coefficient(j)

    def is_zero(self):
        if self.rank == 0:
            return True
        return self.hilbert_series().is_zero()

    def is_finite_length(self):
        return self.dimension() <= 0

    def __repr__(self):
        return (f"<module {self.rank} gens, {len(self.rel_cols)} relations "
                f"over {self.ring!r}>")


class ModuleMap:
    """A degree-zero map of presented modules, given on generators.

    cols[j] is the image of the j-th generator of the source, as a vector
    over the target's generator module.
    """

    __slots__ = ("source", "target", "cols")

    def __init__(self, source, target, cols):
        self.source = source
        self.target = target
        self.cols = tuple(dict(c) for c in cols)
        if len(self.cols) != source.rank:
            raise ValueError("column count does not match source generators")
        st = source.gens_free.twists
        for j, c in enumerate(self.cols):
            if c and vec_degree(c, target.gens_free.twists) != st[j]:
                raise ValueError("map is not homogeneous of degree zero")

    @property
    def ring(self):
        return self.source.ring

    @classmethod
    def from_entries(cls, source, target, rows):
        gm = GradedMap.from_entries(source.gens_free, target.gens_free, rows)
        return cls(source, target, list(gm.cols))

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, [{} for _ in range(source.rank)])

    @classmethod
    def identity(cls, M):
        return cls(M, M, [M.gens_free.basis_vec(i) for i in range(M.rank)])

    def apply(self, vec):
        from .poly import mono_mul
        K = self.ring.field
        out = {}
        for (p, m), c in vec.items():
            for (q, u), cc in self.cols[p].items():
                t = (q, mono_mul(u, m))
                s = K.add(out.get(t, K.zero), K.mul(c, cc))
                if K.is_zero(s):
                    out.pop(t, None)
                else:
                    out[t] = s
        return out

    def compose(self, other):
        """self after other."""
        return ModuleMap(other.source, self.target,
                         [self.apply(c) for c in other.cols])

    def is_well_defined(self):
        """Images of source relations must die in the target."""
        gb = self.target.gb()
        return all(gb.contains(self.apply(r)) for r in self.source.rel_cols)

    def is_zero_map(self):
        gb = self.target.gb()
        return all(gb.contains(c) for c in self.cols)

    def __repr__(self):
        return f"<module map {self.target.rank}x{self.source.rank}>"


def multiplication_map(M, f):
    """M -> M(d) given by multiplication with the homogeneous element f."""
    f = M.ring.reduce(f)
    d = 0 if f.is_zero() else f.homogeneous_degree()
    target = M.twist(d)
    cols = []
    for i in range(M.rank):
        cols.append({(i, m): c for m, c in f.terms.items()})
    return ModuleMap(M, target, cols), d


# -- syzygies of explicit vectors ----------------------------------------

def syzygies_of_vectors(vectors, ring, free):
    """Generators of {(a_i) : sum a_i v_i = 0 over the ring}.

    Vectors must be nonzero and homogeneous.  Works by adjoining a tag
    position per vector; position-over-term makes the original positions
    dominate, so basis elements supported purely on tags cut out the
    syzygy module.
    """
    K = ring.field
    degs = [vec_degree(v, free.twists) for v in vectors]
    r = free.rank
    big = FreeModule(ring, tuple(free.twists) + tuple(degs))
    one = tuple(0 for _ in range(ring.nvars))
    ws = []
    for i, v in enumerate(vectors):
        w = dict(v)
        w[(r + i, one)] = K.one
        ws.append(w)
    gb = groebner_basis(ws, ring, big)
    out = []
    for e in gb.module_elements:
        if all(p >= r for (p, _) in e.vec):
            out.append({(p - r, m): c for (p, m), c in e.vec.items()})
    return out, FreeModule(ring, degs)


def present_subquotient(ring, free, numerators, denominators, minimize=True):
    """Present (N + D)/D for N = <numerators>, D = <denominators> in free.

    Returns (module, gens) where gens[i] is the vector representing the
    i-th generator of the result inside `free`.
    """
    K = ring.field
    den = [dict(c) for c in denominators if c]
    gb_den = groebner_basis(den, ring, free)
    nums = []
    seen = set()
    for v in numerators:
        w = gb_den.normal_form(v)
        if not w:
            continue
        key = frozenset(w.items())
        if key in seen:
            continue
        seen.add(key)
        nums.append(w)
    if not nums:
        return PresentedModule.zero(ring), []
    combined = nums + den
    syz, _ = syzygies_of_vectors(combined, ring, free)
    s = len(nums)
    rels = []
    for v in syz:
        proj = {(p, m): c for (p, m), c in v.items() if p < s}
        if proj:
            rels.append(proj)
    twists = tuple(vec_degree(v, free.twists) for v in nums)
    if not minimize:
        return PresentedModule(ring, FreeModule(ring, twists), rels), nums
    tw, cols, kept = minimize_presentation(twists, rels, K)
    module = PresentedModule(ring, FreeModule(ring, tw), cols)
    return module, [nums[i] for i in kept]


# -- kernels, homology, colons -------------------------------------------

def kernel(phi, minimize=True):
    """Kernel of a map of presented modules.

    Returns (module, inclusion) with inclusion a ModuleMap into phi's source.
    """
    M, N = phi.source, phi.target
    ring = phi.ring
    live = [(j, c) for j, c in enumerate(phi.cols) if c]
    carriers = []
    if live:
        vectors = [c for _, c in live] + [dict(c) for c in N.rel_cols]
        syz, _ = syzygies_of_vectors(vectors, ring, N.gens_free)
        nlive = len(live)
        for v in syz:
            w = {}
            for (p, m), c in v.items():
                if p < nlive:
                    w[(live[p][0], m)] = c
            if w:
                carriers.append(w)
    # generators of M sent to zero on the nose
    for j, c in enumerate(phi.cols):
        if not c:
            carriers.append(M.gens_free.basis_vec(j))
    module, gens = present_subquotient(ring, M.gens_free, carriers,
                                       list(M.rel_cols), minimize=minimize)
    incl = ModuleMap(module, M, gens)
    return module, incl


def image(phi, minimize=True):
    """Image of a map as a submodule of the target; returns (module, gens)."""
    return present_subquotient(phi.ring, phi.target.gens_free,
                               [dict(c) for c in phi.cols],
                               list(phi.target.rel_cols), minimize=minimize)


def homology_at(psi, phi, minimize=True):
    """ker(phi) / im(psi) for composable maps with phi after psi zero."""
    if psi.target is not phi.source and psi.target.gens_free.twists != phi.source.gens_free.twists:
        raise ValueError("maps are not composable")
    comp = phi.compose(psi)
    if not comp.is_zero_map():
        raise ValueError("composition is not zero, homology undefined")
    ker_mod, incl = kernel(phi, minimize=False)
    mid = phi.source
    dens = [dict(c) for c in psi.cols if c] + [dict(c) for c in mid.rel_cols]
    module, _ = present_subquotient(mid.ring, mid.gens_free,
                                    list(incl.cols), dens, minimize=minimize)
    return module


def colon_by_element(M, f):
    """(0 :_M f) as a presented module; also returns the inclusion."""
    phi, _ = multiplication_map(M, f)
    return kernel(phi)


def quotient_by_element(M, f):
    """M / f M."""
    f = M.ring.reduce(f)
    cols = [dict(c) for c in M.rel_cols]
    for i in range(M.rank):
        cols.append({(i, m): c for m, c in f.terms.items()})
    return PresentedModule(M.ring, M.gens_free, cols).minimized()


def annihilator(M):
    """Generators of Ann(M) as polynomials over M's ring."""
    if M.rank == 0 or M.is_zero():
        return [M.ring.constant(1)]
    ring = M.ring
    # map R -> sum_i M(d_i), 1 |-> (e_1, ..., e_r); kernel is the annihilator
    twists = M.gens_free.twists
    big = M.twist(twists[0])
    offsets = [0]
    for i in range(1, M.rank):
        nxt = M.twist(twists[i])
        offsets.append(big.rank)
        big = big.direct_sum(nxt)
    col = {}
    one = tuple(0 for _ in range(ring.nvars))
    for i in range(M.rank):
        col[(offsets[i] + i, one)] = ring.field.one
    R1 = PresentedModule.free(ring, [0])
    phi = ModuleMap(R1, big, [col])
    ker_mod, incl = kernel(phi)
    out = []
    for c in incl.cols:
        out.append(Polynomial(ring, {m: cc for (_, m), cc in c.items()}))
    return out


def is_filter_regular(f, M):
    """True when (0 :_M f) has finite length."""
    sub, _ = colon_by_element(M, f)
    return sub.is_finite_length()


# -- Hilbert series -------------------------------------------------------

def hilbert_series(M):
    if M.rank == 0:
        return HilbertSeries({}, M.ring.cover.nvars)
    gb = M.gb()
    n = M.ring.cover.nvars
    per_pos = {}
    for e in gb.elements:
        per_pos.setdefault(e.pos, []).append(e.ltm)
    total = HilbertSeries({}, n)
    for p in range(M.gens_free.rank):
        num = monomial_ideal_numerator(tuple(per_pos.get(p, ())), n)
        piece = HilbertSeries({d + M.gens_free.twists[p]: c for d, c in num.items()}, n)
        total = total.add(piece)
    return total


def dimension(M):
    return M.dimension()


def indeg(M):
    return M.indeg()


def is_finite_length(M):
    return M.is_finite_length()


def module_from_ideal(ring, gens):
    """An ideal as a module: generators at their degrees plus syzygies."""
    F = FreeModule(ring, [0])
    nums = [vec_from_column([ring.reduce(g)]) for g in gens]
    module, _ = present_subquotient(ring, F, nums, [])
    return module


def ideal_quotient_module(ring, gens):
    """R / (gens), minimized."""
    return PresentedModule.cyclic(ring, gens).minimized()
