"""Bounded complexes of presented modules: Koszul complexes, tensor and Hom
totalizations, homology, and free resolutions of complexes.

Homological indexing throughout: d_i maps spot i to spot i-1, cohomological
objects sit at negated spots (Ext^i lives in spot -i).  The suspension
(shift(1)) moves spot i to i+1 and negates differentials.
"""

from itertools import combinations
from math import inf

from .freemod import FreeModule
from .minimize import minimize_chain, minimize_presentation
from .modules import ModuleMap, PresentedModule, homology_at, kernel
from .resolution import free_resolution


class BoundedComplex:
    __slots__ = ("ring", "terms", "diffs", "_cache")

    def __init__(self, ring, terms, diffs):
        self.ring = ring
        self.terms = {i: t for i, t in terms.items() if t.rank > 0}
        self.diffs = {}
        for i, d in diffs.items():
            if i in self.terms and (i - 1) in self.terms:
                self.diffs[i] = d
        self._cache = {}

    # -- access ----------------------------------------------------------
    def term(self, i):
        t = self.terms.get(i)
        return t if t is not None else PresentedModule.zero(self.ring)

    def diff(self, i):
        d = self.diffs.get(i)
        if d is not None:
            return d
        return ModuleMap.zero(self.term(i), self.term(i - 1))

    def levels(self):
        return sorted(self.terms)

    @property
    def min_level(self):
        return min(self.terms) if self.terms else 0

    @property
    def max_level(self):
        return max(self.terms) if self.terms else 0

    @property
    def is_free(self):
        return all(not t.rel_cols for t in self.terms.values())

    def verify(self):
        """Differentials compose to zero (modulo target relations)."""
        for i in self.levels():
            d1, d2 = self.diff(i), self.diff(i + 1)
            if d1.source.rank and d2.source.rank:
                if not d1.compose(d2).is_zero_map():
                    return False
        return True

    # -- rebuilds ----------------------------------------------------------
    def shift(self, k):
        """Suspension: spot i of the result is spot i-k of the input."""
        terms = {i + k: t for i, t in self.terms.items()}
        sign = -1 if k % 2 else 1
        diffs = {}
        for i, d in self.diffs.items():
            cols = d.cols if sign == 1 else [
                {t: self.ring.field.neg(c) for t, c in col.items()} for col in d.cols]
            diffs[i + k] = ModuleMap(d.source, d.target, cols)
        return BoundedComplex(self.ring, terms, diffs)

    def twist(self, d):
        terms = {i: t.twist(d) for i, t in self.terms.items()}
        diffs = {}
        for i, dd in self.diffs.items():
            diffs[i] = ModuleMap(terms[i], terms[i - 1], dd.cols)
        return BoundedComplex(self.ring, terms, diffs)

    def lift_to_cover(self):
        if self.ring.is_polynomial:
            return self
        cover = self.ring.cover
        terms = {i: t.lift_to_cover() for i, t in self.terms.items()}
        diffs = {}
        for i, dd in self.diffs.items():
            diffs[i] = ModuleMap(terms[i], terms[i - 1], dd.cols)
        return BoundedComplex(cover, terms, diffs)

    # -- homology ----------------------------------------------------------
    def homology(self, i):
        got = self._cache.get(("H", i))
        if got is None:
            if self.term(i).rank == 0:
                got = PresentedModule.zero(self.ring)
            else:
                got = homology_at(self.diff(i + 1), self.diff(i))
            self._cache[("H", i)] = got
        return got

    def homology_range(self):
        """{i: H_i} over the support range."""
        return {i: self.homology(i) for i in range(self.min_level, self.max_level + 1)}

    def sup_homology(self):
        for i in range(self.max_level, self.min_level - 1, -1):
            if not self.homology(i).is_zero():
                return i
        return -inf

    def inf_homology(self):
        for i in range(self.min_level, self.max_level + 1):
            if not self.homology(i).is_zero():
                return i
        return inf

    # -- free-complex helpers ----------------------------------------------
    def free_data(self):
        """(twists, cols) dicts for minimize_chain; requires a free complex."""
        if not self.is_free:
            raise ValueError("not a complex of free modules")
        twists = {i: tuple(t.gens_free.twists) for i, t in self.terms.items()}
        cols = {i: [dict(c) for c in d.cols] for i, d in self.diffs.items()}
        for i in self.levels():
            # a zero differential may be unstored; the minimizer still needs
            # a column list of the right length for every adjacent pair
            if i in self.terms and (i - 1) in self.terms and i not in cols:
                cols[i] = [{} for _ in range(self.terms[i].rank)]
        return twists, cols

    def minimized(self):
        """Minimal free complex homotopy equivalent to this one (free only)."""
        twists, cols = self.free_data()
        tw, cs, _ = minimize_chain(twists, cols, self.ring.field)
        return free_complex_from_data(self.ring, tw, cs)

    def __repr__(self):
        parts = ", ".join(f"{i}:{self.term(i).rank}" for i in self.levels())
        return f"<complex [{parts}]>"


def complex_from_module(M, at=0):
    return BoundedComplex(M.ring, {at: M}, {})


def free_complex_from_data(ring, twists, cols):
    terms = {i: PresentedModule.free(ring, t) for i, t in twists.items() if t}
    diffs = {}
    for i, cs in cols.items():
        if i in terms and (i - 1) in terms:
            diffs[i] = ModuleMap(terms[i], terms[i - 1], cs)
    return BoundedComplex(ring, terms, diffs)


def resolution_to_complex(res):
    twists = {0: tuple(res.f0.twists)}
    cols = {}
    for i, gm in enumerate(res.maps, start=1):
        twists[i] = tuple(gm.source.twists)
        cols[i] = [dict(c) for c in gm.cols]
    return free_complex_from_data(res.ring, twists, cols)


# -- Koszul complexes ------------------------------------------------------

def koszul_complex(forms, coefficients=None):
    """K[f_1..f_d; coefficients].

    forms: nonzero homogeneous polynomials over a common ring.
    coefficients: None for the ring, a PresentedModule, or a BoundedComplex.
    """
    if not forms:
        raise ValueError("empty Koszul sequence")
    ring = forms[0].ring
    degs = []
    for f in forms:
        if f.is_zero() or not f.is_homogeneous():
            raise ValueError("Koszul forms must be nonzero and homogeneous")
        degs.append(f.homogeneous_degree())
    d = len(forms)
    subsets = {t: list(combinations(range(d), t)) for t in range(d + 1)}
    index = {t: {T: b for b, T in enumerate(subsets[t])} for t in range(d + 1)}
    twists = {t: tuple(sum(degs[i] for i in T) for T in subsets[t])
              for t in range(d + 1)}
    K = ring.field
    cols = {}
    for t in range(1, d + 1):
        level_cols = []
        for T in subsets[t]:
            col = {}
            for a, idx in enumerate(T):
                rest = T[:a] + T[a + 1:]
                b2 = index[t - 1][rest]
                sgn = K.one if a % 2 == 0 else K.neg(K.one)
                for m, c in forms[idx].terms.items():
                    key = (b2, m)
                    s = K.add(col.get(key, K.zero), K.mul(c, sgn))
                    if K.is_zero(s):
                        col.pop(key, None)
                    else:
                        col[key] = s
            level_cols.append(col)
        cols[t] = level_cols
    free_k = free_complex_from_data(ring, twists, cols)
    if coefficients is None:
        return free_k
    if isinstance(coefficients, PresentedModule):
        coefficients = complex_from_module(coefficients)
    return tensor_free_with_complex(free_k, coefficients)


def koszul_resolution_of_k(ring):
    """The Koszul complex on the variables: over a polynomial ring this is
    the minimal free resolution of the residue field."""
    got = ring._cache.get("koszul_k")
    if got is None:
        got = koszul_complex(list(ring.gens()))
        ring._cache["koszul_k"] = got
    return got


# -- tensor totalization ---------------------------------------------------

def tensor_free_with_complex(F, C):
    """Totalization F (x) C for F a free complex.

    Spot n is the direct sum over p + q = n of C_q twisted by the basis
    degrees of F_p; the differential is d_F (x) 1 + (-1)^p 1 (x) d_C.
    """
    if not F.is_free:
        raise ValueError("left factor must be a free complex")
    ring = F.ring
    K = ring.field
    f_levels = F.levels()
    c_levels = C.levels()
    if not f_levels or not c_levels:
        return BoundedComplex(ring, {}, {})

    # layout[n] = list of (p, q, b, offset); block (p,q,b) holds a copy of
    # C_q shifted by the degree of basis vector b of F_p
    layout = {}
    terms = {}
    for n in range(f_levels[0] + c_levels[0], f_levels[-1] + c_levels[-1] + 1):
        blocks = []
        twists = []
        rels = []
        off = 0
        for p in f_levels:
            q = n - p
            if q not in C.terms:
                continue
            Fp = F.term(p).gens_free
            Cq = C.term(q)
            for b in range(Fp.rank):
                a = Fp.twists[b]
                blocks.append((p, q, b, off))
                twists.extend(t + a for t in Cq.gens_free.twists)
                for rc in Cq.rel_cols:
                    rels.append({(pp + off, m): c for (pp, m), c in rc.items()})
                off += Cq.rank
        if twists:
            layout[n] = blocks
            terms[n] = PresentedModule(ring, FreeModule(ring, tuple(twists)), rels)

    def find_offset(n, p, q, b):
        for (pp, qq, bb, off) in layout.get(n, []):
            if (pp, qq, bb) == (p, q, b):
                return off
        return None

    diffs = {}
    for n in sorted(layout):
        if (n - 1) not in layout:
            continue
        cols = []
        for (p, q, b, off) in layout[n]:
            Cq = C.term(q)
            for g in range(Cq.rank):
                col = {}
                # horizontal: d_F entries applied to the same C-generator
                if p in F.diffs:
                    for (b2, m), c in F.diff(p).cols[b].items():
                        o2 = find_offset(n - 1, p - 1, q, b2)
                        if o2 is None:
                            continue
                        key = (o2 + g, m)
                        s = K.add(col.get(key, K.zero), c)
                        if K.is_zero(s):
                            col.pop(key, None)
                        else:
                            col[key] = s
                # vertical: (-1)^p times d_C on the block
                if q in C.diffs:
                    o2 = find_offset(n - 1, p, q - 1, b)
                    if o2 is not None:
                        sgn = 1 if p % 2 == 0 else -1
                        for (pp, m), c in C.diff(q).cols[g].items():
                            cc = c if sgn == 1 else K.neg(c)
                            key = (o2 + pp, m)
                            s = K.add(col.get(key, K.zero), cc)
                            if K.is_zero(s):
                                col.pop(key, None)
                            else:
                                col[key] = s
                cols.append(col)
        diffs[n] = ModuleMap(terms[n], terms[n - 1], cols)
    return BoundedComplex(ring, terms, diffs)


def tensor_complexes(F, G):
    """Derived-style tensor of two free complexes (result is free)."""
    return tensor_free_with_complex(F, G)


# -- Hom totalization ------------------------------------------------------

def hom_complex(F, C):
    """Hom(F, C) for F a free complex: spot n = sum over q - p = n of
    Hom(F_p, C_q); differential post-composes d_C and pre-composes d_F with
    the Koszul sign."""
    if not F.is_free:
        raise ValueError("first argument must be a free complex")
    ring = F.ring
    K = ring.field
    f_levels = F.levels()
    c_levels = C.levels()
    if not f_levels or not c_levels:
        return BoundedComplex(ring, {}, {})

    layout = {}
    terms = {}
    for n in range(c_levels[0] - f_levels[-1], c_levels[-1] - f_levels[0] + 1):
        blocks = []
        twists = []
        rels = []
        off = 0
        for p in f_levels:
            q = n + p
            if q not in C.terms:
                continue
            Fp = F.term(p).gens_free
            Cq = C.term(q)
            for b in range(Fp.rank):
                a = Fp.twists[b]
                blocks.append((p, q, b, off))
                twists.extend(t - a for t in Cq.gens_free.twists)
                for rc in Cq.rel_cols:
                    rels.append({(pp + off, m): c for (pp, m), c in rc.items()})
                off += Cq.rank
        if twists:
            layout[n] = blocks
            terms[n] = PresentedModule(ring, FreeModule(ring, tuple(twists)), rels)

    def find_offset(n, p, q, b):
        for (pp, qq, bb, off) in layout.get(n, []):
            if (pp, qq, bb) == (p, q, b):
                return off
        return None

    # transpose access to d_F: entries[(p)][b] = list of (b2, m, c) meaning
    # basis b2 of F_p maps through column b2 hitting basis b of F_{p-1}
    diffs = {}
    for n in sorted(layout):
        if (n - 1) not in layout:
            continue
        sgn_pre = -1 if n % 2 == 0 else 1  # -(-1)^n
        cols = []
        for (p, q, b, off) in layout[n]:
            Cq = C.term(q)
            for g in range(Cq.rank):
                col = {}
                # post-compose with d_C
                if q in C.diffs:
                    o2 = find_offset(n - 1, p, q - 1, b)
                    if o2 is not None:
                        for (pp, m), c in C.diff(q).cols[g].items():
                            key = (o2 + pp, m)
                            s = K.add(col.get(key, K.zero), c)
                            if K.is_zero(s):
                                col.pop(key, None)
                            else:
                                col[key] = s
                # pre-compose with d_F: lands in Hom(F_{p+1}, C_q)
                if (p + 1) in F.diffs:
                    dnext = F.diff(p + 1)
                    for b2 in range(dnext.source.rank):
                        c_entry = {m: c for (bb, m), c in dnext.cols[b2].items()
                                   if bb == b}
                        if not c_entry:
                            continue
                        o2 = find_offset(n - 1, p + 1, q, b2)
                        if o2 is None:
                            continue
                        for m, c in c_entry.items():
                            cc = c if sgn_pre == 1 else K.neg(c)
                            key = (o2 + g, m)
                            s = K.add(col.get(key, K.zero), cc)
                            if K.is_zero(s):
                                col.pop(key, None)
                            else:
                                col[key] = s
                cols.append(col)
        diffs[n] = ModuleMap(terms[n], terms[n - 1], cols)
    return BoundedComplex(ring, terms, diffs)


# -- derived functors ------------------------------------------------------

def tor(M, N, i, max_len=None):
    """Tor_i(M, N) over the modules' common ring."""
    if max_len is None:
        max_len = None if M.ring.is_polynomial else max(i + 1, 2 * M.ring.nvars + 4)
    res = free_resolution(M, max_len=max_len)
    F = resolution_to_complex(res)
    T = tensor_free_with_complex(F, complex_from_module(N))
    return T.homology(i)


def tor_complex(M, N, max_len=None):
    res = free_resolution(M, max_len=max_len)
    return tensor_free_with_complex(resolution_to_complex(res),
                                    complex_from_module(N))


def ext(M, N, i, max_len=None):
    """Ext^i(M, N), stored at homological spot -i of Hom(F_M, N)."""
    if max_len is None:
        max_len = None if M.ring.is_polynomial else max(i + 1, 2 * M.ring.nvars + 4)
    res = free_resolution(M, max_len=max_len)
    H = hom_complex(resolution_to_complex(res), complex_from_module(N))
    return H.homology(-i)


def ext_complex(M, N, max_len=None):
    res = free_resolution(M, max_len=max_len)
    return hom_complex(resolution_to_complex(res), complex_from_module(N))


def grade_of_sequence(forms, M):
    """len(forms) minus the top nonvanishing Koszul homology spot."""
    if M.is_zero():
        return inf
    Kx = koszul_complex(forms, M)
    top = Kx.sup_homology()
    if top == -inf:
        return inf
    return len(forms) - top


# -- free resolutions of complexes ----------------------------------------

def minimal_cover(M):
    """(free module F, surjection F -> M) with F on a minimal generating set."""
    tw, _, kept = minimize_presentation(M.gens_free.twists, M.rel_cols,
                                        M.ring.field)
    F = PresentedModule.free(M.ring, tw)
    cols = [M.gens_free.basis_vec(i) for i in kept]
    return F, ModuleMap(F, M, cols)


def free_resolution_of_complex(L, max_len=None):
    """A free complex quasi-isomorphic to L, minimized.

    Built upward from the bottom: each level covers the fiber product of
    "cycles of F so far" with the next level of L, so cycles always
    surject onto cycles and homology is preserved.

    Returns (complex, complete).  Over a quotient ring the construction is
    truncated at max_len levels past the bottom.
    """
    ring = L.ring
    if not L.terms:
        return BoundedComplex(ring, {}, {}), True
    if L.is_free:
        return L.minimized(), True
    lo, hi = L.min_level, L.max_level
    if max_len is None:
        span = hi - lo
        max_len = span + (ring.nvars + 4 if ring.is_polynomial
                          else 2 * ring.nvars + 4)

    twists = {}
    cols = {}
    F_prev, phi_prev = minimal_cover(L.term(lo))
    twists[lo] = tuple(F_prev.gens_free.twists)
    phis = {lo: phi_prev}
    complete = False
    i = lo
    while True:
        if i - lo >= max_len:
            break
        Lnext = L.term(i + 1)
        Fi = PresentedModule.free(ring, twists[i])
        # map (f, l) |-> (phi_i f - d l, d^F f) ; kernel is the fiber product
        dF_cols = cols.get(i)
        target_parts = [L.term(i)]
        if dF_cols is not None:
            target_parts.append(PresentedModule.free(ring, twists[i - 1]))
        if len(target_parts) == 2:
            target = target_parts[0].direct_sum(target_parts[1])
            shift0 = 0
            shift1 = target_parts[0].rank
        else:
            target = target_parts[0]
            shift0 = 0
            shift1 = None
        source = Fi.direct_sum(Lnext) if Lnext.rank else Fi
        K = ring.field
        columns = []
        for j in range(Fi.rank):
            col = {}
            for (p, m), c in phis[i].cols[j].items():
                col[(p + shift0, m)] = c
            if dF_cols is not None:
                for (p, m), c in dF_cols[j].items():
                    key = (p + shift1, m)
                    s = K.add(col.get(key, K.zero), c)
                    if K.is_zero(s):
                        col.pop(key, None)
                    else:
                        col[key] = s
            columns.append(col)
        dnext = L.diff(i + 1)
        for j in range(Lnext.rank):
            col = {}
            for (p, m), c in dnext.cols[j].items():
                col[(p + shift0, m)] = K.neg(c)
            columns.append(col)
        psi = ModuleMap(source, target, columns)
        ker_mod, incl = kernel(psi)
        if ker_mod.rank == 0 and i >= hi:
            complete = True
            break
        # a rank-0 kernel below the top just gives an empty level; the
        # generic split handles it and the loop climbs on
        # split kernel generators into F- and L- components
        fr = Fi.rank
        new_twists = tuple(ker_mod.gens_free.twists)
        dF_new = []
        phi_new = []
        for c in incl.cols:
            fpart = {}
            lpart = {}
            for (p, m), cc in c.items():
                if p < fr:
                    fpart[(p, m)] = cc
                else:
                    lpart[(p - fr, m)] = cc
            dF_new.append(fpart)
            phi_new.append(lpart)
        i += 1
        twists[i] = new_twists
        cols[i] = dF_new
        Fn = PresentedModule.free(ring, new_twists)
        phis[i] = ModuleMap(Fn, L.term(i), phi_new)
    built = free_complex_from_data(ring, twists, cols)
    return built.minimized(), complete
