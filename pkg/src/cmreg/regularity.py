"""Castelnuovo-Mumford regularity by four independent routes, plus the
relative, partial, and duality-side invariants.

Routes:
  betti    max{j - i} over the minimal free resolution over the cover
  ext      sup{i + j : Ext^i(k, M)_j != 0} (Bass numbers over the cover)
  koszul   sup{j - i : H_i(y; M)_j != 0} on the module's own ring
  duality  top degrees of local cohomology read off Ext^q(M, S(-n))

Absolute invariants of quotient-ring modules are routed through the
polynomial cover; the Koszul route is the one that works directly over the
quotient, which is what makes the four-way agreement a real test.
"""

from math import inf

from .complexes import (BoundedComplex, complex_from_module,
                        free_resolution_of_complex, hom_complex,
                        koszul_complex, koszul_resolution_of_k,
                        resolution_to_complex)
from .modules import PresentedModule
from .resolution import free_resolution


class KoszulHypothesisError(ValueError):
    """A Koszul-route sequence whose homology is not finite length."""

    def __init__(self, spot, dimension):
        self.spot = spot
        self.dimension = dimension
        super().__init__(
            f"H_{spot} of the Koszul complex has dimension {dimension}; "
            "the finite-length hypothesis fails for this sequence")


def _as_cover_complex(obj):
    """Lift a module or complex to its polynomial cover, as a complex."""
    if isinstance(obj, PresentedModule):
        obj = complex_from_module(obj)
    return obj.lift_to_cover()


def _as_complex(obj):
    if isinstance(obj, PresentedModule):
        return complex_from_module(obj)
    return obj


# -- route 1: resolution twists -------------------------------------------

def reg_via_betti(obj, max_len=None):
    """(value, witness) from the minimal free resolution over the cover.

    witness is a (homological spot, twist) pair attaining the sup.
    """
    C = _as_cover_complex(obj)
    if not C.terms:
        return -inf, None
    if len(C.terms) == 1 and not C.diffs:
        (spot, term), = C.terms.items()
        res = free_resolution(term, max_len=max_len)
        best, wit = -inf, None
        twists = {0: res.f0.twists}
        for i, gm in enumerate(res.maps, start=1):
            twists[i] = gm.source.twists
        for i, tw in twists.items():
            for a in tw:
                if a - (i + spot) > best:
                    best, wit = a - (i + spot), (i + spot, a)
        return best, wit
    F, complete = free_resolution_of_complex(C, max_len=max_len)
    if not complete:
        raise RuntimeError("free resolution of the complex did not terminate")
    best, wit = -inf, None
    for i in F.levels():
        for a in F.term(i).gens_free.twists:
            if a - i > best:
                best, wit = a - i, (i, a)
    return best, wit


# -- route 2: Ext against the residue field -------------------------------

def _bass_data(obj):
    """{(i, j): mu^{i,j}} over the cover, exact and finitely supported."""
    C = _as_cover_complex(obj)
    cover = C.ring
    if not C.terms:
        return {}
    K = koszul_resolution_of_k(cover)
    E = hom_complex(K, C)
    table = {}
    for s in E.levels():
        H = E.homology(s)
        if H.is_zero():
            continue
        i = -s
        lo, hi = H.indeg(), H.top_degree()
        if hi == inf:
            raise ArithmeticError(
                f"Ext^{i}(k, -) is not finite length; corrupt input")
        for j in range(lo, hi + 1):
            d = H.hilbert_function(j)
            if d:
                table[(i, j)] = d
    return table


def bass_table(obj):
    """Bass numbers mu^{i,j} = dim Ext^i(k, obj)_j over the cover."""
    return _bass_data(obj)


def reg_via_ext(obj):
    """(value, witness) with value = sup{i + j} over nonzero Bass numbers."""
    table = _bass_data(obj)
    if not table:
        return -inf, None
    best, wit = -inf, None
    for (i, j) in table:
        if i + j > best:
            best, wit = i + j, (i, j)
    return best, wit


# -- route 3: Koszul homology on the module's own ring --------------------

def _generates_irrelevant_ideal(forms, ring):
    """Do these degree-1 forms span the degree-1 piece of the ring?"""
    from .oracle import DenseOracle, rank_of_rows
    amb = PresentedModule.cyclic(ring, [])
    oc = DenseOracle(amb, max_degree=2)
    basis = oc.ambient_basis(1)
    index = {bm: a for a, bm in enumerate(basis)}
    need = oc.hilbert_function(1)
    rows = []
    for f in forms:
        g = ring.reduce(f)
        row = [0] * len(basis)
        for m, c in g.terms.items():
            row[index[(0, m)]] = int(c) if ring.field.characteristic else c
        rows.append(row)
    # span within the quotient: reduce against the relation rows first
    rel_rows = []
    for col, d in zip(oc.rels, oc.rel_degs):
        if d == 1:
            row = [0] * len(basis)
            for (pos, mono), c in col.items():
                row[index[(pos, mono)]] = int(c) if ring.field.characteristic else c
            rel_rows.append(row)
    base = rank_of_rows(rel_rows, len(basis), ring.field)
    total = rank_of_rows(rel_rows + rows, len(basis), ring.field)
    return total - base == need

def reg_via_koszul(obj, forms=None, check_hypothesis=None):
    """(value, witness) from Koszul homology H_i(forms; obj) over the
    object's own ring.

    forms defaults to the ring variables (always a valid sequence).  A
    user-supplied sequence must consist of linear forms; unless the forms
    span the degree-1 piece of the ring, every homology module must have
    finite length, and a KoszulHypothesisError reports the first that
    does not.
    """
    C = _as_complex(obj)
    ring = C.ring
    if not C.terms:
        return -inf, None
    if forms is None:
        forms = list(ring.gens())
        verify = False
    else:
        forms = list(forms)
        for f in forms:
            if f.is_zero() or not f.is_homogeneous() or f.homogeneous_degree() != 1:
                raise ValueError("Koszul-route sequences consist of linear forms")
        verify = not _generates_irrelevant_ideal(forms, ring)
    if check_hypothesis is not None:
        verify = check_hypothesis
    Kx = koszul_complex(forms, C)
    homs = {i: Kx.homology(i) for i in Kx.levels()}
    if verify:
        # the finite-length condition on positive homology is the
        # load-bearing hypothesis; the degeneracy guard on H_0 comes after
        spots = sorted(i for i in homs if i > 0) + [i for i in homs if i <= 0]
        for i in spots:
            if not homs[i].is_zero() and homs[i].dimension() > 0:
                raise KoszulHypothesisError(i, homs[i].dimension())
    best, wit = -inf, None
    for i, H in homs.items():
        if H.is_zero():
            continue
        top = H.top_degree()
        if top == inf:
            raise KoszulHypothesisError(i, H.dimension())
        if top - i > best:
            best, wit = top - i, (i, top)
    return best, wit


# -- route 4: graded local duality ----------------------------------------

def _duality_modules(M):
    """{q: Ext^q_S(M, S(-n))} over the cover S, n = number of cover vars."""
    Mc = M.lift_to_cover() if isinstance(M, PresentedModule) else None
    if Mc is None:
        raise TypeError("duality route takes a module")
    S = Mc.ring
    n = S.nvars
    res = free_resolution(Mc)
    D = hom_complex(resolution_to_complex(res),
                    complex_from_module(PresentedModule.free(S, (n,))))
    out = {}
    for s in D.levels():
        H = D.homology(s)
        if not H.is_zero():
            out[-s] = H
    return out, n


def reg_via_duality(M):
    """(value, witness) with value = max{i + j : H^i_m(M)_j != 0}.

    dim H^i_m(M)_j = dim Ext^{n-i}_S(M, S(-n))_{-j}, so the top degree of
    H^i is read off the initial degree of the dual Ext module.
    """
    if M.is_zero():
        return -inf, None
    ext_mods, n = _duality_modules(M)
    best, wit = -inf, None
    for q, E in ext_mods.items():
        i = n - q
        end = -E.indeg()
        if i + end > best:
            best, wit = i + end, (i, end)
    return best, wit


class LocalCohomologyTable:
    """dim_k H^i_m(M)_j over a degree window, with exact per-row support.

    Entries are exact inside the window; row_support records the true
    (start, end) degrees of each H^i, with -inf marking rows that extend
    below any finite window.
    """

    __slots__ = ("entries", "window", "row_support", "nvars")

    def __init__(self, entries, window, row_support, nvars):
        self.entries = entries
        self.window = window
        self.row_support = row_support
        self.nvars = nvars

    def regularity(self):
        out = -inf
        for i, (_, end) in self.row_support.items():
            if end is not None and i + end > out:
                out = i + end
        return out

    def depth_dim(self):
        """(min, max) cohomological degree with a nonzero row."""
        rows = sorted(self.row_support)
        if not rows:
            return inf, -inf
        return rows[0], rows[-1]

    def to_json(self):
        return {
            "window": list(self.window),
            "entries": [
                {"i": i, "j": j, "dim": d}
                for (i, j), d in sorted(self.entries.items())
            ],
            "row_support": {
                str(i): {
                    "start": None if s == -inf else s,
                    "start_kind": "minus_infinity" if s == -inf else "finite",
                    "end": e,
                }
                for i, (s, e) in sorted(self.row_support.items())
            },
        }


WINDOW_HARD_CAP_FACTOR = 8


def local_cohomology_table(M, window=None):
    if M.is_zero():
        return LocalCohomologyTable({}, window or (0, 0), {}, 0)
    ext_mods, n = _duality_modules(M)
    if window is None:
        window = (-2 * n - 4, 2 * n + 4)
    lo, hi = window
    support = {}
    for q, E in ext_mods.items():
        i = n - q
        end = -E.indeg()
        top = E.top_degree()
        start = -inf if top == inf else -top
        support[i] = (start, end)
    needed = max((e for (_, e) in support.values()), default=0)
    while hi < needed:
        hi = 2 * hi + 4 if hi > 0 else needed
        if hi > WINDOW_HARD_CAP_FACTOR * (n + 2):
            raise ValueError(
                f"local cohomology window cap exceeded (need degree {needed})")
    entries = {}
    for q, E in ext_mods.items():
        i = n - q
        for j in range(lo, hi + 1):
            d = E.hilbert_function(-j)
            if d:
                entries[(i, j)] = d
    return LocalCohomologyTable(entries, (lo, hi), support, n)


def a_invariant(ring):
    """Top degree of the top local cohomology of the ring."""
    M = PresentedModule.cyclic(ring, [])
    d = M.dimension()
    if d == -inf:
        raise ValueError("the zero ring has no a-invariant")
    ext_mods, n = _duality_modules(M)
    q = n - d
    E = ext_mods.get(q)
    if E is None:
        raise ArithmeticError("top local cohomology vanished; corrupt input")
    return -E.indeg()


# -- relative and partial invariants --------------------------------------

class RelativeReg:
    """sup{j - i} over a minimal resolution on the module's own ring.

    Over a quotient ring the resolution may be truncated; `certified`
    carries whether the reported value is exact rather than a lower bound.
    """

    __slots__ = ("value", "certified", "levels")

    def __init__(self, value, certified, levels):
        self.value = value
        self.certified = certified
        self.levels = levels

    def __repr__(self):
        tag = "exact" if self.certified else f"truncated@{self.levels}"
        return f"RelativeReg({self.value}, {tag})"


def relative_reg(obj, max_len=None):
    if isinstance(obj, PresentedModule):
        if obj.is_zero():
            return RelativeReg(-inf, True, 0)
        res = free_resolution(obj, max_len=max_len)
        best = -inf
        twists = {0: res.f0.twists}
        for i, gm in enumerate(res.maps, start=1):
            twists[i] = gm.source.twists
        for i, tw in twists.items():
            for a in tw:
                best = max(best, a - i)
        return RelativeReg(best, res.complete, res.length)
    C = obj
    if not C.terms:
        return RelativeReg(-inf, True, 0)
    F, complete = free_resolution_of_complex(C, max_len=max_len)
    best = -inf
    top = 0
    for i in F.levels():
        top = max(top, i)
        for a in F.term(i).gens_free.twists:
            best = max(best, a - i)
    return RelativeReg(best, complete, top)


def partial_reg_m(M, m):
    """sup{i + j : H^i_m(M)_j != 0 and i >= m}."""
    if M.is_zero():
        return -inf
    ext_mods, n = _duality_modules(M)
    best = -inf
    for q, E in ext_mods.items():
        i = n - q
        if i >= m:
            best = max(best, i - E.indeg())
    return best


def partial_kreg(obj, forms, ell):
    """sup{j - i : H_i(forms; obj)_j != 0 and i >= ell}."""
    C = _as_complex(obj)
    if not C.terms:
        return -inf
    Kx = koszul_complex(list(forms), C)
    best = -inf
    for i in Kx.levels():
        if i < ell:
            continue
        H = Kx.homology(i)
        if H.is_zero():
            continue
        top = H.top_degree()
        if top == inf:
            raise KoszulHypothesisError(i, H.dimension())
        best = max(best, top - i)
    return best


def reg_complex(L, cross_check=False):
    """Regularity of a bounded complex: Koszul homology of K[vars; L] over
    the polynomial cover.

    With cross_check the value is recomputed through the resolution route
    and a mismatch raises; the two routes share no code past the complex
    itself."""
    C = _as_cover_complex(L)
    value, _ = reg_via_koszul(C)
    if cross_check:
        other, _ = reg_via_betti(L)
        if other != value:
            raise RuntimeError(
                f"internal disagreement on a complex: totalization gives "
                f"{value}, the resolution route gives {other}")
    return value


# -- depth by three routes -------------------------------------------------

def depth_profile(M):
    """Depth by pd (Auslander-Buchsbaum), by Bass numbers, and by Koszul
    homology, all over the cover.  The three agree for correct inputs."""
    Mc = M.lift_to_cover()
    S = Mc.ring
    n = S.nvars
    if Mc.is_zero():
        return {"via_pd": inf, "via_ext": inf, "via_koszul": inf}
    res = free_resolution(Mc)
    via_pd = n - res.length
    table = _bass_data(Mc)
    via_ext = min(i for (i, _) in table)
    Kx = koszul_complex(list(S.gens()), complex_from_module(Mc))
    top = Kx.sup_homology()
    via_koszul = n - top
    return {"via_pd": via_pd, "via_ext": via_ext, "via_koszul": via_koszul}


def depth(M):
    """Depth of a module (over its own ring; depth is cover-independent)."""
    Mc = M.lift_to_cover()
    if Mc.is_zero():
        return inf
    res = free_resolution(Mc)
    return Mc.ring.nvars - res.length


# -- the report ------------------------------------------------------------

class RegularityReport:
    __slots__ = ("ring_repr", "cover_repr", "routes", "witnesses",
                 "relative", "agree", "value")

    def __init__(self, ring_repr, cover_repr, routes, witnesses, relative):
        self.ring_repr = ring_repr
        self.cover_repr = cover_repr
        self.routes = routes
        self.witnesses = witnesses
        self.relative = relative
        vals = set(routes.values())
        self.agree = len(vals) == 1
        self.value = routes["betti"] if self.agree else None

    def as_dict(self):
        out = {
            "ring": self.ring_repr,
            "cover": self.cover_repr,
            "routes": dict(self.routes),
            "witnesses": {k: (list(v) if v else None)
                          for k, v in self.witnesses.items()},
            "agree": self.agree,
            "value": self.value,
        }
        if self.relative is not None:
            out["relative"] = {
                "value": self.relative.value,
                "certified": self.relative.certified,
                "levels": self.relative.levels,
            }
        return out


def regularity(M, include_relative=True, max_len=None):
    """Four-route regularity report for a presented module."""
    rb, wb = reg_via_betti(M)
    re_, we = reg_via_ext(M)
    rk, wk = reg_via_koszul(M)
    rd, wd = reg_via_duality(M)
    routes = {"betti": rb, "ext": re_, "koszul": rk, "duality": rd}
    wits = {"betti": wb, "ext": we, "koszul": wk, "duality": wd}
    rel = relative_reg(M, max_len=max_len) if include_relative else None
    cover = M.ring if M.ring.is_polynomial else M.ring.cover
    return RegularityReport(repr(M.ring), repr(cover), routes, wits, rel)
