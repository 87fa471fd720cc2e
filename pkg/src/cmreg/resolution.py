"""Minimal graded free resolutions by iterated syzygies.

Each level replaces the current differential's columns by their reduced
Groebner basis, extracts trace syzygies for the next differential, then
sweeps unit elimination over the whole chain.  The sweep keeps every level
minimal as it is built, so over a polynomial cover the loop provably stops
at the projective dimension.  Over a quotient ring the resolution may be
infinite and is truncated at max_len.
"""

from math import inf

from .freemod import FreeModule, GradedMap
from .groebner import groebner_basis, syzygy_generators
from .minimize import minimize_chain


class FreeResolution:
    """Chain F_0 <- F_1 <- ... with maps[i] = d_{i+1} : F_{i+1} -> F_i."""

    __slots__ = ("ring", "f0", "maps", "complete")

    def __init__(self, ring, f0, maps, complete):
        self.ring = ring
        self.f0 = f0
        self.maps = list(maps)
        self.complete = complete

    @property
    def length(self):
        return len(self.maps)

    def module(self, i):
        if i == 0:
            return self.f0
        if 1 <= i <= len(self.maps):
            return self.maps[i - 1].source
        return FreeModule(self.ring, [])

    def differential(self, i):
        """d_i : F_i -> F_{i-1}."""
        return self.maps[i - 1]

    def is_minimal(self):
        from .poly import mono_deg
        for gm in self.maps:
            for col in gm.cols:
                if any(mono_deg(m) == 0 for (_, m) in col):
                    return False
        return True

    def betti(self):
        out = {}
        for i in range(self.length + 1):
            for j in self.module(i).twists:
                out[(i, j)] = out.get((i, j), 0) + 1
        return out

    def check_composition(self):
        from .groebner import _augmented_columns, _reduce
        for i in range(1, len(self.maps)):
            comp = self.maps[i - 1].compose(self.maps[i])
            if self.ring.is_polynomial:
                if not comp.is_zero():
                    return False
            else:
                # over a quotient ring entries need only vanish modulo I
                blockers = _augmented_columns(self.ring, comp.target)
                for c in comp.cols:
                    r, _ = _reduce(c, blockers, self.ring.field)
                    if r:
                        return False
        return True


_HARD_LIMIT_PAD = 4


def free_resolution(M, max_len=None):
    """Minimal free resolution of a presented module over its own ring."""
    ring = M.ring
    K = ring.field
    if max_len is None:
        max_len = (ring.nvars + 1) if ring.is_polynomial else 2 * ring.nvars + 4
    cached = M._cache.get(("resolution", max_len))
    if cached is not None:
        return cached
    Mmin = M.minimized()
    f0 = Mmin.gens_free
    if f0.rank == 0 or not Mmin.rel_cols:
        return FreeResolution(ring, f0, [], True)

    twists = {0: tuple(f0.twists)}
    cols = {}
    current = groebner_basis(Mmin.rel_cols, ring, f0)
    level = 0
    complete = False
    hard = max_len + _HARD_LIMIT_PAD if ring.is_polynomial else max_len
    while True:
        level += 1
        vecs = current.module_vectors()
        if not vecs:
            level -= 1
            complete = True
            break
        cols[level] = vecs
        twists[level] = tuple(current.module_degrees())
        if level >= hard:
            if ring.is_polynomial and level > max_len:
                raise RuntimeError("resolution over polynomial ring exceeded its bound")
            break
        syz, _ = syzygy_generators(current)
        if syz:
            from .freemod import vec_degree
            degs = [vec_degree(v, twists[level]) for v in syz]
            cols[level + 1] = syz
            twists[level + 1] = tuple(degs)
        twists, cols, _ = minimize_chain(twists, cols, K)
        nxt = cols.get(level + 1)
        if nxt is not None and not any(nxt):
            del cols[level + 1]
            twists.pop(level + 1, None)
            nxt = None
        if nxt is None:
            # chain became exact on top after the sweep
            if level in cols and not any(cols[level]):
                del cols[level]
                twists.pop(level, None)
                level -= 1
            complete = True
            break
        # columns of d_{level+1} live in F_level
        current = groebner_basis(cols[level + 1], ring,
                                 FreeModule(ring, twists[level]))

    maps = []
    for i in range(1, level + 1):
        if i not in cols:
            break
        src = FreeModule(ring, twists[i])
        tgt = FreeModule(ring, twists[i - 1])
        maps.append(GradedMap(src, tgt, cols[i]))
    f0_final = FreeModule(ring, twists[0])
    res = FreeResolution(ring, f0_final, maps, complete)
    M._cache[("resolution", max_len)] = res
    return res


class BettiTable:
    """Graded Betti numbers beta_{i,j}, Macaulay-style rendering."""

    __slots__ = ("entries", "complete", "ring_repr")

    def __init__(self, entries, complete, ring_repr=""):
        self.entries = {k: v for k, v in entries.items() if v}
        self.complete = complete
        self.ring_repr = ring_repr

    def regularity(self):
        if not self.entries:
            return -inf
        return max(j - i for (i, j) in self.entries)

    def max_shift(self, i):
        """t_i: largest j with beta_{i,j} nonzero, -inf if the column is empty."""
        js = [j for (ii, j) in self.entries if ii == i]
        return max(js) if js else -inf

    def projective_dimension(self):
        if not self.entries:
            return -inf
        top = max(i for (i, _) in self.entries)
        return top if self.complete else inf

    def witness(self):
        """(i, j) attaining the regularity."""
        if not self.entries:
            return None
        r = self.regularity()
        return min((i, j) for (i, j) in self.entries if j - i == r)

    def render(self):
        if not self.entries:
            return "(zero module)"
        imax = max(i for (i, _) in self.entries)
        rows = sorted({j - i for (i, j) in self.entries})
        width = max(len(str(v)) for v in self.entries.values())
        width = max(width, len(str(imax)), 2)
        head = "  j-i | " + " ".join(f"{i:>{width}}" for i in range(imax + 1))
        lines = [head, "  " + "-" * (len(head) - 2)]
        for r in rows:
            cells = []
            for i in range(imax + 1):
                v = self.entries.get((i, r + i), 0)
                cells.append(f"{v if v else '.':>{width}}")
            lines.append(f"{r:>5} | " + " ".join(cells))
        if not self.complete:
            lines.append("  (truncated)")
        return "\n".join(lines)

    def to_json(self):
        ent = [[i, j, v] for (i, j), v in sorted(self.entries.items())]
        return {"entries": ent, "complete": self.complete}

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries


def betti_table(M, max_len=None):
    res = free_resolution(M, max_len=max_len)
    return BettiTable(res.betti(), res.complete, repr(M.ring))


def poincare_table(M, max_len=None):
    """Coefficient table of the Poincare series, truncated at max_len."""
    return betti_table(M, max_len=max_len)


def pd(M, max_len=None):
    """Projective dimension; +inf when the truncated resolution has not
    reached zero (a certified lower bound is the truncation length)."""
    if M.is_zero():
        return -inf
    res = free_resolution(M, max_len=max_len)
    if res.complete:
        return res.length
    return inf


def depth_via_ab(M):
    """depth = n - pd over the polynomial cover (Auslander-Buchsbaum)."""
    if M.is_zero():
        return inf
    Mc = M.lift_to_cover()
    return Mc.ring.nvars - pd(Mc)
