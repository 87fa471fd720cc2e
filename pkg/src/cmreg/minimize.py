"""Splitting trivial summands off chains of graded maps.

A degree-zero entry of a differential is a unit (entries are homogeneous,
so degree zero means a nonzero constant).  Eliminating it removes one basis
vector from the source and one from the target, replaces the map by its
Schur complement, drops the corresponding row of the next map and column of
the previous map, and leaves all homology unchanged.  Sweeping to a
fixpoint minimizes a free complex.
"""

from .freemod import vec_add, vec_poly_mul


def _find_unit(cols):
    for j, col in enumerate(cols):
        for (p, m), c in col.items():
            if not any(m):
                return j, p, c
    return None


def _drop_position(col, p0):
    return {(p - 1 if p > p0 else p, m): c for (p, m), c in col.items() if p != p0}


def _schur_eliminate(cols, j0, p0, u, K):
    """Remove column j0 and target position p0, correcting other columns."""
    uinv = K.inv(u)
    pivot = cols[j0]
    out = []
    for j, col in enumerate(cols):
        if j == j0:
            continue
        coeff = {m: c for (p, m), c in col.items() if p == p0}
        if coeff:
            factor = {m: K.mul(c, K.neg(uinv)) for m, c in coeff.items()}
            col = vec_add(col, vec_poly_mul(pivot, factor, K), K)
        out.append(_drop_position(col, p0))
    return out


def minimize_chain(twists, cols, K):
    """Minimize a chain of maps.

    twists: dict level -> twist tuple of F_level, for level = lo..hi
    cols:   dict level -> list of columns of d_level : F_level -> F_{level-1}

    Mutates nothing; returns (new_twists, new_cols, kept) where
    kept[level] lists the surviving original basis indices of F_level.
    """
    twists = {i: list(t) for i, t in twists.items()}
    cols = {i: [dict(c) for c in cs] for i, cs in cols.items()}
    kept = {i: list(range(len(t))) for i, t in twists.items()}

    changed = True
    while changed:
        changed = False
        for lev in sorted(cols):
            hit = _find_unit(cols[lev])
            if hit is None:
                continue
            j0, p0, u = hit
            cols[lev] = _schur_eliminate(cols[lev], j0, p0, u, K)
            del twists[lev][j0]
            del kept[lev][j0]
            del twists[lev - 1][p0]
            del kept[lev - 1][p0]
            if lev + 1 in cols:
                cols[lev + 1] = [_drop_position(c, j0) for c in cols[lev + 1]]
            if lev - 1 in cols:
                prev = cols[lev - 1]
                del prev[p0]
            changed = True
            break
    return ({i: tuple(t) for i, t in twists.items()},
            cols,
            kept)


def minimize_presentation(gen_twists, rel_cols, K):
    """Minimal presentation from a (gens, relations) pair.

    Relation columns must be nonzero and homogeneous.
    Returns (new gen twists, new relation columns, kept gen indices).
    """
    from .poly import mono_deg
    rel_cols = [c for c in rel_cols if c]
    rel_degs = []
    for c in rel_cols:
        (p, m) = next(iter(c))
        rel_degs.append(mono_deg(m) + gen_twists[p])
    tw, cs, kept = minimize_chain({0: tuple(gen_twists), 1: tuple(rel_degs)},
                                  {1: rel_cols}, K)
    new_cols = [c for c in cs[1] if c]
    return tw[0], new_cols, kept[0]
