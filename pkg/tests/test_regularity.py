from math import inf

import pytest

from cmreg import (KoszulHypothesisError, PresentedModule, a_invariant,
                   bass_table, betti_table, complex_from_module, depth,
                   depth_profile, free_resolution, koszul_complex,
                   local_cohomology_table, module_from_ideal, reg_complex,
                   reg_via_betti, reg_via_duality, reg_via_ext,
                   reg_via_koszul, regularity, relative_reg)


def all_routes(M):
    return {
        "betti": reg_via_betti(M)[0],
        "ext": reg_via_ext(M)[0],
        "koszul": reg_via_koszul(M)[0],
        "duality": reg_via_duality(M)[0],
    }


def test_polynomial_ring_has_regularity_zero(S3):
    vals = all_routes(PresentedModule.cyclic(S3, []))
    assert set(vals.values()) == {0}


def test_zero_module_is_minus_infinity(S3):
    vals = all_routes(PresentedModule.zero(S3))
    assert set(vals.values()) == {-inf}


def test_finite_length_module_reg_is_top_degree(S3):
    x, y, z = S3.gens()
    M = PresentedModule.cyclic(S3, [x * x, y * y, z * z])
    vals = all_routes(M)
    assert set(vals.values()) == {3}
    assert M.top_degree() == 3


def test_all_routes_on_determinantal_ring(det_module):
    vals = all_routes(det_module)
    assert set(vals.values()) == {1}


def test_report_object(det_module):
    rep = regularity(det_module)
    assert rep.agree
    assert rep.value == 1
    d = rep.as_dict()
    assert d["routes"] == {"betti": 1, "ext": 1, "koszul": 1, "duality": 1}
    # the module is free over its own ring, so relative reg is zero
    assert d["relative"]["value"] == 0 and d["relative"]["certified"]


def test_betti_bass_duality(S3):
    # over an n-variable cover: beta_{i,j}(M) = mu^{n-i, j-n}(M)
    x, y, z = S3.gens()
    M = PresentedModule.cyclic(S3, [x * y, z * z * z])
    bt = betti_table(M).entries
    mu = bass_table(M)
    n = 3
    assert bt
    for (i, j), b in bt.items():
        assert mu.get((n - i, j - n)) == b
    for (i, j), m in mu.items():
        assert bt.get((n - i, j + n), 0) == m


def test_local_cohomology_of_polynomial_ring(S2):
    M = PresentedModule.cyclic(S2, [])
    lc = local_cohomology_table(M, window=(-5, 2))
    # one row at the Krull dimension, top degree -n
    assert set(i for (i, _) in lc.entries) == {2}
    assert lc.row_support == {2: (-inf, -2)}
    assert lc.entries[(2, -2)] == 1
    assert lc.regularity() == 0


def test_local_cohomology_depth_dim(det_module):
    lc = local_cohomology_table(det_module)
    dd = lc.depth_dim()
    assert dd == (2, 2)
    assert lc.regularity() == 1


def test_a_invariant_of_polynomial_rings():
    from cmreg import polynomial_ring
    for n in range(1, 5):
        S = polynomial_ring([f"x{i}" for i in range(n)])
        assert a_invariant(S) == -n


def test_gorenstein_reg_equals_dim_plus_a(S2, ci_ring):
    x, y = S2.gens()
    R = S2.quotient([x * x + y * y])
    M = PresentedModule.cyclic(R, [])
    assert M.dimension() == 1
    assert a_invariant(R) == 0
    assert reg_via_duality(M)[0] == 1 + 0
    # zero-dimensional complete intersection: dim 0, socle degree 2
    k2 = PresentedModule.cyclic(ci_ring, [])
    assert a_invariant(ci_ring) == 2
    assert reg_via_duality(k2)[0] == 0 + 2


def test_tower_additivity():
    # complete intersections of powers: reg adds up as (a-1) + (b-1)
    from cmreg import polynomial_ring
    S = polynomial_ring(["x", "y"])
    x, y = S.gens()
    for a, b in [(2, 2), (2, 3), (3, 4)]:
        M = PresentedModule.cyclic(S, [x ** a, y ** b])
        assert reg_via_duality(M)[0] == (a - 1) + (b - 1)


def test_single_form_shifts_reg_by_degree_minus_one(S3):
    x, y, z = S3.gens()
    M = PresentedModule.cyclic(S3, [])
    for f, d in [(x, 1), (x * x + y * z, 2), (x ** 3 + y ** 3 + z ** 3, 3)]:
        L = koszul_complex([f], complex_from_module(M))
        assert reg_complex(L) == 0 + d - 1


def test_reg_of_complex_cross_checks(det_module):
    z = det_module.ring.gens()[2]
    L = koszul_complex([z], complex_from_module(det_module))
    assert reg_complex(L, cross_check=True) == 1


def test_short_exact_sequence_bounds(S3):
    # 0 -> I -> S -> S/I -> 0: each member against the other two
    x, y, z = S3.gens()
    gens = [x * x * y, y * z * z]
    I = module_from_ideal(S3, gens)
    Sfree = PresentedModule.cyclic(S3, [])
    Q = PresentedModule.cyclic(S3, gens)
    a = reg_via_ext(I)[0]
    b = reg_via_ext(Sfree)[0]
    c = reg_via_ext(Q)[0]
    assert b <= max(a, c)
    assert a <= max(b, c + 1)
    assert c <= max(b, a - 1)


def test_ideal_vs_quotient_reg(S3):
    x, y, z = S3.gens()
    gens = [x * y, y * z]
    assert (reg_via_duality(module_from_ideal(S3, gens))[0]
            == reg_via_duality(PresentedModule.cyclic(S3, gens))[0] + 1)


def test_koszul_hypothesis_error_carries_witness(det_module):
    z = det_module.ring.gens()[2]
    with pytest.raises(KoszulHypothesisError) as ei:
        reg_via_koszul(det_module, forms=[z])
    assert ei.value.spot == 1
    assert ei.value.dimension == 2
    assert "H_1" in str(ei.value)


def test_koszul_accepts_appended_forms(S3):
    x, y, z = S3.gens()
    M = PresentedModule.cyclic(S3, [x * x, x * y])
    base = reg_via_koszul(M)[0]
    extra = list(S3.gens()) + [x + 2 * y, y - z]
    assert reg_via_koszul(M, forms=extra)[0] == base


def test_depth_profile_routes_agree(det_module, S3):
    prof = depth_profile(det_module)
    assert len(set(prof.values())) == 1
    assert depth(det_module) == 2
    x, y, z = S3.gens()
    N = PresentedModule.cyclic(S3, [x * y, x * z])
    prof = depth_profile(N)
    assert len(set(prof.values())) == 1
    assert depth(N) == 1


def test_depth_of_zero_module_is_plus_infinity(S3):
    assert depth(PresentedModule.zero(S3)) == inf


def test_relative_reg_over_quotient_ring_flags_truncation(ci_ring):
    k = PresentedModule.cyclic(ci_ring, list(ci_ring.gens()))
    rel = relative_reg(k, max_len=6)
    assert not rel.certified
    assert rel.value == 0


def test_relative_reg_certified_over_cover(S3):
    x, y, z = S3.gens()
    M = PresentedModule.cyclic(S3, [x * x, y * z])
    rel = relative_reg(M)
    assert rel.certified
    assert rel.value == reg_via_betti(M)[0]


def test_bass_table_of_residue_field(S2):
    k = PresentedModule.cyclic(S2, list(S2.gens()))
    mu = bass_table(k)
    assert mu == {(0, 0): 1, (1, -1): 2, (2, -2): 1}
