from cmreg.freemod import FreeModule, vec_add, vec_from_column, vec_term_mul
from cmreg.groebner import (certify, groebner_basis, ideal_groebner_basis,
                            reduce_poly_mod_defining, syzygy_generators)


def vecs_from_polys(polys):
    return [vec_from_column([f]) for f in polys]


def test_determinantal_ideal_basis(S4):
    # frozen: these three generators are already a basis under grevlex,
    # after replacing x*t - y*z by its normalized form
    x, y, z, t = S4.gens()
    gb = ideal_groebner_basis(S4, [x * x, x * z, x * t - y * z])
    assert sorted(str(g) for g in gb) == sorted(
        ["x^2", "x*z", "y*z + 32002*x*t"])


def test_basis_is_certified(S3):
    x, y, z = S3.gens()
    F = FreeModule(S3, (0,))
    gb = groebner_basis(vecs_from_polys([x * y - z * z, y * y, x * z]), S3, F)
    assert certify(gb)


def test_normal_form_idempotent(S3):
    x, y, z = S3.gens()
    F = FreeModule(S3, (0,))
    gb = groebner_basis(vecs_from_polys([x * x - y * z, y * y]), S3, F)
    v = vec_from_column([x ** 3 + y ** 3 + z ** 3])
    r1 = gb.normal_form(v)
    r2 = gb.normal_form(r1)
    assert r1 == r2


def test_membership(S3):
    x, y, z = S3.gens()
    F = FreeModule(S3, (0,))
    gb = groebner_basis(vecs_from_polys([x * x, x * y]), S3, F)
    assert gb.contains(vec_from_column([x * x * z + x * y * y]))
    assert not gb.contains(vec_from_column([x * z]))


def test_syzygies_annihilate_generators(S3):
    x, y, z = S3.gens()
    F = FreeModule(S3, (0,))
    gens = [x * x, x * y - z * z, y * z]
    gb = groebner_basis(vecs_from_polys(gens), S3, F)
    elems = gb.module_elements
    syzygies, _ = syzygy_generators(gb)
    assert syzygies
    K = S3.field
    for syz in syzygies:
        total = {}
        for (i, mono), c in syz.items():
            total = vec_add(total, vec_term_mul(elems[i].vec, mono, c, K), K)
        assert not total


def test_reduction_in_quotient_ring(det_ring):
    x, y, z, t = det_ring.gens()
    assert reduce_poly_mod_defining(det_ring, x * x).is_zero()
    assert reduce_poly_mod_defining(det_ring, x * t - y * z).is_zero()
    nonzero = reduce_poly_mod_defining(det_ring, y * z)
    assert not nonzero.is_zero()
