import random

import numpy as np
import pytest

from delpezzo.picard import LatticeClass, PicardLattice, UnsupportedDegree, enumerate_roots
from delpezzo.weyl import (
    CapExceeded,
    NotARoot,
    classify_named,
    close_group,
    element_order,
    fingerprint,
    frame_matrix,
    full_weyl_group,
    identity,
    involution_frames,
    minus_on_kperp,
    reflection,
    simple_roots,
)


def _cls(*coords):
    return LatticeClass(tuple(coords))


def test_reflection_examples():
    lat5 = PicardLattice(5)
    r = reflection(lat5, _cls(0, 1, -1, 0, 0))
    assert r.apply(lat5.basis[1]) == lat5.basis[2]
    assert r.apply(lat5.basis[2]) == lat5.basis[1]
    for i in (0, 3, 4):
        assert r.apply(lat5.basis[i]) == lat5.basis[i]
    assert (r * r).is_identity()
    lat6 = PicardLattice(6)
    s = reflection(lat6, _cls(1, -1, -1, -1))
    assert s.apply(lat6.basis[0]) == _cls(2, -1, -1, -1)
    with pytest.raises(NotARoot):
        reflection(lat6, lat6.basis[1])


def test_reflection_fixes_canonical_and_form():
    lat = PicardLattice(4)
    for root in enumerate_roots(lat)[:10]:
        r = reflection(lat, root)
        assert r.apply(lat.canonical) == lat.canonical
        g = lat.gram
        assert np.array_equal(r.np.T @ g @ r.np, g)


def test_close_group_orders():
    assert full_weyl_group(6).order == 12
    assert full_weyl_group(5).order == 120
    assert full_weyl_group(4).order == 1920


def test_cap_exceeded():
    lat = PicardLattice(4)
    gens = [reflection(lat, s) for s in simple_roots(lat)]
    with pytest.raises(CapExceeded) as err:
        close_group(lat, gens, cap=100)
    assert err.value.partial_size > 100


def test_fingerprint_examples():
    lat2 = PicardLattice(2)
    fp_id = fingerprint(lat2, identity(lat2))
    assert fp_id.trace_kperp == 7
    assert fp_id.fixed_line_count == 56
    geiser = minus_on_kperp(lat2)
    fp_g = fingerprint(lat2, geiser)
    assert fp_g.trace_kperp == -7
    assert fp_g.fixed_line_count == 0
    assert fp_g.order == 2
    # any root reflection on degree 3 has eigenvalues -1, 1^5 on K-perp,
    # hence trace 4 (= r - 2k with r = 6, k = 1)
    lat3 = PicardLattice(3)
    fp_r = fingerprint(lat3, reflection(lat3, _cls(0, 1, -1, 0, 0, 0, 0)))
    assert fp_r.trace_kperp == 4
    assert fp_r.charpoly_kperp == (-1, 4, -5, 0, 5, -4, 1)  # (x-1)^5 (x+1)


def test_trace_kperp_is_full_trace_minus_one():
    lat = PicardLattice(4)
    rng = random.Random(23)
    roots = enumerate_roots(lat)
    for _ in range(10):
        g = reflection(lat, rng.choice(roots)) * reflection(lat, rng.choice(roots))
        fp = fingerprint(lat, g)
        assert fp.trace_kperp == int(np.trace(g.np)) - 1


def test_fingerprint_is_conjugation_invariant():
    lat = PicardLattice(3)
    group = full_weyl_group(5)
    rng = random.Random(31)
    roots = enumerate_roots(lat)
    g = reflection(lat, roots[0]) * reflection(lat, roots[10])
    fp = fingerprint(lat, g)
    w_roots = enumerate_roots(lat)
    for _ in range(6):
        h = reflection(lat, rng.choice(w_roots)) * reflection(lat, rng.choice(w_roots))
        conj = h * g * h.inverse()
        assert fingerprint(lat, conj) == fp


def test_minus_on_kperp():
    lat2 = PicardLattice(2)
    geiser = minus_on_kperp(lat2)
    assert geiser.apply(lat2.canonical) == lat2.canonical
    lat1 = PicardLattice(1)
    bertini = minus_on_kperp(lat1)
    e1 = lat1.basis[1]
    image = bertini.apply(e1)
    assert image == -2 * lat1.canonical - e1
    assert lat1.selfint(image) == -1
    with pytest.raises(UnsupportedDegree):
        minus_on_kperp(PicardLattice(3))


def test_involution_frames_tables():
    lat2 = PicardLattice(2)
    scan = involution_frames(lat2, 3)
    assert {fp.trace_kperp for fp in scan.fingerprints} == {1}
    assert {fp.fixed_line_count for fp in scan.fingerprints} == {8, 0}
    lat1 = PicardLattice(1)
    scan = involution_frames(lat1, 4)
    assert {fp.trace_kperp for fp in scan.fingerprints} == {0}
    assert {fp.fixed_line_count for fp in scan.fingerprints} == {8, 24}
    lat3 = PicardLattice(3)
    scan = involution_frames(lat3, 1)
    assert len(scan.fingerprints) == 1
    fp = scan.fingerprints[0]
    assert fp.trace_kperp == 4 and fp.fixed_line_count == 15 and fp.fixed_trio_count == 15
    assert scan.exhausted


def test_frame_trace_law():
    for degree in (3, 2, 1):
        lat = PicardLattice(degree)
        for k in range(0, min(4, lat.r) + 1):
            scan = involution_frames(lat, k, budget=5000)
            for fp in scan.fingerprints:
                assert fp.trace_kperp == lat.r - 2 * k


def test_small_budget_flags_underreporting():
    lat = PicardLattice(1)
    scan = involution_frames(lat, 4, budget=50)
    assert not scan.exhausted
    assert scan.frames_examined >= 50


def _a3_squared_element(lat2):
    def root(*coords):
        return _cls(*coords)

    chain1 = [root(0, 1, -1, 0, 0, 0, 0, 0), root(0, 0, 1, -1, 0, 0, 0, 0), root(0, 0, 0, 1, -1, 0, 0, 0)]
    chain2 = [
        root(0, 0, 0, 0, 0, 1, -1, 0),
        root(0, 0, 0, 0, 0, 0, 1, -1),
        root(2, -1, -1, -1, -1, -1, -1, 0),
    ]
    g = identity(lat2)
    for s in chain1 + chain2:
        g = g * reflection(lat2, s)
    return g


def test_classify_named():
    lat2 = PicardLattice(2)
    g = _a3_squared_element(lat2)
    assert element_order(g) == 4
    fp = fingerprint(lat2, g)
    assert fp.trace_kperp == -1
    assert classify_named(lat2, g) == "A_3^2"
    # order-3 element of type A_2^2 on degree 1
    lat1 = PicardLattice(1)
    from delpezzo.dp1 import a22_element

    g3 = a22_element(lat1)
    assert fingerprint(lat1, g3).trace_kperp == 2
    assert classify_named(lat1, g3) == "A_2^2"
    # involution rows
    assert classify_named(lat2, minus_on_kperp(lat2)) == "A_1^7"
    assert classify_named(lat1, minus_on_kperp(lat1)) == "A_1^8"
    assert classify_named(lat2, identity(lat2)) == "id"


def test_classify_named_d4a1():
    """A 4-cycle of roots (two orthogonal pairs, unit products around the
    square) gives an order-4 element with spectrum {i, i, -i, -i} on its
    span; times an orthogonal reflection it lands in the remaining named
    order-4 class."""
    lat2 = PicardLattice(2)
    a = _cls(0, 1, -1, 0, 0, 0, 0, 0)
    b = _cls(0, 0, 1, -1, 0, 0, 0, 0)
    c = _cls(0, 0, 0, 1, -1, 0, 0, 0)
    d = _cls(1, -1, 0, 0, -1, -1, 0, 0)
    s = _cls(0, 0, 0, 0, 0, 0, 1, -1)
    assert lat2.intersection(a, c) == 0 and lat2.intersection(b, d) == 0
    g = (
        reflection(lat2, a)
        * reflection(lat2, c)
        * reflection(lat2, b)
        * reflection(lat2, d)
        * reflection(lat2, s)
    )
    assert element_order(g) == 4
    fp = fingerprint(lat2, g)
    assert fp.trace_kperp == 1
    # (x^2+1)^2 (x+1) (x-1)^2, ascending coefficients
    assert fp.charpoly_kperp == (1, -1, 1, -1, -1, 1, -1, 1)
    assert classify_named(lat2, g) == "D_4(a_1)xA_1"


def test_frame_matrix_is_commuting_product():
    lat = PicardLattice(3)
    roots = enumerate_roots(lat)
    arr = np.array([r.coords for r in roots])
    # pick an orthogonal pair
    found = None
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if lat.intersection(roots[i], roots[j]) == 0:
                found = (i, j)
                break
        if found:
            break
    i, j = found
    prod = reflection(lat, roots[i]) * reflection(lat, roots[j])
    assert np.array_equal(frame_matrix(lat, arr[[i, j]]), prod.np)
