"""Class census, canonicalisation, and the orbit oracle."""

import numpy as np
import pytest
import sympy

from d4syl import TooLarge, build_tower
from d4syl import conjugacy as cj
from d4syl.backend import get_kernel
from d4syl.group import GroupElement, element, order, root_factor


def test_class_count_polynomials():
    q = sympy.Symbol("q")
    total = sum(
        sympy.expand(cj.family_class_count(tag, q) * q ** cj.FAMILY_SIZE_EXP[tag])
        for tag in cj.FAMILY_ORDER
    )
    assert sympy.expand(total) == q**12
    count = sum(cj.family_class_count(tag, q) for tag in cj.FAMILY_ORDER)
    assert sympy.expand(count) == sympy.expand(2 * q**5 + 2 * q**4 - q**3 - q**2 - q)
    w = sympy.Symbol("w")
    assert sympy.expand(count.subs(q, w + 1)) == sympy.expand(
        2 * w**5 + 12 * w**4 + 27 * w**3 + 28 * w**2 + 12 * w + 1
    )


@pytest.mark.parametrize("q", [3, 5, 7])
def test_census_counts(q):
    ctx = build_tower(q, 1)
    classes = cj.list_classes(ctx)
    assert len(classes) == cj.class_count(q) == cj.class_count_qminus1(q)
    assert sum(c.size for c in classes) == order(ctx)
    for tag in cj.FAMILY_ORDER:
        fam = cj.census(ctx).family_classes(tag)
        assert len(fam) == cj.family_class_count(tag, q)
        assert all(c.family == tag for c in fam)


def test_census_examples_q3(ctx3):
    classes = cj.list_classes(ctx3)
    assert len(classes) == 609
    x4 = cj.census(ctx3).family_classes("x4")
    assert len(x4) == 26 and all(c.size == 9 for c in x4)
    x1x6 = cj.census(ctx3).family_classes("x1x6")
    assert len(x1x6) == 78 and all(c.size == 243 for c in x1x6)
    assert classes[0].rep.is_identity() and classes[0].size == 1


def test_class_of_basic(ctx3):
    e = element(ctx3)
    assert cj.class_of(ctx3, e).family == "id"
    # x5(t5) x6(s6) lies in the class of x5(t5) for every s6
    for t5 in range(1, 3):
        want = cj.class_of(ctx3, root_factor(ctx3, 5, ctx3.fq_at(t5)))
        for s6 in range(3):
            got = cj.class_of(ctx3, element(ctx3, t5=ctx3.fq_at(t5), t6=ctx3.fq_at(s6)))
            assert got is want


def test_class_reps_are_fixed_points(ctx3):
    for c in cj.list_classes(ctx3):
        assert cj.rep_coords_of(ctx3, c.rep.coords) == c.rep.coords
        assert cj.class_of(ctx3, c.rep) is c


def test_centralizer_order(ctx3):
    classes = cj.list_classes(ctx3)
    assert cj.centralizer_order(ctx3, classes[0]) == 3**12
    for c in classes:
        if c.family == "x6":
            assert cj.centralizer_order(ctx3, c) == 3**12
        if c.family == "x1x2":
            assert cj.centralizer_order(ctx3, c) == 3**4


def _strip_rep(ctx, coords):
    """Reference canonicaliser: explicit conjugations, solved one at a time.

    Independent of the gather chains in conjugacy.rep_coords_of; each step
    asserts that the targeted coordinate actually became zero.
    """
    kern = get_kernel(ctx)
    t1, t2, t3, t4, t5, t6 = coords
    if t1 and t2:
        return (t1, t2, 0, 0, 0, 0)
    if t1:
        rep3, s2 = int(ctx.dec_rep[t1, t3]), int(ctx.dec_s[t1, t3])
        if rep3:
            return (t1, 0, rep3, 0, 0, 0)
        y = kern.conj((0, int(ctx.negq[s2]), 0, 0, 0, 0), coords)
        assert y[2] == 0
        y = kern.conj((0, 0, int(ctx.psi_inv[t1, y[3]]), 0, 0, 0), y)
        assert y[2] == 0 and y[3] == 0
        y = kern.conj((0, 0, 0, int(ctx.solve_phi[t1, y[4]]), 0, 0), y)
        assert y[2] == 0 and y[3] == 0 and y[4] == 0
        return y
    if t2:
        r1 = int(ctx.mul3[t3, ctx.embq[ctx.invq[t2]]])
        y = kern.conj((r1, 0, 0, 0, 0, 0), coords)
        assert y[2] == 0
        r5 = int(ctx.mulq[y[5], ctx.invq[t2]])
        y = kern.conj((0, 0, 0, 0, r5, 0), y)
        assert y[2] == 0 and y[5] == 0
        return y
    if t3:
        r1 = int(ctx.psi_inv[t3, ctx.neg3[t4]])
        y = kern.conj((r1, 0, 0, 0, 0, 0), coords)
        assert y[3] == 0
        r4 = int(ctx.solve_phi[t3, y[5]])
        y = kern.conj((0, 0, 0, r4, 0, 0), y)
        assert y[3] == 0 and y[5] == 0
        return y
    if t4:
        return (0, 0, 0, t4, 0, 0)
    if t5:
        return (0, 0, 0, 0, t5, 0)
    return (0, 0, 0, 0, 0, t6)


def test_gather_chains_match_explicit_stripping(ctx3):
    kern = get_kernel(ctx3)
    rng = np.random.default_rng(17)
    n = order(ctx3)
    for _ in range(3000):
        coords = kern.unrank(int(rng.integers(n)))
        assert cj.rep_coords_of(ctx3, coords) == _strip_rep(ctx3, coords)


def test_brute_force_orbits_match_census(ctx3, orbit_labels3):
    n_orbits, size_hist = cj.orbit_summary(orbit_labels3)
    assert n_orbits == 609
    assert orbit_labels3[0] == 0  # identity is its own orbit
    assert size_hist == {1: 3, 3: 2, 9: 26, 81: 240, 243: 78, 729: 208, 6561: 52}


def test_classification_agrees_with_orbits_exhaustively(ctx3, orbit_labels3, class_index3):
    # constant on orbits and separating: the partition equals the orbit one
    assert np.array_equal(class_index3, class_index3[orbit_labels3])
    assert len(set(zip(orbit_labels3.tolist(), class_index3.tolist()))) == 609
    # per-class cardinalities
    counts = np.bincount(class_index3, minlength=609)
    for c in cj.list_classes(ctx3):
        assert counts[c.index] == c.size


def test_class_of_matches_classify_all_sample(ctx3, class_index3):
    kern = get_kernel(ctx3)
    rng = np.random.default_rng(23)
    for _ in range(500):
        r = int(rng.integers(order(ctx3)))
        x = GroupElement(ctx3, kern.unrank(r))
        assert cj.class_of(ctx3, x).index == class_index3[r]


def test_membership_shapes(ctx3, class_index3):
    # spot-check the x1x6 membership description: x(t1, 0, s2 t1, s4, s5, *)
    cen = cj.census(ctx3)
    c = cen.family_classes("x1x6")[5]
    t1 = c.rep.coords[0]
    members = np.flatnonzero(class_index3 == c.index)
    kern = get_kernel(ctx3)
    for r in members[:100]:
        coords = kern.unrank(int(r))
        assert coords[0] == t1 and coords[1] == 0
        assert ctx3.dec_rep[t1, coords[2]] == 0
    assert len(members) == 3**5


def test_too_large_guards(ctx5):
    with pytest.raises(TooLarge):
        cj.brute_force_classes(ctx5)
    with pytest.raises(TooLarge):
        cj.classify_all(ctx5)
    # but the census itself is polynomial-sized and fine
    assert len(cj.list_classes(ctx5)) == cj.class_count(5)
