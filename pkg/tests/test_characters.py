"""Irreducible characters: counts, closed-form values, oracle agreement."""

import numpy as np
import pytest

from d4syl import CycInt, UnknownClass, build_tower, theta, theta_pi
from d4syl import characters as ch
from d4syl import conjugacy as cj
from d4syl.backend import get_kernel
from d4syl.group import GroupElement, element, order


def test_degree_census_symbolic():
    import sympy

    q = sympy.Symbol("q")
    total = sum(
        sympy.expand(ch.family_label_count(tag, q) * q ** (2 * ch.DEGREE_EXP[tag]))
        for tag in ch.CHAR_FAMILY_ORDER
    )
    assert sympy.expand(total) == q**12
    count = sum(ch.family_label_count(tag, q) for tag in ch.CHAR_FAMILY_ORDER)
    assert sympy.expand(count) == sympy.expand(2 * q**5 + 2 * q**4 - q**3 - q**2 - q)


@pytest.mark.parametrize("q", [3, 5, 7])
def test_label_counts(q):
    ctx = build_tower(q, 1)
    labels = ch.list_irreducibles(ctx)
    assert len(labels) == ch.irr_count(q) == cj.class_count(q)
    by_deg = {}
    for chi in labels:
        by_deg[ch.DEGREE_EXP[chi.family]] = by_deg.get(ch.DEGREE_EXP[chi.family], 0) + 1
    assert by_deg == ch.irr_count_by_degree(q) == ch.irr_count_by_degree_qminus1(q)
    assert sum(chi.degree(q) ** 2 for chi in labels) == order(ctx)


def test_label_counts_q3_specifics(ctx3):
    labels = ch.list_irreducibles(ctx3)
    assert len(labels) == 609
    assert sum(1 for c in labels if c.degree(3) == 81) == 54
    assert sum(1 for c in labels if c.degree(3) == 1) == 81


def test_trivial_character_row(ctx3, table3):
    # label (lin, (0, 0)) is the trivial character
    assert table3.labels[0].family == "lin" and table3.labels[0].params == (0, 0)
    want = np.zeros((609, 3), dtype=np.int64)
    want[:, 0] = 1
    assert np.array_equal(table3.values[0], want)


def test_degree_column(ctx3, table3):
    # value at the identity class equals the degree
    for i, chi in enumerate(table3.labels):
        v = table3.value(i, 0)
        assert v == CycInt.from_int(3, chi.degree(3))


def test_x6_family_values(ctx3, table3):
    cen = cj.census(ctx3)
    labels = table3.labels
    x6_classes = cen.family_classes("x6")
    for i, chi in enumerate(labels):
        if chi.family != "x6":
            continue
        d6, d1 = chi.params
        for c in x6_classes:
            got = table3.value(i, c.index)
            want = theta(ctx3, ctx3.fq_at(ctx3.mulq[d6, c.rep.coords[5]])) * 81
            assert got == want
        # zero on the x2x4x5 classes
        for c in cen.family_classes("x2x4x5")[:5]:
            assert table3.value(i, c.index).is_zero()


def test_lin_family_values(ctx3, table3):
    cen = cj.census(ctx3)
    for i, chi in enumerate(table3.labels):
        if chi.family != "lin":
            continue
        d1, d2 = chi.params
        for c in cen.family_classes("x1x6")[:6]:
            got = table3.value(i, c.index)
            want = theta_pi(ctx3, ctx3.fq3_at(ctx3.mul3[d1, c.rep.coords[0]]))
            assert got == want


def test_kernel_patterns(ctx3, table3):
    cen = cj.census(ctx3)
    sl = {tag: cen.family_slices[tag] for tag in cj.FAMILY_ORDER}
    for i, chi in enumerate(table3.labels):
        vals = table3.values[i]
        deg = chi.degree(3)
        if chi.family == "x3":
            for tag in ("x4", "x5", "x6"):
                assert np.all(vals[sl[tag], 0] == deg)
                assert np.all(vals[sl[tag], 1:] == 0)
        if chi.family == "x4":
            for tag in ("x5", "x6"):
                assert np.all(vals[sl[tag], 0] == deg)
        if chi.family == "x5":
            assert np.all(vals[sl["x6"], 0] == deg)
            assert np.all(vals[sl["x4"]] == 0)
        if chi.family == "x6":
            for tag in ("x1x3", "x2x4x5", "x1x2", "x3x5", "x4", "x5"):
                assert np.all(vals[sl[tag]] == 0)


def test_char_value_unknown_class(ctx3, table3):
    fake = cj.ConjClass("x6", element(ctx3, t6=1, t5=1), 1, 1)
    with pytest.raises(UnknownClass):
        ch.char_value(ctx3, table3.labels[0], fake)


def test_char_value_at_is_class_function(ctx3, table3):
    kern = get_kernel(ctx3)
    rng = np.random.default_rng(31)
    n = order(ctx3)
    for _ in range(60):
        chi = table3.labels[int(rng.integers(609))]
        x = GroupElement(ctx3, kern.unrank(int(rng.integers(n))))
        g = GroupElement(ctx3, kern.unrank(int(rng.integers(n))))
        v = ch.char_value_at(ctx3, chi, x)
        assert v == ch.char_value_at(ctx3, chi, GroupElement(ctx3, kern.conj(g.coords, x.coords)))
    assert ch.char_value_at(ctx3, table3.labels[608], element(ctx3)) == CycInt.from_int(3, 81)


def test_oracle_equals_closed_forms(ctx3, table3, oracle3):
    assert np.array_equal(oracle3, table3.values)


def test_scalar_oracle_matches_grid(ctx3, table3, oracle3):
    rng = np.random.default_rng(37)
    for _ in range(40):
        i = int(rng.integers(609))
        j = int(rng.integers(609))
        got = ch.induced_value_oracle(ctx3, table3.labels[i], table3.classes[j].rep)
        assert got == CycInt(3, oracle3[i, j])


@pytest.mark.parametrize("pk", [(5, 1), (3, 2)])
def test_oracle_spot_checks_beyond_q3(pk):
    # the full-grid agreement is pinned at q = 3; spot-check larger towers,
    # including k = 2 where the trace map in the exponent is nontrivial
    p, k = pk
    ctx = build_tower(p, k)
    cap = ctx.q3**3 * ctx.q**3
    labels = ch.list_irreducibles(ctx)
    classes = cj.list_classes(ctx)
    rng = np.random.default_rng(101)
    # make sure every character family and several class families appear
    picks = []
    for fam in ch.CHAR_FAMILY_ORDER:
        fam_labels = [c for c in labels if c.family == fam]
        picks.append(fam_labels[int(rng.integers(len(fam_labels)))])
    for chi in picks:
        for _ in range(4):
            c = classes[int(rng.integers(len(classes)))]
            got = ch.induced_value_oracle(ctx, chi, c.rep, cap=cap)
            want = ch.char_value(ctx, chi, c)
            assert got == want, (ctx.q, chi, c)


def test_second_orthogonality_of_rows_spotcheck(ctx3, table3):
    # <chi, chi> = |U| for a few rows, via explicit CycInt arithmetic
    rng = np.random.default_rng(41)
    for _ in range(5):
        i = int(rng.integers(609))
        acc = CycInt.zero(3)
        for j, c in enumerate(table3.classes):
            v = table3.value(i, j)
            acc = acc + v * v.conjugate() * c.size
        assert acc == CycInt.from_int(3, 3**12)
