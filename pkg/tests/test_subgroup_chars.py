"""Characters of the three standard subgroups, induction, and inertia."""

import numpy as np
import pytest

from d4syl import CycInt, NotInSubgroup, theta, theta_pi
from d4syl import characters as ch
from d4syl.backend import get_kernel
from d4syl.group import GroupElement, element, generators, root_factor


def _pairing(ctx, d4, t4):
    # d4^q t4 + d4 t4^{q^2}
    a = ctx.fq3_at(d4)
    t = ctx.fq3_at(t4)
    return a.frobenius() * t + a * t.frobenius().frobenius()


def test_abelian_subgroup_values(ctx3):
    lam = ch.n_linear(ctx3, 2, 1, 5)
    for t4 in range(0, 27, 5):
        for t5 in range(3):
            for t6 in range(3):
                x = element(ctx3, t4=ctx3.fq3_at(t4), t5=ctx3.fq_at(t5), t6=ctx3.fq_at(t6))
                got = ch.subgroup_char_value(ctx3, lam, x)
                want = (
                    theta(ctx3, ctx3.fq_at(ctx3.mulq[2, t6]))
                    * theta(ctx3, ctx3.fq_at(ctx3.mulq[1, t5]))
                    * theta_pi(ctx3, _pairing(ctx3, 5, t4))
                )
                assert got == want
    # x6 slot only: lambda(x6(t6)) = theta(d6 t6)
    for t6 in range(3):
        got = ch.subgroup_char_value(ctx3, lam, root_factor(ctx3, 6, ctx3.fq_at(t6)))
        assert got == theta(ctx3, ctx3.fq_at(ctx3.mulq[2, t6]))


def test_membership_errors(ctx3):
    lam = ch.n_linear(ctx3, 1, 0, 0)
    with pytest.raises(NotInSubgroup):
        ch.subgroup_char_value(ctx3, lam, element(ctx3, t3=ctx3.fq3_at(1)))
    with pytest.raises(NotInSubgroup):
        ch.subgroup_char_value(
            ctx3, ch.h_linear(ctx3, 0, 0, 0), element(ctx3, t2=ctx3.fq_at(1))
        )
    with pytest.raises(NotInSubgroup):
        ch.subgroup_char_value(
            ctx3, ch.t_induced(ctx3, 1), element(ctx3, t1=ctx3.fq3_at(1))
        )


def test_h_table_linear_row(ctx3):
    # the linear characters of x1x4x5x6 kill the t5 slot
    lam = ch.h_linear(ctx3, 1, 7, 4)
    rng = np.random.default_rng(3)
    for _ in range(100):
        t1, t4 = int(rng.integers(27)), int(rng.integers(27))
        t5, t6 = int(rng.integers(3)), int(rng.integers(3))
        x = element(ctx3, t1=ctx3.fq3_at(t1), t4=ctx3.fq3_at(t4), t5=ctx3.fq_at(t5), t6=ctx3.fq_at(t6))
        got = ch.subgroup_char_value(ctx3, lam, x)
        want = (
            theta(ctx3, ctx3.fq_at(ctx3.mulq[1, t6]))
            * theta_pi(ctx3, _pairing(ctx3, 7, t4))
            * theta_pi(ctx3, ctx3.fq3_at(ctx3.mul3[4, t1]))
        )
        assert got == want


def test_h_table_induced_row(ctx3):
    # q^3 theta(d6 t6) theta(d5 t5) on the t5/t6 slots, zero elsewhere
    lam = ch.h_induced(ctx3, 2, 1)
    for t5 in range(3):
        for t6 in range(3):
            x = element(ctx3, t5=ctx3.fq_at(t5), t6=ctx3.fq_at(t6))
            got = ch.subgroup_char_value(ctx3, lam, x)
            want = (
                theta(ctx3, ctx3.fq_at(ctx3.mulq[2, t6]))
                * theta(ctx3, ctx3.fq_at(ctx3.mulq[1, t5]))
                * 27
            )
            assert got == want
    assert ch.subgroup_char_value(
        ctx3, lam, element(ctx3, t4=ctx3.fq3_at(3), t6=ctx3.fq_at(1))
    ).is_zero()
    assert ch.subgroup_char_value(
        ctx3, lam, element(ctx3, t1=ctx3.fq3_at(2), t4=ctx3.fq3_at(1))
    ).is_zero()


def test_h_induced_row_is_the_literal_induction(ctx3):
    lam_ind = ch.h_induced(ctx3, 1, 2)
    lam = ch.n_linear(ctx3, 1, 2, 0)
    rng = np.random.default_rng(5)
    for _ in range(60):
        x = element(
            ctx3,
            t1=ctx3.fq3_at(int(rng.integers(27))),
            t4=ctx3.fq3_at(int(rng.integers(27))),
            t5=ctx3.fq_at(int(rng.integers(3))),
            t6=ctx3.fq_at(int(rng.integers(3))),
        )
        got = ch.induced_from(ctx3, lam, x, target="x1x4x5x6")
        assert got == ch.subgroup_char_value(ctx3, lam_ind, x)


def test_res_ind_decomposition_on_abelian_subgroup(ctx3):
    # restriction of the induced character back to x4x5x6 splits into the
    # q^3 linear characters sharing (d6, d5)
    d6, d5 = 2, 1
    lam = ch.n_linear(ctx3, d6, d5, 0)
    rng = np.random.default_rng(7)
    for _ in range(40):
        n = element(
            ctx3,
            t4=ctx3.fq3_at(int(rng.integers(27))),
            t5=ctx3.fq_at(int(rng.integers(3))),
            t6=ctx3.fq_at(int(rng.integers(3))),
        )
        got = ch.induced_from(ctx3, lam, n, target="x1x4x5x6")
        want = CycInt.zero(3)
        for b in range(27):
            want = want + ch.subgroup_char_value(ctx3, ch.n_linear(ctx3, d6, d5, b), n)
        assert got == want


def test_t_table_rows(ctx3):
    lam = ch.t_linear(ctx3, 1, 5, 9, 2)
    rng = np.random.default_rng(9)
    for _ in range(100):
        t2, t5, t6 = (int(rng.integers(3)) for _ in range(3))
        t3, t4 = int(rng.integers(27)), int(rng.integers(27))
        x = element(
            ctx3,
            t2=ctx3.fq_at(t2),
            t3=ctx3.fq3_at(t3),
            t4=ctx3.fq3_at(t4),
            t5=ctx3.fq_at(t5),
            t6=ctx3.fq_at(t6),
        )
        got = ch.subgroup_char_value(ctx3, lam, x)
        want = (
            theta(ctx3, ctx3.fq_at(ctx3.mulq[2, t2]))
            * theta_pi(ctx3, -(ctx3.fq3_at(9) * ctx3.fq3_at(t3)))
            * theta_pi(ctx3, _pairing(ctx3, 5, t4))
            * theta(ctx3, ctx3.fq_at(ctx3.mulq[1, t5]))
        )
        assert got == want
    # the induced row: q^4 on the centre, zero elsewhere
    psi = ch.t_induced(ctx3, 2)
    for t6 in range(3):
        got = ch.subgroup_char_value(ctx3, psi, root_factor(ctx3, 6, ctx3.fq_at(t6)))
        assert got == theta(ctx3, ctx3.fq_at(ctx3.mulq[2, t6])) * 81
    assert ch.subgroup_char_value(ctx3, psi, root_factor(ctx3, 5, ctx3.fq_at(1))).is_zero()
    assert ch.subgroup_char_value(
        ctx3, psi, element(ctx3, t3=ctx3.fq3_at(4), t5=ctx3.fq_at(2))
    ).is_zero()


def test_t_induced_matches_literal_induction(ctx3):
    psi = ch.t_induced(ctx3, 1)
    lam = ch.n_linear(ctx3, 1, 0, 0)
    rng = np.random.default_rng(11)
    for _ in range(40):
        x = element(
            ctx3,
            t2=ctx3.fq_at(int(rng.integers(3))),
            t3=ctx3.fq3_at(int(rng.integers(27))),
            t4=ctx3.fq3_at(int(rng.integers(27))),
            t5=ctx3.fq_at(int(rng.integers(3))),
            t6=ctx3.fq_at(int(rng.integers(3))),
        )
        got = ch.induced_from(ctx3, lam, x, target="x2x3x4x5x6")
        assert got == ch.subgroup_char_value(ctx3, psi, x)


def test_inertia_orders(ctx3):
    q = 3
    # trivial character: the whole group stabilises it
    assert ch.inertia_order(ctx3, ch.n_linear(ctx3, 0, 0, 0), within="U") == q**12
    # nontrivial on the t6 slot, trivial on t5: inertia is x1x4x5x6
    assert ch.inertia_order(ctx3, ch.n_linear(ctx3, 1, 0, 0), within="U") == q**8
    assert ch.inertia_order(ctx3, ch.n_linear(ctx3, 2, 0, 5), within="U") == q**8
    # inside x2x3x4x5x6: nontrivial t6 slot shrinks the inertia to x4x5x6
    assert ch.inertia_order(ctx3, ch.n_linear(ctx3, 1, 0, 0), within="T") == q**5
    assert ch.inertia_order(ctx3, ch.n_linear(ctx3, 0, 2, 7), within="T") == q**9
    # inside x1x4x5x6: nontrivial t5 slot shrinks the inertia to x4x5x6
    assert ch.inertia_order(ctx3, ch.n_linear(ctx3, 1, 2, 0), within="H") == q**5
    assert ch.inertia_order(ctx3, ch.n_linear(ctx3, 1, 0, 13), within="H") == q**8


def test_t_induced_characters_are_stable_under_the_big_group(ctx3):
    # the induced characters with the centre outside their kernel extend the
    # stability seen on inertia: conjugation never moves them
    psi = ch.t_induced(ctx3, 2)
    kern = get_kernel(ctx3)
    rng = np.random.default_rng(13)
    for g in generators(ctx3):
        for _ in range(25):
            h = element(
                ctx3,
                t2=ctx3.fq_at(int(rng.integers(3))),
                t3=ctx3.fq3_at(int(rng.integers(27))),
                t4=ctx3.fq3_at(int(rng.integers(27))),
                t5=ctx3.fq_at(int(rng.integers(3))),
                t6=ctx3.fq_at(int(rng.integers(3))),
            )
            moved = GroupElement(ctx3, kern.conj(g.coords, h.coords))
            assert ch.subgroup_char_value(ctx3, psi, moved) == ch.subgroup_char_value(
                ctx3, psi, h
            )


def test_induction_chain_to_the_full_group(ctx3, request):
    # sum over the d1 slot of the top-family characters equals the induction
    # of the t6-slot character from either intermediate subgroup
    table = request.getfixturevalue("table3")
    d6 = 1
    rows = [
        i
        for i, chi in enumerate(table.labels)
        if chi.family == "x6" and chi.params[0] == d6
    ]
    assert len(rows) == 27
    total = table.values[rows].sum(axis=0)  # (609, 3)
    psi = ch.t_induced(ctx3, d6)
    lam = ch.n_linear(ctx3, d6, 0, 0)
    rng = np.random.default_rng(15)
    sample = list(rng.integers(0, 609, 12)) + [0, 1, 3, 30, 200]
    for j in sample:
        c = table.classes[int(j)]
        want = CycInt(3, total[int(j)])
        assert ch.induced_from(ctx3, psi, c.rep, target="U") == want
        assert ch.induced_from(ctx3, lam, c.rep, target="U") == want

