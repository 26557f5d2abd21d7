"""The group of order q^12 in normal-form coordinates.

An element is the product x2(t2) x1(t1) x3(t3) x4(t4) x5(t5) x6(t6) with
t1, t3, t4 in F_{q^3} and t2, t5, t6 in F_q; the coordinate tuple
(t1, ..., t6) is a unique normal form.  Multiplication happens by collection
in the kernel (see _kernel_py).  This module adds the element wrapper, the
closed-form conjugation identities, and whole-group enumeration.
"""

from __future__ import annotations

from . import backend
from .errors import TooLarge
from .fields import Fq3Element, FqElement

DEFAULT_ENUMERATION_CAP = 3**12


class GroupElement:
    """Immutable group element; equality is coordinate equality."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx, coords):
        coords = tuple(int(c) for c in coords)
        assert len(coords) == 6
        self.ctx = ctx
        self.coords = coords

    @property
    def t1(self):
        return Fq3Element(self.ctx, self.coords[0])

    @property
    def t2(self):
        return FqElement(self.ctx, self.coords[1])

    @property
    def t3(self):
        return Fq3Element(self.ctx, self.coords[2])

    @property
    def t4(self):
        return Fq3Element(self.ctx, self.coords[3])

    @property
    def t5(self):
        return FqElement(self.ctx, self.coords[4])

    @property
    def t6(self):
        return FqElement(self.ctx, self.coords[5])

    def __mul__(self, other):
        return GroupElement(self.ctx, backend.get_kernel(self.ctx).mul(self.coords, other.coords))

    def inverse(self):
        return GroupElement(self.ctx, backend.get_kernel(self.ctx).inv(self.coords))

    def conjugate_by(self, u):
        """u * self * u^-1."""
        return GroupElement(self.ctx, backend.get_kernel(self.ctx).conj(u.coords, self.coords))

    def is_identity(self):
        return all(c == 0 for c in self.coords)

    def rank(self):
        return backend.get_kernel(self.ctx).rank(self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, GroupElement)
            and other.ctx is self.ctx
            and other.coords == self.coords
        )

    def __hash__(self):
        return hash((id(self.ctx), self.coords))

    def __repr__(self):
        return f"GroupElement{self.coords!r}"


def identity(ctx) -> GroupElement:
    return GroupElement(ctx, (0, 0, 0, 0, 0, 0))


def element(ctx, t1=0, t2=0, t3=0, t4=0, t5=0, t6=0) -> GroupElement:
    """Build an element from field elements (or ints / coefficient lists)."""
    return GroupElement(
        ctx,
        (
            ctx.fq3(t1).idx,
            ctx.fq(t2).idx,
            ctx.fq3(t3).idx,
            ctx.fq3(t4).idx,
            ctx.fq(t5).idx,
            ctx.fq(t6).idx,
        ),
    )


def root_factor(ctx, i, value) -> GroupElement:
    """The one-parameter factor x_i(value), i in 1..6."""
    if i not in (1, 2, 3, 4, 5, 6):
        raise ValueError(f"root subgroup index must be 1..6, got {i}")
    coords = [0] * 6
    if i in (1, 3, 4):
        coords[i - 1] = ctx.fq3(value).idx
    else:
        coords[i - 1] = ctx.fq(value).idx
    return GroupElement(ctx, coords)


def multiply(ctx, a: GroupElement, b: GroupElement) -> GroupElement:
    return GroupElement(ctx, backend.get_kernel(ctx).mul(a.coords, b.coords))


def inverse(ctx, a: GroupElement) -> GroupElement:
    return GroupElement(ctx, backend.get_kernel(ctx).inv(a.coords))


def commutator(ctx, a: GroupElement, b: GroupElement) -> GroupElement:
    """a^-1 b^-1 a b, computed through multiplication."""
    kern = backend.get_kernel(ctx)
    ai, bi = kern.inv(a.coords), kern.inv(b.coords)
    return GroupElement(ctx, kern.mul(kern.mul(kern.mul(ai, bi), a.coords), b.coords))


def conjugate(ctx, u: GroupElement, x: GroupElement) -> GroupElement:
    """u x u^-1 by plain multiplication (the reference path)."""
    return GroupElement(ctx, backend.get_kernel(ctx).conj(u.coords, x.coords))


# ---------------------------------------------------------------------------
# closed-form conjugation
#
# For a single root factor, u x_i(t) u^-1 has an explicit normal form in the
# coordinates of u.  A general x is conjugated factor by factor and the
# partial results multiplied back together; agreement with `conjugate` is the
# strongest cross-check on the collection rules.


def _sumq(ctx, terms):
    addq = ctx.addq
    acc = 0
    for t in terms:
        acc = addq[acc, t]
    return int(acc)


def _conj_factor_coords(ctx, u, i, t):
    r1, r2, r3, r4, r5, r6 = u
    mul3, add3, neg3 = ctx.mul3, ctx.add3, ctx.neg3
    mulq, negq = ctx.mulq, ctx.negq
    frob, frob2 = ctx.frob, ctx.frob2
    phi0q, powq1, powq2q = ctx.phi0q, ctx.powq1, ctx.powq2q
    emb, nrm, psi = ctx.embq, ctx.norm_fq, ctx.psi
    two = ctx.fq_int_index(2)

    if i == 6:
        return (0, 0, 0, 0, 0, t)
    if i == 5:
        return (0, 0, 0, 0, t, mulq[r2, t])
    if i == 4:
        w = mul3[r1, frob[t]]
        c6 = _sumq(ctx, (phi0q[mul3[w, emb[r2]]], phi0q[mul3[r3, frob[t]]]))
        return (0, 0, 0, t, phi0q[w], c6)
    if i == 3:
        w = mul3[powq2q[r1], t]
        c6 = _sumq(
            ctx,
            (
                phi0q[mul3[w, emb[r2]]],
                phi0q[neg3[mul3[r1, powq2q[t]]]],
                phi0q[neg3[mul3[t, frob[r4]]]],
            ),
        )
        return (0, 0, t, psi[r1, t], phi0q[w], c6)
    if i == 2:
        et = emb[t]
        n1 = nrm[r1]
        c6 = _sumq(
            ctx,
            (
                negq[mulq[t, r5]],
                negq[mulq[mulq[t, t], n1]],
                negq[mulq[mulq[t, n1], r2]],
            ),
        )
        return (
            0,
            t,
            neg3[mul3[r1, et]],
            neg3[mul3[et, powq1[r1]]],
            negq[mulq[t, n1]],
            c6,
        )
    if i == 1:
        er2 = emb[r2]
        mpsi31 = neg3[psi[r3, t]]  # -(r3 t^q + r3^q t)
        c4 = neg3[add3[mul3[er2, powq1[t]], psi[t, r3]]]
        c5 = _sumq(
            ctx,
            (
                mulq[r2, nrm[t]],
                phi0q[mul3[frob2[r1], mpsi31]],
                phi0q[mul3[frob2[r3], powq1[t]]],
                phi0q[neg3[mul3[t, frob[r4]]]],
            ),
        )
        c6 = _sumq(
            ctx,
            (
                mulq[two, mulq[mulq[r2, r2], nrm[t]]],
                phi0q[mul3[mul3[frob2[r1], er2], mpsi31]],
                phi0q[mul3[mul3[er2, frob2[r3]], powq1[t]]],
                phi0q[neg3[mul3[mul3[er2, frob[r4]], t]]],
                phi0q[neg3[mul3[t, powq2q[r3]]]],
            ),
        )
        return (t, 0, mul3[er2, t], c4, c5, c6)
    raise ValueError(i)


def conjugate_closed(ctx, u: GroupElement, x: GroupElement) -> GroupElement:
    """u x u^-1 from the closed conjugation identities, factor by factor."""
    kern = backend.get_kernel(ctx)
    uc = u.coords
    out = (0, 0, 0, 0, 0, 0)
    # factors of x in normal order: x2 x1 x3 x4 x5 x6
    for i, pos in ((2, 1), (1, 0), (3, 2), (4, 3), (5, 4), (6, 5)):
        t = x.coords[pos]
        if t:
            out = kern.mul(out, _conj_factor_coords(ctx, uc, i, t))
    return GroupElement(ctx, out)


# single-shot closed forms for the product shapes the conjugation identities
# also cover; used as an extra cross-check on collection


def conjugate_closed_x3x5(ctx, u: GroupElement, t3, t5) -> GroupElement:
    r1, r2, r3, r4, r5, r6 = u.coords
    t3, t5 = ctx.fq3(t3).idx, ctx.fq(t5).idx
    mul3, neg3, mulq = ctx.mul3, ctx.neg3, ctx.mulq
    phi0q, powq2q, emb = ctx.phi0q, ctx.powq2q, ctx.embq
    w = mul3[powq2q[r1], t3]
    c5 = _sumq(ctx, (t5, phi0q[w]))
    c6 = _sumq(
        ctx,
        (
            mulq[r2, t5],
            phi0q[mul3[w, emb[r2]]],
            phi0q[neg3[mul3[r1, powq2q[t3]]]],
            phi0q[neg3[mul3[t3, ctx.frob[r4]]]],
        ),
    )
    return GroupElement(ctx, (0, 0, t3, ctx.psi[r1, t3], c5, c6))


def conjugate_closed_x2x4x5(ctx, u: GroupElement, t2, t4, t5) -> GroupElement:
    r1, r2, r3, r4, r5, r6 = u.coords
    t2, t4, t5 = ctx.fq(t2).idx, ctx.fq3(t4).idx, ctx.fq(t5).idx
    mul3, add3, neg3 = ctx.mul3, ctx.add3, ctx.neg3
    mulq, negq = ctx.mulq, ctx.negq
    phi0q, frob, emb, nrm = ctx.phi0q, ctx.frob, ctx.embq, ctx.norm_fq
    et = emb[t2]
    n1 = nrm[r1]
    w = mul3[r1, frob[t4]]
    c4 = add3[t4, neg3[mul3[et, ctx.powq1[r1]]]]
    c5 = _sumq(ctx, (t5, negq[mulq[t2, n1]], phi0q[w]))
    c6 = _sumq(
        ctx,
        (
            negq[mulq[t2, r5]],
            negq[mulq[mulq[t2, t2], n1]],
            negq[mulq[mulq[t2, n1], r2]],
            phi0q[mul3[w, emb[r2]]],
            phi0q[mul3[r3, frob[t4]]],
            mulq[r2, t5],
        ),
    )
    return GroupElement(ctx, (0, t2, neg3[mul3[r1, et]], c4, c5, c6))


def conjugate_closed_x1x3(ctx, u: GroupElement, t1, t3bar) -> GroupElement:
    r1, r2, r3, r4, r5, r6 = u.coords
    t1, tb = ctx.fq3(t1).idx, ctx.fq3(t3bar).idx
    mul3, add3, neg3 = ctx.mul3, ctx.add3, ctx.neg3
    mulq = ctx.mulq
    phi0q, frob, frob2 = ctx.phi0q, ctx.frob, ctx.frob2
    powq1, powq2q, emb, nrm, psi = ctx.powq1, ctx.powq2q, ctx.embq, ctx.norm_fq, ctx.psi
    two = ctx.fq_int_index(2)
    er2 = emb[r2]
    mpsi31 = neg3[psi[r3, t1]]
    c3 = add3[mul3[er2, t1], tb]
    c4 = add3[neg3[add3[mul3[er2, powq1[t1]], psi[t1, r3]]], psi[r1, tb]]
    c5 = _sumq(
        ctx,
        (
            mulq[r2, nrm[t1]],
            phi0q[mul3[frob2[r1], mpsi31]],
            phi0q[mul3[frob2[r3], powq1[t1]]],
            phi0q[neg3[mul3[t1, frob[r4]]]],
            phi0q[mul3[powq2q[r1], tb]],
        ),
    )
    c6 = _sumq(
        ctx,
        (
            mulq[two, mulq[mulq[r2, r2], nrm[t1]]],
            phi0q[mul3[mul3[frob2[r1], er2], mpsi31]],
            phi0q[mul3[mul3[er2, frob2[r3]], powq1[t1]]],
            phi0q[neg3[mul3[mul3[er2, frob[r4]], t1]]],
            phi0q[neg3[mul3[t1, powq2q[r3]]]],
            phi0q[mul3[mul3[powq2q[r1], er2], tb]],
            phi0q[neg3[mul3[r1, powq2q[tb]]]],
            phi0q[neg3[mul3[tb, frob[r4]]]],
            phi0q[mul3[frob2[tb], add3[mul3[er2, powq1[t1]], psi[t1, r3]]]],
        ),
    )
    return GroupElement(ctx, (t1, 0, c3, c4, c5, c6))


def conjugate_closed_x2x1(ctx, u: GroupElement, t2, t1) -> GroupElement:
    r1, r2, r3, r4, r5, r6 = u.coords
    t2, t1 = ctx.fq(t2).idx, ctx.fq3(t1).idx
    mul3, add3, neg3 = ctx.mul3, ctx.add3, ctx.neg3
    mulq, negq = ctx.mulq, ctx.negq
    phi0q, frob, frob2 = ctx.phi0q, ctx.frob, ctx.frob2
    powq1, powq2q, emb, nrm, psi = ctx.powq1, ctx.powq2q, ctx.embq, ctx.norm_fq, ctx.psi
    two = ctx.fq_int_index(2)
    er2, et2 = emb[r2], emb[t2]
    e2 = emb[two]
    n1 = nrm[r1]
    mpsi31 = neg3[psi[r3, t1]]
    c3 = add3[mul3[er2, t1], neg3[mul3[r1, et2]]]
    c4 = add3[
        add3[
            neg3[add3[mul3[er2, powq1[t1]], psi[t1, r3]]],
            neg3[mul3[et2, powq1[r1]]],
        ],
        mul3[et2, psi[t1, r1]],
    ]
    c5 = _sumq(
        ctx,
        (
            mulq[r2, nrm[t1]],
            phi0q[mul3[frob2[r1], mpsi31]],
            phi0q[mul3[frob2[r3], powq1[t1]]],
            phi0q[neg3[mul3[t1, frob[r4]]]],
            negq[mulq[t2, n1]],
            phi0q[neg3[mul3[mul3[r1, powq2q[t1]], et2]]],
            phi0q[mul3[mul3[frob2[t1], et2], powq1[r1]]],
        ),
    )
    c6 = _sumq(
        ctx,
        (
            mulq[two, mulq[mulq[r2, r2], nrm[t1]]],
            phi0q[mul3[mul3[frob2[r1], er2], mpsi31]],
            phi0q[mul3[mul3[er2, frob2[r3]], powq1[t1]]],
            phi0q[neg3[mul3[mul3[er2, frob[r4]], t1]]],
            phi0q[neg3[mul3[t1, powq2q[r3]]]],
            negq[mulq[t2, r5]],
            negq[mulq[mulq[t2, t2], n1]],
            negq[mulq[mulq[t2, n1], r2]],
            phi0q[neg3[mul3[mul3[e2, mul3[r1, er2]], mul3[powq2q[t1], et2]]]],
            phi0q[mul3[mul3[mul3[frob2[t1], et2], powq1[r1]], er2]],
            phi0q[mul3[mul3[powq2q[r1], t1], mul3[et2, et2]]],
        ),
    )
    return GroupElement(ctx, (t1, t2, c3, c4, c5, c6))


# ---------------------------------------------------------------------------
# enumeration


def order(ctx):
    # coordinates t1, t3, t4 range over F_{q^3}; t2, t5, t6 over F_q
    return ctx.q3**3 * ctx.q**3


def enumerate_all(ctx, cap=DEFAULT_ENUMERATION_CAP):
    """Every element exactly once, in coordinate-lexicographic order."""
    n = order(ctx)
    if n > cap:
        raise TooLarge(f"group order {n} exceeds the enumeration cap {cap}")
    kern = backend.get_kernel(ctx)
    return (GroupElement(ctx, kern.unrank(r)) for r in range(n))


def generators(ctx):
    """One root factor per Z/p-basis vector of each coordinate field."""
    basis_q = [ctx.fq_at(pw) for pw in ctx._pow_k]
    # F_{q^3} basis over Z/p: x^j y^i for j < k, i < 3
    basis_q3 = []
    for i in range(3):
        for pw in ctx._pow_k:
            digits = [0, 0, 0]
            digits[i] = pw
            basis_q3.append(ctx.fq3_at(ctx.fq3_index(digits)))
    gens = []
    for i in (1, 2, 3, 4, 5, 6):
        values = basis_q3 if i in (1, 3, 4) else basis_q
        gens.extend(root_factor(ctx, i, v) for v in values)
    return gens
