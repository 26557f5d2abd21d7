"""Class census: canonical representatives, closed-form classification, and
the brute-force orbit oracle.

Every class representative has one of nine supports, and an arbitrary element
is classified by reading off which coordinates survive a canonical
conjugation.  The canonicalisers below are closed chains of field-table
gathers (no group multiplication), obtained by composing the conjugation
identities with solved-for conjugator coordinates; they accept ints and numpy
arrays alike, so the exhaustive sweep at q = 3 is a handful of vectorised
passes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend, group
from .errors import TooLarge
from .group import GroupElement

FAMILY_ORDER = ("id", "x6", "x5", "x4", "x3x5", "x2x4x5", "x1x6", "x1x3", "x1x2")

# class size as the exponent e in |class| = q^e
FAMILY_SIZE_EXP = {
    "id": 0,
    "x6": 0,
    "x5": 1,
    "x4": 2,
    "x3x5": 4,
    "x2x4x5": 4,
    "x1x6": 5,
    "x1x3": 6,
    "x1x2": 8,
}


def family_class_count(tag, q):
    """Number of classes contributed by one family, as a polynomial in q."""
    return {
        "id": 1,
        "x6": q - 1,
        "x5": q - 1,
        "x4": q**3 - 1,
        "x3x5": (q**3 - 1) * q,
        "x2x4x5": (q - 1) * q**4,
        "x1x6": (q**3 - 1) * q,
        "x1x3": (q**3 - 1) * (q**2 - 1),
        "x1x2": (q - 1) * (q**3 - 1),
    }[tag]


def class_count(q):
    """Total number of conjugacy classes."""
    return 2 * q**5 + 2 * q**4 - q**3 - q**2 - q


def class_count_qminus1(q):
    """The same count written as a polynomial in (q-1) with the known
    non-negative coefficients."""
    w = q - 1
    return 2 * w**5 + 12 * w**4 + 27 * w**3 + 28 * w**2 + 12 * w + 1


@dataclass(frozen=True)
class ConjClass:
    family: str
    rep: GroupElement
    size: int
    index: int

    def __repr__(self):
        return f"ConjClass({self.index}: {self.family}, rep={self.rep.coords}, size={self.size})"


# ---------------------------------------------------------------------------
# canonical representatives
#
# The chains below were derived by conjugating with one root factor at a time
# whose parameter solves a linear condition (zero a chosen coordinate), then
# composing the resulting coordinate formulas.  Coordinates that a later step
# would zero without side effects are simply never computed.


def _rep_x1x6(ctx, t1, t3, t4, t5, t6):
    """Representative (t1, 0, 0, 0, 0, t6') for elements with t1 != 0 and
    t3 inside the line t1*F_q."""
    mul3, add3, neg3 = ctx.mul3, ctx.add3, ctx.neg3
    mulq, addq, negq = ctx.mulq, ctx.addq, ctx.negq
    two = ctx.fq_int_index(2)
    s2 = ctx.dec_s[t1, t3]
    r2 = negq[s2]
    y4 = add3[neg3[mul3[ctx.embq[r2], ctx.powq1[t1]]], t4]
    y6 = addq[
        mulq[two, mulq[mulq[r2, r2], ctx.norm_fq[t1]]],
        addq[
            mulq[r2, ctx.phi0q[mul3[t3, ctx.powq2q[t1]]]],
            addq[mulq[r2, t5], t6],
        ],
    ]
    r3 = ctx.psi_inv[t1, y4]
    return addq[
        ctx.phi0q[neg3[mul3[t1, ctx.powq2q[r3]]]],
        addq[ctx.phi0q[mul3[r3, ctx.frob[y4]]], y6],
    ]


def _rep_x3x5(ctx, t3, t4, t5):
    """The t5 parameter of the representative (0, 0, t3, 0, t5', 0)."""
    r1 = ctx.psi_inv[t3, ctx.neg3[t4]]
    return ctx.addq[
        ctx.phi0q[ctx.mul3[ctx.powq2q[r1], t3]],
        ctx.addq[ctx.phi0q[ctx.mul3[r1, ctx.frob[t4]]], t5],
    ]


def _rep_x2x4x5(ctx, t2, t3, t4, t5):
    """The (t4', t5') parameters of the representative (0, t2, 0, t4', t5', 0)."""
    mul3, add3, neg3 = ctx.mul3, ctx.add3, ctx.neg3
    mulq, addq, negq = ctx.mulq, ctx.addq, ctx.negq
    r1 = mul3[t3, ctx.embq[ctx.invq[t2]]]
    y4 = add3[neg3[mul3[ctx.embq[t2], ctx.powq1[r1]]], add3[ctx.psi[t3, r1], t4]]
    y5 = addq[
        negq[mulq[t2, ctx.norm_fq[r1]]],
        addq[
            ctx.phi0q[mul3[ctx.powq2q[r1], t3]],
            addq[ctx.phi0q[mul3[r1, ctx.frob[t4]]], t5],
        ],
    ]
    return y4, y5


def family_of(ctx, x: GroupElement) -> str:
    t1, t2, t3, t4, t5, t6 = x.coords
    if t1:
        if t2:
            return "x1x2"
        return "x1x3" if ctx.dec_rep[t1, t3] else "x1x6"
    if t2:
        return "x2x4x5"
    if t3:
        return "x3x5"
    if t4:
        return "x4"
    if t5:
        return "x5"
    if t6:
        return "x6"
    return "id"


def rep_coords_of(ctx, coords):
    """Canonical representative coordinates of the class through `coords`."""
    t1, t2, t3, t4, t5, t6 = coords
    if t1:
        if t2:
            return (t1, t2, 0, 0, 0, 0)
        t3bar = int(ctx.dec_rep[t1, t3])
        if t3bar:
            return (t1, 0, t3bar, 0, 0, 0)
        return (t1, 0, 0, 0, 0, int(_rep_x1x6(ctx, t1, t3, t4, t5, t6)))
    if t2:
        y4, y5 = _rep_x2x4x5(ctx, t2, t3, t4, t5)
        return (0, t2, 0, int(y4), int(y5), 0)
    if t3:
        return (0, 0, t3, 0, int(_rep_x3x5(ctx, t3, t4, t5)), 0)
    if t4:
        return (0, 0, 0, t4, 0, 0)
    if t5:
        return (0, 0, 0, 0, t5, 0)
    return (0, 0, 0, 0, 0, t6)


# ---------------------------------------------------------------------------
# the census


class Census:
    """All conjugacy classes of one context, in canonical order."""

    def __init__(self, ctx):
        self.ctx = ctx
        q, q3 = ctx.q, ctx.q3
        classes = []
        by_rep = {}
        family_slices = {}

        def emit(family, coords):
            idx = len(classes)
            c = ConjClass(
                family,
                GroupElement(ctx, coords),
                q ** FAMILY_SIZE_EXP[family],
                idx,
            )
            classes.append(c)
            by_rep[coords] = idx

        def begin(tag):
            family_slices[tag] = len(classes)

        begin("id")
        emit("id", (0, 0, 0, 0, 0, 0))
        begin("x6")
        for t6 in range(1, q):
            emit("x6", (0, 0, 0, 0, 0, t6))
        begin("x5")
        for t5 in range(1, q):
            emit("x5", (0, 0, 0, 0, t5, 0))
        begin("x4")
        for t4 in range(1, q3):
            emit("x4", (0, 0, 0, t4, 0, 0))
        begin("x3x5")
        for t3 in range(1, q3):
            for t5 in range(q):
                emit("x3x5", (0, 0, t3, 0, t5, 0))
        begin("x2x4x5")
        for t2 in range(1, q):
            for t4 in range(q3):
                for t5 in range(q):
                    emit("x2x4x5", (0, t2, 0, t4, t5, 0))
        begin("x1x6")
        for t1 in range(1, q3):
            for t6 in range(q):
                emit("x1x6", (t1, 0, 0, 0, 0, t6))
        begin("x1x3")
        arange = np.arange(q3)
        for t1 in range(1, q3):
            reps = np.flatnonzero(ctx.dec_rep[t1] == arange)
            for t3 in reps:
                if t3:
                    emit("x1x3", (t1, 0, int(t3), 0, 0, 0))
        begin("x1x2")
        for t1 in range(1, q3):
            for t2 in range(1, q):
                emit("x1x2", (t1, t2, 0, 0, 0, 0))

        self.classes = classes
        self.by_rep = by_rep
        starts = [family_slices[tag] for tag in FAMILY_ORDER] + [len(classes)]
        self.family_slices = {
            tag: slice(starts[i], starts[i + 1]) for i, tag in enumerate(FAMILY_ORDER)
        }
        self._param_arrays = {}
        assert len(classes) == class_count(q)
        assert sum(c.size for c in classes) == group.order(ctx)

    def family_classes(self, tag):
        return self.classes[self.family_slices[tag]]

    def family_param_arrays(self, tag):
        """Coordinate columns of the representatives of one family (cached)."""
        cached = self._param_arrays.get(tag)
        if cached is None:
            cls = self.family_classes(tag)
            coords = np.array([c.rep.coords for c in cls], dtype=np.int64)
            cached = self._param_arrays[tag] = {
                f"t{i+1}": coords[:, i] for i in range(6)
            }
        return cached

    def index_of_coords(self, coords):
        return self.by_rep.get(tuple(int(c) for c in coords))


_census_cache = {}


def census(ctx) -> Census:
    c = _census_cache.get(id(ctx))
    if c is None:
        c = _census_cache[id(ctx)] = Census(ctx)
    return c


def list_classes(ctx):
    """All classes, family by family, parameters in field-lexicographic order."""
    return list(census(ctx).classes)


def class_of(ctx, x: GroupElement) -> ConjClass:
    """The unique class containing x."""
    cen = census(ctx)
    rep = rep_coords_of(ctx, x.coords)
    idx = cen.index_of_coords(rep)
    assert idx is not None, f"canonicaliser produced an unknown representative {rep}"
    return cen.classes[idx]


def centralizer_order(ctx, c: ConjClass) -> int:
    return group.order(ctx) // c.size


# ---------------------------------------------------------------------------
# whole-group sweeps


def _coordinate_columns(ctx, n):
    """Decode ranks 0..n-1 into six coordinate columns (vectorised unrank)."""
    q, q3 = ctx.q, ctx.q3
    r = np.arange(n, dtype=np.int64)
    r, t6 = np.divmod(r, q)
    r, t5 = np.divmod(r, q)
    r, t4 = np.divmod(r, q3)
    r, t3 = np.divmod(r, q3)
    t1, t2 = np.divmod(r, q)
    return t1, t2, t3, t4, t5, t6


def _ranks_from_columns(ctx, cols):
    q, q3 = ctx.q, ctx.q3
    t1, t2, t3, t4, t5, t6 = cols
    return ((((t1 * q + t2) * q3 + t3) * q3 + t4) * q + t5) * q + t6


def classify_all(ctx, cap=group.DEFAULT_ENUMERATION_CAP):
    """Class index of every element, in rank order (vectorised)."""
    n = group.order(ctx)
    if n > cap:
        raise TooLarge(f"group order {n} exceeds the cap {cap}")
    cen = census(ctx)
    q, q3 = ctx.q, ctx.q3
    t1, t2, t3, t4, t5, t6 = _coordinate_columns(ctx, n)
    z = np.zeros(n, dtype=np.int64)

    rep_cols = [t1.copy(), t2.copy(), z.copy(), z.copy(), z.copy(), z.copy()]
    dec = ctx.dec_rep[t1, t3]

    m = (t1 != 0) & (t2 == 0) & (dec != 0)  # x1x3
    rep_cols[2][m] = dec[m]

    m = (t1 != 0) & (t2 == 0) & (dec == 0)  # x1x6
    rep_cols[5][m] = _rep_x1x6(ctx, t1[m], t3[m], t4[m], t5[m], t6[m])

    m = (t1 == 0) & (t2 != 0)  # x2x4x5
    y4, y5 = _rep_x2x4x5(ctx, t2[m], t3[m], t4[m], t5[m])
    rep_cols[3][m] = y4
    rep_cols[4][m] = y5

    m = (t1 == 0) & (t2 == 0) & (t3 != 0)  # x3x5
    rep_cols[2][m] = t3[m]
    rep_cols[4][m] = _rep_x3x5(ctx, t3[m], t4[m], t5[m])

    m = (t1 == 0) & (t2 == 0) & (t3 == 0)  # x4 / x5 / x6 / id
    rep_cols[3][m] = t4[m]
    m &= t4 == 0
    rep_cols[4][m] = t5[m]
    m &= t5 == 0
    rep_cols[5][m] = t6[m]

    rep_ranks = _ranks_from_columns(ctx, rep_cols)

    lookup = np.full(n, -1, dtype=np.int32)
    for c in cen.classes:
        lookup[_ranks_from_columns(ctx, c.rep.coords)] = c.index
    out = lookup[rep_ranks]
    assert out.min() >= 0, "classification produced a non-census representative"
    return out


def brute_force_classes(ctx, cap=group.DEFAULT_ENUMERATION_CAP):
    """Orbit partition of the whole group under conjugation closure.

    Returns labels[r] = rank of the orbit's minimal element, for every rank r.
    Deterministic for any generator order since labels are orbit minima.
    """
    n = group.order(ctx)
    if n > cap:
        raise TooLarge(f"group order {n} exceeds the cap {cap}")
    gens = np.array([g.coords for g in group.generators(ctx)], dtype=np.intc)
    return backend.get_kernel(ctx).orbit_partition(gens)


def orbit_summary(labels):
    """(number of orbits, {size: count}) from an orbit label array."""
    _, counts = np.unique(labels, return_counts=True)
    sizes, mult = np.unique(counts, return_counts=True)
    return len(counts), dict(zip(sizes.tolist(), mult.tolist()))
