"""Irreducible characters: labels, closed-form values, subgroup tables, and
the literal-induction oracle.

Every irreducible character belongs to one of five families, distinguished by
the deepest root subgroup acting nontrivially.  Parameters are "dual"
coordinates: the label entry d_i pairs against the element coordinate t_i
through the fixed additive character (theta for F_q slots, theta o pi_q for
F_{q^3} slots).

  family  params                count            degree
  lin     (d1, d2)              q^4              1
  x3      (d3*, d1bar)          q^2 (q^3 - 1)    q       d1bar in T^{d3}
  x4      (d4*, d2)             q   (q^3 - 1)    q^3
  x5      (d5*, d2, d3)         q^4 (q - 1)      q^3
  x6      (d6*, d1)             q^3 (q - 1)      q^4

Closed-form values are table gathers plus short root-of-unity sums (at most
q^3 terms); `induced_value_oracle` recomputes every value from the defining
lift/induction construction and is the independent check on all of them.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import backend, group
from .conjugacy import ConjClass, census
from .cyclotomic import CycInt
from .errors import NotInSubgroup, TooLarge, UnknownClass
from .group import GroupElement

CHAR_FAMILY_ORDER = ("lin", "x3", "x4", "x5", "x6")

DEGREE_EXP = {"lin": 0, "x3": 1, "x4": 3, "x5": 3, "x6": 4}


def family_label_count(tag, q):
    return {
        "lin": q**4,
        "x3": q**2 * (q**3 - 1),
        "x4": q * (q**3 - 1),
        "x5": q**4 * (q - 1),
        "x6": q**3 * (q - 1),
    }[tag]


def irr_count(q):
    return 2 * q**5 + 2 * q**4 - q**3 - q**2 - q


def irr_count_by_degree(q):
    """{degree exponent c: number of irreducibles of degree q^c}."""
    return {
        0: q**4,
        1: q**5 - q**2,
        3: q**5 - q,
        4: q**4 - q**3,
    }


def irr_count_by_degree_qminus1(q):
    """The same counts as polynomials in (q-1), non-negative coefficients."""
    w = q - 1
    return {
        0: w**4 + 4 * w**3 + 6 * w**2 + 4 * w + 1,
        1: w**5 + 5 * w**4 + 10 * w**3 + 9 * w**2 + 3 * w,
        3: w**5 + 5 * w**4 + 10 * w**3 + 10 * w**2 + 4 * w,
        4: w**4 + 3 * w**3 + 3 * w**2 + w,
    }


@dataclass(frozen=True)
class CharLabel:
    family: str
    params: tuple
    index: int

    def degree(self, q):
        return q ** DEGREE_EXP[self.family]

    def __repr__(self):
        return f"CharLabel({self.index}: {self.family}{self.params})"


def list_irreducibles(ctx):
    """All labels: family order lin, x3, x4, x5, x6; parameters lexicographic."""
    q, q3 = ctx.q, ctx.q3
    labels = []

    def emit(family, params):
        labels.append(CharLabel(family, params, len(labels)))

    for d1 in range(q3):
        for d2 in range(q):
            emit("lin", (d1, d2))
    arange = np.arange(q3)
    for d3 in range(1, q3):
        for d1bar in np.flatnonzero(ctx.dec_rep[d3] == arange):
            emit("x3", (d3, int(d1bar)))
    for d4 in range(1, q3):
        for d2 in range(q):
            emit("x4", (d4, d2))
    for d5 in range(1, q):
        for d2 in range(q):
            for d3 in range(q3):
                emit("x5", (d5, d2, d3))
    for d6 in range(1, q):
        for d1 in range(q3):
            emit("x6", (d6, d1))
    assert len(labels) == irr_count(q)
    return labels


# ---------------------------------------------------------------------------
# closed-form values
#
# Each helper returns the canonical (n, p) integer coordinate block of the
# values of one label on one class family, vectorised over the family's
# classes.  Root-of-unity sums are accumulated as exponent counts.


def _const_block(ctx, n, value):
    out = np.zeros((n, ctx.p), dtype=np.int64)
    out[:, 0] = value
    return out


def _roots_block(ctx, exps, scale=1):
    """scale * zeta^exps as canonical coordinate rows."""
    exps = np.asarray(exps)
    out = np.zeros((exps.shape[0], ctx.p), dtype=np.int64)
    out[np.arange(exps.shape[0]), exps] = scale
    return _canonicalise(out)


def _sum_roots_block(ctx, exps, scale=1):
    """Row sums of zeta^exps over the last axis, canonical coordinates."""
    p = ctx.p
    n = exps.shape[0]
    flat = (np.arange(n, dtype=np.int64)[:, None] * p + exps).ravel()
    out = np.bincount(flat, minlength=n * p).reshape(n, p).astype(np.int64)
    if scale != 1:
        out *= scale
    return _canonicalise(out)


def _canonicalise(block):
    return block - block[:, -1:]


def char_block_values(ctx, label, class_tag, cols):
    """Values of one label on all classes of one family.

    `cols` maps 't1'..'t6' to the representatives' coordinate columns.
    Returns the (n, p) canonical coordinate block.
    """
    q, q3, p = ctx.q, ctx.q3, ctx.p
    mul3, add3, neg3 = ctx.mul3, ctx.add3, ctx.neg3
    mulq, addq, negq = ctx.mulq, ctx.addq, ctx.negq
    trpi, thq = ctx.trpi, ctx.theta_exp
    n = len(cols["t1"])
    fam = label.family

    if fam == "lin":
        d1, d2 = label.params
        exps = (trpi[mul3[d1, cols["t1"]]] + thq[mulq[d2, cols["t2"]]]) % p
        return _roots_block(ctx, exps)

    if fam == "x3":
        d3, d1bar = label.params
        deg = q
        if class_tag in ("id", "x6", "x5", "x4"):
            return _const_block(ctx, n, deg)
        if class_tag == "x3x5":
            return _roots_block(ctx, trpi[mul3[neg3[d3], cols["t3"]]], scale=deg)
        if class_tag in ("x1x6", "x1x3"):
            r2 = np.arange(q)
            shift = add3[d1bar, neg3[mul3[d3, ctx.embq[r2]]]]  # (q,)
            args = mul3[shift[None, :], cols["t1"][:, None]]  # (n, q)
            if class_tag == "x1x3":
                extra = mul3[neg3[d3], cols["t3"]]
                args = add3[args, extra[:, None]]
            return _sum_roots_block(ctx, trpi[args])
        return _const_block(ctx, n, 0)  # x2x4x5, x1x2

    if fam == "x4":
        d4, d2 = label.params
        deg = q**3
        if class_tag in ("id", "x5", "x6"):
            return _const_block(ctx, n, deg)
        if class_tag == "x4":
            t4 = cols["t4"]
            arg = add3[mul3[ctx.frob[d4], t4], mul3[d4, ctx.frob2[t4]]]
            return _roots_block(ctx, trpi[arg], scale=deg)
        if class_tag == "x2x4x5":
            t2, t4 = cols["t2"], cols["t4"]
            r1 = np.arange(q3)
            e2 = ctx.embq[t2]
            a = add3[t4[:, None], neg3[mul3[e2[:, None], ctx.powq1[r1][None, :]]]]
            b = add3[
                ctx.frob2[t4][:, None],
                neg3[mul3[e2[:, None], ctx.powq21[r1][None, :]]],
            ]
            args = add3[mul3[ctx.frob[d4], a], mul3[d4, b]]
            exps = (trpi[args] + thq[mulq[d2, t2]][:, None]) % p
            return _sum_roots_block(ctx, exps)
        return _const_block(ctx, n, 0)  # x1x6, x1x3, x1x2, x3x5

    if fam == "x5":
        d5, d2, d3 = label.params
        deg = q**3
        if class_tag in ("id", "x6"):
            return _const_block(ctx, n, deg)
        if class_tag == "x5":
            return _roots_block(ctx, thq[mulq[d5, cols["t5"]]], scale=deg)
        if class_tag == "x3x5":
            t3, t5 = cols["t3"], cols["t5"]
            r1 = np.arange(q3)
            base = add3[
                mul3[neg3[d3], t3][:, None],
                ctx.embq[mulq[d5, t5]][:, None],
            ]
            twist = ctx.embq[mulq[d5, ctx.phi0q[mul3[t3[:, None], ctx.powq2q[r1][None, :]]]]]
            return _sum_roots_block(ctx, trpi[add3[base, twist]])
        if class_tag == "x2x4x5":
            t2, t4, t5 = cols["t2"], cols["t4"], cols["t5"]
            r1 = np.arange(q3)
            e2 = ctx.embq[t2]
            lin = mul3[mul3[d3, r1][None, :], e2[:, None]]
            inner = addq[
                ctx.phi0q[mul3[r1[None, :], ctx.frob[t4][:, None]]],
                negq[mulq[t2[:, None], ctx.norm_fq[r1][None, :]]],
            ]
            base = ctx.embq[
                addq[addq[mulq[d2, t2], mulq[d5, t5]][:, None], mulq[d5, inner]]
            ]
            return _sum_roots_block(ctx, trpi[add3[lin, base]])
        return _const_block(ctx, n, 0)  # x4, x1x6, x1x3, x1x2

    if fam == "x6":
        d6, d1 = label.params
        deg = q**4
        if class_tag == "id":
            return _const_block(ctx, n, deg)
        if class_tag == "x6":
            return _roots_block(ctx, thq[mulq[d6, cols["t6"]]], scale=deg)
        if class_tag == "x1x6":
            t1, t6 = cols["t1"], cols["t6"]
            r3 = np.arange(q3)
            inner = ctx.phi0q[neg3[mul3[t1[:, None], ctx.powq2q[r3][None, :]]]]
            base = ctx.embq[addq[mulq[d6, t6][:, None], mulq[d6, inner]]]
            args = add3[mul3[d1, t1][:, None], base]
            return _sum_roots_block(ctx, trpi[args])
        return _const_block(ctx, n, 0)

    raise ValueError(fam)


def char_value(ctx, chi: CharLabel, c: ConjClass) -> CycInt:
    """Exact value of one irreducible character on one census class."""
    cen = census(ctx)
    if cen.index_of_coords(c.rep.coords) != c.index:
        raise UnknownClass(f"{c!r} is not a canonical census class")
    cols = {f"t{i+1}": np.array([c.rep.coords[i]]) for i in range(6)}
    block = char_block_values(ctx, chi, c.family, cols)
    return CycInt(ctx.p, block[0])


def char_value_at(ctx, chi: CharLabel, x: GroupElement) -> CycInt:
    """char_value after classifying x; constant on conjugacy classes."""
    from .conjugacy import class_of

    return char_value(ctx, chi, class_of(ctx, x))


# ---------------------------------------------------------------------------
# the dense table


class CharacterTable:
    """All values of all irreducibles on all classes, exact, materialised once.

    values[i, j] are the canonical p coordinates of character i on class j.
    """

    def __init__(self, ctx, labels, classes, values):
        self.ctx = ctx
        self.labels = labels
        self.classes = classes
        self.values = values

    @property
    def p(self):
        return self.ctx.p

    def value(self, i, j) -> CycInt:
        return CycInt(self.ctx.p, self.values[i, j])

    def class_sizes(self):
        return np.array([c.size for c in self.classes], dtype=np.int64)

    def degrees(self):
        q = self.ctx.q
        return np.array([chi.degree(q) for chi in self.labels], dtype=np.int64)


def character_row(ctx, label, cen=None):
    """The (nclasses, p) canonical value row of one label."""
    cen = cen or census(ctx)
    n = len(cen.classes)
    row = np.zeros((n, ctx.p), dtype=np.int64)
    for tag, sl in cen.family_slices.items():
        cols = cen.family_param_arrays(tag)
        row[sl] = char_block_values(ctx, label, tag, cols)
    return row


def build_table(ctx, labels=None, workers=None) -> CharacterTable:
    """Materialise the full table (q = 3 scale: 609 x 609 cells)."""
    cen = census(ctx)
    labels = labels if labels is not None else list_irreducibles(ctx)
    values = np.zeros((len(labels), len(cen.classes), ctx.p), dtype=np.int64)
    workers = workers or backend.worker_count()

    def fill(i):
        values[i] = character_row(ctx, labels[i], cen)

    if workers > 1 and len(labels) > 64:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(fill, range(len(labels))))
    else:
        for i in range(len(labels)):
            fill(i)
    return CharacterTable(ctx, labels, list(cen.classes), values)


# ---------------------------------------------------------------------------
# subgroup characters
#
# The three standard subgroups are named by their root support:
#   x4x5x6 (abelian, normal), x1x4x5x6, x2x3x4x5x6 (normal).


SUBGROUPS = ("x4x5x6", "x1x4x5x6", "x2x3x4x5x6")

_SUBGROUP_ZERO_COORDS = {
    "x4x5x6": (0, 1, 2),
    "x1x4x5x6": (1, 2),
    "x2x3x4x5x6": (0,),
}


def subgroup_order(ctx, subgroup):
    q, q3 = ctx.q, ctx.q3
    return {
        "x4x5x6": q3 * q * q,
        "x1x4x5x6": q3 * q3 * q * q,
        "x2x3x4x5x6": q * q3 * q3 * q * q,
    }[subgroup]


@dataclass(frozen=True)
class SubgroupCharLabel:
    subgroup: str
    kind: str  # "linear" or "induced"
    params: tuple

    def __post_init__(self):
        if self.subgroup not in SUBGROUPS:
            raise ValueError(f"unknown subgroup {self.subgroup!r}")
        if self.kind not in ("linear", "induced"):
            raise ValueError(f"unknown kind {self.kind!r}")


def n_linear(ctx, d6, d5, d4) -> SubgroupCharLabel:
    return SubgroupCharLabel("x4x5x6", "linear", (int(d6), int(d5), int(d4)))


def h_linear(ctx, d6, d4, d1) -> SubgroupCharLabel:
    return SubgroupCharLabel("x1x4x5x6", "linear", (int(d6), int(d4), int(d1)))


def h_induced(ctx, d6, d5) -> SubgroupCharLabel:
    assert d5 != 0
    return SubgroupCharLabel("x1x4x5x6", "induced", (int(d6), int(d5)))


def t_linear(ctx, d5, d4, d3, d2) -> SubgroupCharLabel:
    return SubgroupCharLabel("x2x3x4x5x6", "linear", (int(d5), int(d4), int(d3), int(d2)))


def t_induced(ctx, d6) -> SubgroupCharLabel:
    assert d6 != 0
    return SubgroupCharLabel("x2x3x4x5x6", "induced", (int(d6),))


def _require_membership(lam, x):
    for pos in _SUBGROUP_ZERO_COORDS[lam.subgroup]:
        if x.coords[pos]:
            raise NotInSubgroup(f"{x!r} is not in {lam.subgroup}")


def _pairing_exp(ctx, d4, t4):
    # exponent of the self-dual pairing on the t4 slot: d4^q t4 + d4 t4^{q^2}
    return ctx.trpi[ctx.add3[ctx.mul3[ctx.frob[d4], t4], ctx.mul3[d4, ctx.frob2[t4]]]]


def subgroup_char_value(ctx, lam: SubgroupCharLabel, x: GroupElement) -> CycInt:
    """Value of a subgroup character at an element of that subgroup."""
    _require_membership(lam, x)
    p, q = ctx.p, ctx.q
    t1, t2, t3, t4, t5, t6 = x.coords
    thq, trpi = ctx.theta_exp, ctx.trpi
    mulq, mul3, neg3 = ctx.mulq, ctx.mul3, ctx.neg3

    if lam.subgroup == "x4x5x6":
        d6, d5, d4 = lam.params
        e = (thq[mulq[d6, t6]] + thq[mulq[d5, t5]] + _pairing_exp(ctx, d4, t4)) % p
        return CycInt.root(p, e)

    if lam.subgroup == "x1x4x5x6":
        if lam.kind == "linear":
            d6, d4, d1 = lam.params
            e = (thq[mulq[d6, t6]] + _pairing_exp(ctx, d4, t4) + trpi[mul3[d1, t1]]) % p
            return CycInt.root(p, e)
        d6, d5 = lam.params
        if t1 or t4:
            return CycInt.zero(p)
        e = (thq[mulq[d6, t6]] + thq[mulq[d5, t5]]) % p
        return CycInt.root(p, e) * q**3

    if lam.kind == "linear":
        d5, d4, d3, d2 = lam.params
        e = (
            thq[mulq[d2, t2]]
            + trpi[mul3[neg3[d3], t3]]
            + _pairing_exp(ctx, d4, t4)
            + thq[mulq[d5, t5]]
        ) % p
        return CycInt.root(p, e)
    (d6,) = lam.params
    if t2 or t3 or t4 or t5:
        return CycInt.zero(p)
    return CycInt.root(p, thq[mulq[d6, t6]]) * q**4


# ---------------------------------------------------------------------------
# literal induction


def _section_elements(ctx, subgroup, target="U"):
    """Right-coset representatives of `subgroup` in `target` (normal-form
    sections along the complementary coordinates)."""
    q, q3 = ctx.q, ctx.q3
    if target == "U":
        free = {
            "x4x5x6": ((0, q3), (1, q), (2, q3)),
            "x1x4x5x6": ((1, q), (2, q3)),
            "x2x3x4x5x6": ((0, q3),),
        }[subgroup]
    elif target == "x1x4x5x6":
        assert subgroup == "x4x5x6"
        free = ((0, q3),)
    elif target == "x2x3x4x5x6":
        assert subgroup == "x4x5x6"
        free = ((1, q), (2, q3))
    else:
        raise ValueError(target)
    reps = [(0, 0, 0, 0, 0, 0)]
    for pos, n in free:
        reps = [r[:pos] + (v,) + r[pos + 1 :] for r in reps for v in range(n)]
    return reps


def induced_from(ctx, lam: SubgroupCharLabel, x: GroupElement, target="U") -> CycInt:
    """Induction of a subgroup character, evaluated by its defining sum."""
    kern = backend.get_kernel(ctx)
    zero_coords = _SUBGROUP_ZERO_COORDS[lam.subgroup]
    total = CycInt.zero(ctx.p)
    for g in _section_elements(ctx, lam.subgroup, target):
        y = kern.conj(g, x.coords)
        if any(y[pos] for pos in zero_coords):
            continue
        total = total + subgroup_char_value(ctx, lam, GroupElement(ctx, y))
    return total


# oracle: evaluate the five families by their defining constructions


def induced_value_oracle(ctx, chi: CharLabel, x: GroupElement, cap=None) -> CycInt:
    """Character value from the literal lift/induction construction.

    Independent of the closed forms in `char_block_values`: conjugation runs
    through collection, quotients through coordinate truncation, inductions
    as explicit sums over coset representatives.
    """
    cap = cap if cap is not None else group.DEFAULT_ENUMERATION_CAP
    if group.order(ctx) > cap:
        raise TooLarge("oracle evaluation beyond the configured cap")
    p, q, q3 = ctx.p, ctx.q, ctx.q3
    kern = backend.get_kernel(ctx)
    thq, trpi = ctx.theta_exp, ctx.trpi
    mulq, mul3, add3, neg3 = ctx.mulq, ctx.mul3, ctx.add3, ctx.neg3
    fam = chi.family

    if fam == "lin":
        d1, d2 = chi.params
        e = (trpi[mul3[d1, x.coords[0]]] + thq[mulq[d2, x.coords[1]]]) % p
        return CycInt.root(p, e)

    counts = [0] * p
    if fam == "x3":
        # lift from the quotient by x4x5x6, induced from its x1x3 part
        d3, d1bar = chi.params
        if x.coords[1]:
            return CycInt.zero(p)
        for s2 in range(q):
            y = kern.conj((0, s2, 0, 0, 0, 0), x.coords)
            e = trpi[add3[mul3[d1bar, y[0]], mul3[neg3[d3], y[2]]]] % p
            counts[e] += 1
        return CycInt.from_counts(p, counts)

    if fam == "x4":
        # lift from the quotient by x5x6, induced over the t1 section
        d4, d2 = chi.params
        if x.coords[0]:
            return CycInt.zero(p)
        for r1 in range(q3):
            y = kern.conj((r1, 0, 0, 0, 0, 0), x.coords)
            e = (thq[mulq[d2, y[1]]] + _pairing_exp(ctx, d4, y[3])) % p
            counts[e] += 1
        return CycInt.from_counts(p, counts)

    if fam == "x5":
        # lift from the quotient by x6, induced over the t1 section
        d5, d2, d3 = chi.params
        if x.coords[0]:
            return CycInt.zero(p)
        for r1 in range(q3):
            y = kern.conj((r1, 0, 0, 0, 0, 0), x.coords)
            e = (
                thq[mulq[d2, y[1]]]
                + trpi[mul3[neg3[d3], y[2]]]
                + thq[mulq[d5, y[4]]]
            ) % p
            counts[e] += 1
        return CycInt.from_counts(p, counts)

    # x6 family: induced from x1x4x5x6 over the (t2, t3) section
    d6, d1 = chi.params
    for a in range(q):
        for c in range(q3):
            y = kern.conj(group.multiply(
                ctx, group.root_factor(ctx, 2, ctx.fq_at(a)), group.root_factor(ctx, 3, ctx.fq3_at(c))
            ).coords, x.coords)
            if y[1] or y[2]:
                continue
            e = (trpi[mul3[d1, y[0]]] + thq[mulq[d6, y[5]]]) % p
            counts[e] += 1
    return CycInt.from_counts(p, counts)


def oracle_grid(ctx, labels=None, classes=None, cap=None):
    """Oracle values for many (label, class) pairs at once.

    Conjugation sweeps are shared across labels of a family, so the full
    609 x 609 grid at q = 3 costs ~66k conjugations plus vectorised exponent
    sums.  Returns canonical (nlabels, nclasses, p) coordinates.
    """
    cap = cap if cap is not None else group.DEFAULT_ENUMERATION_CAP
    if group.order(ctx) > cap:
        raise TooLarge("oracle evaluation beyond the configured cap")
    p, q, q3 = ctx.p, ctx.q, ctx.q3
    kern = backend.get_kernel(ctx)
    cen = census(ctx)
    labels = labels if labels is not None else list_irreducibles(ctx)
    classes = classes if classes is not None else list(cen.classes)
    thq, trpi = ctx.theta_exp, ctx.trpi
    mulq, mul3, add3, neg3 = ctx.mulq, ctx.mul3, ctx.add3, ctx.neg3
    nc = len(classes)

    # shared conjugation sweeps, one per relevant section kind
    reps_x2 = [(0, s2, 0, 0, 0, 0) for s2 in range(q)]
    reps_x1 = [(r1, 0, 0, 0, 0, 0) for r1 in range(q3)]
    reps_x2x3 = [
        kern.mul((0, a, 0, 0, 0, 0), (0, 0, c, 0, 0, 0))
        for a in range(q)
        for c in range(q3)
    ]

    def sweep(section):
        cols = np.zeros((nc, len(section), 6), dtype=np.int64)
        for j, c in enumerate(classes):
            for i, g in enumerate(section):
                cols[j, i] = kern.conj(g, c.rep.coords)
        return cols

    sw_x2 = sweep(reps_x2)
    sw_x1 = sweep(reps_x1)
    sw_x23 = sweep(reps_x2x3)
    t2_of_class = np.array([c.rep.coords[1] for c in classes])
    t1_of_class = np.array([c.rep.coords[0] for c in classes])

    out = np.zeros((len(labels), nc, p), dtype=np.int64)
    for li, chi in enumerate(labels):
        fam = chi.family
        if fam == "lin":
            d1, d2 = chi.params
            t1 = np.array([c.rep.coords[0] for c in classes])
            t2 = np.array([c.rep.coords[1] for c in classes])
            exps = (trpi[mul3[d1, t1]] + thq[mulq[d2, t2]]) % p
            out[li, np.arange(nc), exps] = 1
            out[li] -= out[li, :, -1:]
            continue
        if fam == "x3":
            d3, d1bar = chi.params
            y = sw_x2
            exps = trpi[add3[mul3[d1bar, y[..., 0]], mul3[neg3[d3], y[..., 2]]]] % p
            mask = t2_of_class == 0
        elif fam == "x4":
            d4, d2 = chi.params
            y = sw_x1
            pair = trpi[
                add3[mul3[ctx.frob[d4], y[..., 3]], mul3[d4, ctx.frob2[y[..., 3]]]]
            ]
            exps = (thq[mulq[d2, y[..., 1]]] + pair) % p
            mask = t1_of_class == 0
        elif fam == "x5":
            d5, d2, d3 = chi.params
            y = sw_x1
            exps = (
                thq[mulq[d2, y[..., 1]]]
                + trpi[mul3[neg3[d3], y[..., 2]]]
                + thq[mulq[d5, y[..., 4]]]
            ) % p
            mask = t1_of_class == 0
        else:
            d6, d1 = chi.params
            y = sw_x23
            exps = (trpi[mul3[d1, y[..., 0]]] + thq[mulq[d6, y[..., 5]]]) % p
            keep = (y[..., 1] == 0) & (y[..., 2] == 0)
            exps = np.where(keep, exps, p)  # sentinel bucket for dropped reps
            flat = (np.arange(nc, dtype=np.int64)[:, None] * (p + 1) + exps).ravel()
            counts = np.bincount(flat, minlength=nc * (p + 1)).reshape(nc, p + 1)
            out[li] = counts[:, :p]
            out[li] -= out[li, :, -1:]
            continue
        flat = (np.arange(nc, dtype=np.int64)[:, None] * p + exps).ravel()
        out[li] = np.bincount(flat, minlength=nc * p).reshape(nc, p)
        out[li] *= mask[:, None]
        out[li] -= out[li, :, -1:]
    return out


# ---------------------------------------------------------------------------
# inertia


def inertia_order(ctx, lam: SubgroupCharLabel, within="U", cap=2_000_000) -> int:
    """|{u : lam^u = lam}| for a character of the abelian normal subgroup,
    computed by brute force over coset sections."""
    if lam.subgroup != "x4x5x6":
        raise ValueError("inertia is computed for characters of x4x5x6")
    q, q3 = ctx.q, ctx.q3
    target = {"U": "U", "T": "x2x3x4x5x6", "H": "x1x4x5x6"}.get(within, within)
    if target == "U":
        sections = [
            (r1, r2, r3, 0, 0, 0) for r1 in range(q3) for r2 in range(q) for r3 in range(q3)
        ]
    elif target == "x2x3x4x5x6":
        sections = [(0, r2, r3, 0, 0, 0) for r2 in range(q) for r3 in range(q3)]
    elif target == "x1x4x5x6":
        sections = [(r1, 0, 0, 0, 0, 0) for r1 in range(q3)]
    else:
        raise ValueError(within)
    if len(sections) > cap:
        raise TooLarge("inertia search beyond the configured cap")
    kern = backend.get_kernel(ctx)
    gens = [g.coords for g in group.generators(ctx) if not any(g.coords[:3])]
    fix = 0
    for s in sections:
        ok = True
        for n in gens:
            y = GroupElement(ctx, kern.conj(s, n))
            if subgroup_char_value(ctx, lam, y) != subgroup_char_value(
                ctx, lam, GroupElement(ctx, n)
            ):
                ok = False
                break
        if ok:
            fix += 1
    return fix * subgroup_order(ctx, "x4x5x6")
