"""Verification suites: orthogonality, censuses, counting polynomials, and
agreement with the brute-force oracles.

Every check is an equality of integers (coordinates in Z[zeta_p]); there are
no tolerances.  Failing reports carry a reproducible counterexample.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import characters, conjugacy, group
from .backend import get_kernel
from .errors import TooLarge


@dataclass
class VerificationReport:
    name: str
    passed: bool
    details: str = ""
    counterexample: dict | None = None
    seconds: float = 0.0

    def __str__(self):
        status = "pass" if self.passed else "FAIL"
        extra = f" ({self.details})" if self.details else ""
        ce = f" counterexample={self.counterexample}" if self.counterexample else ""
        return f"[{status}] {self.name}{extra} [{self.seconds:.2f}s]{ce}"


def _weighted_gram(v1, w, v2, p):
    """G[i, j] = sum_C w_C * v1[i, C] * conj(v2[j, C]) in Z[zeta_p].

    v1, v2 are canonical coordinate arrays (n, m, p); the result is canonical
    (n1, n2, p).  Products run through float64 BLAS, which is exact as long as
    every partial sum stays below 2^53; the class axis is chunked so that a
    per-chunk magnitude bound certifies this, and chunk results are summed as
    Python integers when their combined bound would not fit int64.
    """
    n1, m, _ = v1.shape
    n2 = v2.shape[0]
    conj_idx = [(-t) % p for t in range(p)]
    v2c = v2[:, :, conj_idx]
    weighted = v1 * w[None, :, None]

    # per-class magnitude envelope of any coefficient of the products
    a_env = np.abs(weighted).max(axis=2).astype(np.float64)
    b_env = np.abs(v2c).max(axis=2).astype(np.float64)
    per_class = (a_env.max(axis=0) * b_env.max(axis=0)) * p

    budget = float(2**52)
    if per_class.max(initial=0.0) > budget:
        # products themselves overflow doubles: fall back to big integers
        g = np.zeros((n1, n2, p), dtype=object)
        wo = weighted.astype(object)
        vo = v2c.astype(object)
        for s in range(p):
            for t in range(p):
                g[:, :, (s + t) % p] += wo[:, :, s] @ vo[:, :, t].T
        return g - g[:, :, -1:]

    chunks = []
    start = 0
    acc = 0.0
    for c in range(m):
        if acc + per_class[c] > budget and c > start:
            chunks.append((start, c))
            start, acc = c, 0.0
        acc += per_class[c]
    chunks.append((start, m))

    use_object = len(chunks) * 2**52 >= 2**62
    g = np.zeros((n1, n2, p), dtype=object if use_object else np.int64)
    for lo, hi in chunks:
        a = weighted[:, lo:hi].astype(np.float64)
        b = v2c[:, lo:hi].astype(np.float64)
        part = np.zeros((n1, n2, p))
        for s in range(p):
            for t in range(p):
                part[:, :, (s + t) % p] += a[:, :, s] @ b[:, :, t].T
        part = np.rint(part).astype(np.int64)
        g += part.astype(object) if use_object else part
    return g - g[:, :, -1:]


def verify_row_orthogonality(ctx, table, sample=None) -> VerificationReport:
    """<chi, psi> = sum_C |C| chi(C) conj(psi(C)) = delta * |U|, exactly.

    `sample`: optional list of character indices; all pairs within the sample
    are checked (the class sum always runs over every class).
    """
    t0 = time.time()
    p = ctx.p
    rows = np.arange(len(table.labels)) if sample is None else np.asarray(sample)
    v = table.values[rows]
    w = table.class_sizes()
    g = _weighted_gram(v, w, v, p)
    n = len(rows)
    expected = np.zeros((n, n, p), dtype=g.dtype)
    expected[np.arange(n), np.arange(n), 0] = group.order(ctx)
    ok = np.array_equal(g, expected)
    ce = None
    if not ok:
        i, j = map(int, np.argwhere((g != expected).any(axis=2))[0])
        ce = {
            "chi": repr(table.labels[rows[i]]),
            "psi": repr(table.labels[rows[j]]),
            "got": [int(x) for x in g[i, j]],
            "expected": [int(x) for x in expected[i, j]],
        }
    return VerificationReport(
        "row-orthogonality",
        ok,
        f"{n} characters, {n * (n + 1) // 2} pairs"
        + ("" if sample is None else " (sampled)"),
        ce,
        time.time() - t0,
    )


def verify_column_orthogonality(ctx, table, sample=None) -> VerificationReport:
    """sum_chi chi(C) conj(chi(D)) = delta_CD |U| / |C|, exactly."""
    t0 = time.time()
    p = ctx.p
    cols = np.arange(len(table.classes)) if sample is None else np.asarray(sample)
    vt = table.values[:, cols].transpose(1, 0, 2).copy()
    ones = np.ones(len(table.labels), dtype=np.int64)
    g = _weighted_gram(vt, ones, vt, p)
    n = len(cols)
    expected = np.zeros((n, n, p), dtype=g.dtype)
    sizes = table.class_sizes()[cols]
    expected[np.arange(n), np.arange(n), 0] = group.order(ctx) // sizes
    ok = np.array_equal(g, expected)
    ce = None
    if not ok:
        i, j = map(int, np.argwhere((g != expected).any(axis=2))[0])
        ce = {
            "class_c": repr(table.classes[cols[i]]),
            "class_d": repr(table.classes[cols[j]]),
            "got": [int(x) for x in g[i, j]],
            "expected": [int(x) for x in expected[i, j]],
        }
    return VerificationReport(
        "column-orthogonality",
        ok,
        f"{n} classes" + ("" if sample is None else " (sampled)"),
        ce,
        time.time() - t0,
    )


def verify_counts(ctx) -> VerificationReport:
    """Enumerated class/character counts against both polynomial forms."""
    t0 = time.time()
    q = ctx.q
    problems = []

    classes = conjugacy.list_classes(ctx)
    n_classes = len(classes)
    if n_classes != conjugacy.class_count(q):
        problems.append(f"class count {n_classes} != polynomial {conjugacy.class_count(q)}")
    if n_classes != conjugacy.class_count_qminus1(q):
        problems.append("class count != (q-1)-expansion")
    for tag in conjugacy.FAMILY_ORDER:
        got = len(conjugacy.census(ctx).family_classes(tag))
        want = conjugacy.family_class_count(tag, q)
        if got != want:
            problems.append(f"family {tag}: {got} classes != {want}")
    if sum(c.size for c in classes) != group.order(ctx):
        problems.append("class sizes do not sum to the group order")

    labels = characters.list_irreducibles(ctx)
    if len(labels) != characters.irr_count(q):
        problems.append("character count != polynomial")
    by_deg = {}
    for chi in labels:
        by_deg[characters.DEGREE_EXP[chi.family]] = (
            by_deg.get(characters.DEGREE_EXP[chi.family], 0) + 1
        )
    if by_deg != characters.irr_count_by_degree(q):
        problems.append(f"degree census {by_deg} != {characters.irr_count_by_degree(q)}")
    if by_deg != characters.irr_count_by_degree_qminus1(q):
        problems.append("degree census != (q-1)-expansions")
    if sum(chi.degree(q) ** 2 for chi in labels) != group.order(ctx):
        problems.append("sum of squared degrees != group order")
    if len(labels) != n_classes:
        problems.append("character count != class count")

    return VerificationReport(
        "count-polynomials",
        not problems,
        f"q={q}: {n_classes} classes"
        + ("" if not problems else "; " + "; ".join(problems)),
        None if not problems else {"problems": problems},
        time.time() - t0,
    )


def verify_against_oracles(ctx, table=None, cap=None, rng_seed=20259) -> VerificationReport:
    """Brute-force cross-checks: orbit census, literal induction, conjugation.

    Aggregated pass/fail; the first discrepancy found is reported.
    """
    t0 = time.time()
    cap = cap if cap is not None else group.DEFAULT_ENUMERATION_CAP
    if group.order(ctx) > cap:
        raise TooLarge(
            f"oracle suite needs full enumeration; order {group.order(ctx)} > cap {cap}"
        )
    sub = []
    ce = None

    labels_orbit = conjugacy.brute_force_classes(ctx, cap=cap)
    class_idx = conjugacy.classify_all(ctx, cap=cap)
    n_orbits, _ = conjugacy.orbit_summary(labels_orbit)
    n_classes = len(conjugacy.list_classes(ctx))
    ok_orbits = (
        n_orbits == n_classes
        and bool(np.array_equal(class_idx, class_idx[labels_orbit]))
        and len(set(zip(labels_orbit.tolist(), class_idx.tolist()))) == n_orbits
    )
    sub.append(("orbit-partition vs census", ok_orbits))
    if not ok_orbits and ce is None:
        bad = int(np.flatnonzero(class_idx != class_idx[labels_orbit])[0])
        ce = {"check": "orbit-partition", "element_rank": bad}

    if table is None:
        table = characters.build_table(ctx)
    og = characters.oracle_grid(ctx, labels=table.labels, classes=table.classes, cap=cap)
    ok_table = bool(np.array_equal(og, table.values))
    sub.append(("induction oracle vs closed forms", ok_table))
    if not ok_table and ce is None:
        i, j = map(int, np.argwhere((og != table.values).any(axis=2))[0])
        ce = {
            "check": "induction-oracle",
            "chi": repr(table.labels[i]),
            "class": repr(table.classes[j]),
            "oracle": [int(x) for x in og[i, j]],
            "closed": [int(x) for x in table.values[i, j]],
        }

    kern = get_kernel(ctx)
    rng = np.random.default_rng(rng_seed)
    n = group.order(ctx)
    ok_conj = True
    for _ in range(2000):
        u = group.GroupElement(ctx, kern.unrank(int(rng.integers(n))))
        x = group.GroupElement(ctx, kern.unrank(int(rng.integers(n))))
        if group.conjugate_closed(ctx, u, x) != group.conjugate(ctx, u, x):
            ok_conj = False
            if ce is None:
                ce = {"check": "closed-conjugation", "u": u.coords, "x": x.coords}
            break
    sub.append(("closed conjugation vs collection", ok_conj))

    passed = all(ok for _, ok in sub)
    details = "; ".join(f"{name}: {'ok' if ok else 'FAIL'}" for name, ok in sub)
    return VerificationReport(
        "oracle-agreement", passed, details, ce, time.time() - t0
    )


def sampled_indices(n, target_pairs, seed=421):
    """A seeded index sample whose all-pairs count is ~ target_pairs."""
    want = int(np.ceil(np.sqrt(2 * target_pairs)))
    if want >= n:
        return None  # full
    rng = np.random.default_rng(seed)
    return np.sort(rng.choice(n, size=want, replace=False))


def run_suite(ctx, full=False, oracles=False, sample_pairs=10_000):
    """The CLI verification pipeline.  Returns a list of reports."""
    reports = [verify_counts(ctx)]
    n_chars = characters.irr_count(ctx.q)
    small = group.order(ctx) <= group.DEFAULT_ENUMERATION_CAP
    table = None

    row_sample = None if (full or small) else sampled_indices(n_chars, sample_pairs)
    if row_sample is None:
        table = characters.build_table(ctx)
        reports.append(verify_row_orthogonality(ctx, table))
        reports.append(verify_column_orthogonality(ctx, table))
    else:
        labels = characters.list_irreducibles(ctx)
        cen = conjugacy.census(ctx)
        sampled_labels = [labels[i] for i in row_sample]
        values = np.zeros((len(sampled_labels), len(cen.classes), ctx.p), dtype=np.int64)
        for i, chi in enumerate(sampled_labels):
            values[i] = characters.character_row(ctx, chi, cen)
        part = characters.CharacterTable(ctx, sampled_labels, list(cen.classes), values)
        rep = verify_row_orthogonality(ctx, part, sample=np.arange(len(sampled_labels)))
        rep.details += f" of {n_chars}"
        reports.append(rep)

    if oracles:
        try:
            reports.append(verify_against_oracles(ctx, table=table))
        except TooLarge as exc:
            reports.append(
                VerificationReport(
                    "oracle-agreement", True, f"skipped: {exc}", None, 0.0
                )
            )
    return reports
