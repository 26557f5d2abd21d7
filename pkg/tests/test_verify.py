"""Verification reports: exactness, determinism, fault detection."""

import numpy as np
import pytest

from d4syl import TooLarge, build_tower
from d4syl import characters as ch
from d4syl import verify as vf


def test_counts_all_scales():
    for q in (3, 5, 7):
        report = vf.verify_counts(build_tower(q, 1))
        assert report.passed, report


def test_row_orthogonality_full(ctx3, table3):
    report = vf.verify_row_orthogonality(ctx3, table3)
    assert report.passed, report
    assert report.counterexample is None


def test_column_orthogonality_full(ctx3, table3):
    report = vf.verify_column_orthogonality(ctx3, table3)
    assert report.passed, report


def test_fault_injection_is_caught(ctx3, table3):
    tampered = ch.CharacterTable(
        ctx3, table3.labels, table3.classes, table3.values.copy()
    )
    tampered.values[300, 200, 0] += 1
    report = vf.verify_row_orthogonality(ctx3, tampered)
    assert not report.passed
    assert report.counterexample is not None
    assert "chi" in report.counterexample
    col = vf.verify_column_orthogonality(ctx3, tampered)
    assert not col.passed
    oracle = vf.verify_against_oracles(ctx3, table=tampered)
    assert not oracle.passed
    assert oracle.counterexample["check"] == "induction-oracle"
    assert "300" in oracle.counterexample["chi"] or "x" in oracle.counterexample["chi"]


def test_oracle_agreement_passes(ctx3, table3):
    report = vf.verify_against_oracles(ctx3, table=table3)
    assert report.passed, report


def test_oracles_too_large(ctx5):
    with pytest.raises(TooLarge):
        vf.verify_against_oracles(ctx5)


def test_sampled_orthogonality_q5(ctx5):
    reports = vf.run_suite(ctx5, oracles=True)
    assert all(r.passed for r in reports), reports
    names = [r.name for r in reports]
    assert "row-orthogonality" in names
    # the oracle report is present but marked skipped
    oracle = [r for r in reports if r.name == "oracle-agreement"][0]
    assert "skipped" in oracle.details


def test_sampled_indices_deterministic():
    a = vf.sampled_indices(7345, 10_000)
    b = vf.sampled_indices(7345, 10_000)
    assert np.array_equal(a, b)
    assert vf.sampled_indices(100, 10_000) is None  # full grid is smaller


def test_full_pipeline_on_an_alternate_field_model():
    # a different cubic modulus relabels everything but must leave every
    # identity intact: census, closed forms, oracle, orthogonality
    ctx = build_tower(3, 1, g=[1, 2, 0, 1])  # y^3 + 2y + 1
    assert ctx.g == (1, 2, 0, 1)
    table = ch.build_table(ctx)
    assert vf.verify_counts(ctx).passed
    assert vf.verify_row_orthogonality(ctx, table).passed
    assert vf.verify_column_orthogonality(ctx, table).passed
    report = vf.verify_against_oracles(ctx, table=table)
    assert report.passed, report


def test_weighted_gram_object_path():
    # force the big-integer accumulation branch and compare against int64
    rng = np.random.default_rng(2)
    p = 3
    v = rng.integers(-3, 4, size=(4, 6, p)).astype(np.int64)
    v -= v[:, :, -1:]
    w = np.array([1, 2, 3, 4, 5, 6], dtype=np.int64)
    small = vf._weighted_gram(v, w, v, p)
    big = vf._weighted_gram(v * 2**30, w, v * 2**30, p)
    assert np.array_equal(np.asarray(big, dtype=object), small.astype(object) * 2**60)
