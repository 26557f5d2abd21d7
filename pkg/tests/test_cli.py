"""CLI surface: subcommands, formats, exit codes."""

import json

import pytest

from d4syl import build_tower
from d4syl.cli import main
from d4syl.group import element
from d4syl.serial import format_element, parse_element


def test_element_format_roundtrip(ctx3, ctx9):
    for ctx in (ctx3, ctx9):
        for t1 in (0, 1, ctx.q3 - 1):
            x = element(
                ctx, t1=ctx.fq3_at(t1), t2=ctx.fq_at(1), t4=ctx.fq3_at(2), t6=ctx.fq_at(ctx.q - 1)
            )
            text = format_element(ctx, x)
            assert parse_element(ctx, text) == x
    assert format_element(ctx3, element(ctx3)) == "x(0,0,0;0;0,0,0;0,0,0;0;0)"
    with pytest.raises(ValueError):
        parse_element(ctx3, "x(1;2;3)")
    with pytest.raises(ValueError):
        parse_element(ctx3, "y(0,0,0;0;0,0,0;0,0,0;0;0)")


def test_info_command(capsys):
    assert main(["info", "-q", "3"]) == 0
    out = capsys.readouterr().out
    assert "609" in out and "q = 3" in out


def test_info_with_explicit_p_k(capsys):
    assert main(["info", "-p", "3", "-k", "1"]) == 0
    assert main(["info", "-q", "9"]) == 0
    out = capsys.readouterr().out
    assert "q = 9" in out


def test_usage_errors():
    assert main(["info"]) == 2  # no field size
    assert main(["info", "-q", "12"]) == 2  # not a prime power
    assert main(["info", "-q", "4"]) == 2  # even characteristic
    assert main(["info", "-q", "5", "-p", "3"]) == 2  # conflict
    assert main(["classes", "-q", "3", "--g", "0,2,0,1"]) == 2  # reducible


def test_classes_command(tmp_path, capsys):
    out = tmp_path / "classes.json"
    assert main(["classes", "-q", "3", "--check-census", "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["schema"] == 1
    assert len(doc["classes"]) == 609
    assert doc["census_checks"]["count-polynomials"] is True
    assert doc["census_checks"]["orbit-partition"] is True
    sizes = {}
    for c in doc["classes"]:
        sizes[c["size"]] = sizes.get(c["size"], 0) + 1
    assert sizes == {1: 3, 3: 2, 9: 26, 81: 240, 243: 78, 729: 208, 6561: 52}
    # census check at q = 5 skips the orbit oracle but still runs the counts
    assert main(["classes", "-q", "5", "--check-census", "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert "orbit-partition" not in doc["census_checks"]


def test_table_command_json_and_csv(tmp_path):
    out = tmp_path / "table.json"
    assert main(["table", "-q", "3", "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["schema"] == 1
    assert len(doc["characters"]) == len(doc["classes"]) == 609
    assert len(doc["values"]) == 609 and len(doc["values"][0]) == 609
    # trivial character row: every value is [1, 0]
    assert all(cell == [1, 0] for cell in doc["values"][0])
    # metadata pins the model
    assert doc["metadata"]["p"] == 3 and doc["metadata"]["eta"] == [0, 0, 1]
    # the representative strings parse back
    ctx = build_tower(3, 1)
    rep = parse_element(ctx, doc["classes"][100]["rep"])
    assert rep.coords != (0, 0, 0, 0, 0, 0)

    csv_out = tmp_path / "table.csv"
    assert main(["table", "-q", "3", "-o", str(csv_out)]) == 0
    lines = csv_out.read_text().splitlines()
    assert lines[0].startswith("# schema")
    assert len(lines) == 609 + 10  # 8 metadata lines + header + sizes


def test_exported_table_reverifies_from_json(tmp_path):
    # parse the JSON artifact back and check an orthogonality relation on the
    # parsed data alone, independently of the in-memory table
    out = tmp_path / "table.json"
    assert main(["table", "-q", "3", "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    p = doc["metadata"]["p"]
    sizes = [c["size"] for c in doc["classes"]]

    def mulz(a, b):
        out = [0] * p
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[(i + j) % p] += x * y
        return [v - out[-1] for v in out]

    def conjz(a):
        return [a[(-i) % p] for i in range(p)]

    rows = [100, 400, 608]
    for i in rows:
        for j in rows:
            acc = [0] * p
            for c, w in enumerate(sizes):
                a = doc["values"][i][c] + [0]
                b = conjz(doc["values"][j][c] + [0])
                term = mulz(a, b)
                acc = [x + w * y for x, y in zip(acc, term)]
            acc = [x - acc[-1] for x in acc]
            want = [3**12 if (i == j and t == 0) else 0 for t in range(p)]
            assert acc == want, (i, j)


def test_table_refuses_large_without_force(capsys):
    assert main(["table", "-q", "5"]) == 2
    err = capsys.readouterr().err
    assert "force" in err


def test_exports_are_byte_stable(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["classes", "-q", "3", "-o", str(a)]) == 0
    assert main(["classes", "-q", "3", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    ta, tb = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["table", "-q", "3", "-o", str(ta)]) == 0
    assert main(["table", "-q", "3", "-o", str(tb)]) == 0
    assert ta.read_bytes() == tb.read_bytes()


def test_table_independent_of_worker_count(ctx3):
    import numpy as np

    from d4syl import characters as ch

    serial = ch.build_table(ctx3, workers=1)
    threaded = ch.build_table(ctx3, workers=4)
    assert np.array_equal(serial.values, threaded.values)


def test_verify_command(capsys):
    assert main(["verify", "-q", "3", "--oracles"]) == 0
    out = capsys.readouterr().out
    assert out.count("[pass]") == 4
    assert "row-orthogonality" in out and "oracle-agreement" in out


def test_verify_exit_code_is_zero_at_q5(capsys):
    assert main(["verify", "-q", "5"]) == 0
    out = capsys.readouterr().out
    assert "sampled" in out
