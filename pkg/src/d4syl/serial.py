"""Textual element format and JSON/CSV export of tables.

Elements print as ``x(a;b;c;d;e;f)`` where each slot is the comma-joined
coefficient list of the coordinate (3k residues for the cubic-field slots
t1, t3, t4 and k residues for t2, t5, t6, constant coefficient first).
Cyclotomic integers serialise as their p-1 canonical coordinates.
All exports embed the tower metadata (p, k, f, g, eta) so tables are
reproducible bit for bit.
"""

from __future__ import annotations

import csv
import io
import json

from .conjugacy import list_classes
from .group import GroupElement

SCHEMA_VERSION = 1


def format_element(ctx, x: GroupElement) -> str:
    parts = []
    for pos in range(6):
        if pos in (0, 2, 3):
            coeffs = ctx.fq3_at(x.coords[pos]).flat_coeffs
        else:
            coeffs = ctx.fq_coeffs(x.coords[pos])
        parts.append(",".join(str(c) for c in coeffs))
    return f"x({';'.join(parts)})"


def parse_element(ctx, text: str) -> GroupElement:
    text = text.strip()
    if not (text.startswith("x(") and text.endswith(")")):
        raise ValueError(f"malformed element {text!r}")
    parts = text[2:-1].split(";")
    if len(parts) != 6:
        raise ValueError(f"expected 6 coordinates, got {len(parts)}")
    coords = []
    for pos, part in enumerate(parts):
        coeffs = [int(c) for c in part.split(",")] if part else []
        if pos in (0, 2, 3):
            if len(coeffs) != 3 * ctx.k:
                raise ValueError(f"coordinate {pos + 1} needs {3 * ctx.k} coefficients")
            coords.append(ctx.fq3(coeffs).idx)
        else:
            if len(coeffs) != ctx.k:
                raise ValueError(f"coordinate {pos + 1} needs {ctx.k} coefficients")
            coords.append(ctx.fq_index(coeffs))
    return GroupElement(ctx, coords)


def _class_record(ctx, c):
    return {
        "index": c.index,
        "family": c.family,
        "rep": format_element(ctx, c.rep),
        "size": c.size,
    }


def _label_record(ctx, chi):
    slot_fields = {
        "lin": (("d1", 3), ("d2", 1)),
        "x3": (("d3", 3), ("d1", 3)),
        "x4": (("d4", 3), ("d2", 1)),
        "x5": (("d5", 1), ("d2", 1), ("d3", 3)),
        "x6": (("d6", 1), ("d1", 3)),
    }[chi.family]
    params = {}
    for (name, deg), idx in zip(slot_fields, chi.params):
        if deg == 3:
            params[name] = list(ctx.fq3_at(idx).flat_coeffs)
        else:
            params[name] = list(ctx.fq_coeffs(idx))
    return {
        "index": chi.index,
        "family": chi.family,
        "params": params,
        "degree": chi.degree(ctx.q),
    }


def classes_to_json(ctx, check_census=None):
    doc = {
        "schema": SCHEMA_VERSION,
        "metadata": ctx.metadata(),
        "classes": [_class_record(ctx, c) for c in list_classes(ctx)],
    }
    if check_census is not None:
        doc["census_checks"] = check_census
    return doc


def table_to_json(table):
    ctx = table.ctx
    return {
        "schema": SCHEMA_VERSION,
        "metadata": ctx.metadata(),
        "classes": [_class_record(ctx, c) for c in table.classes],
        "characters": [_label_record(ctx, chi) for chi in table.labels],
        "values": [
            [[int(v) for v in cell[:-1]] for cell in row] for row in table.values
        ],
    }


def table_to_csv(table) -> str:
    ctx = table.ctx
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["# schema", SCHEMA_VERSION])
    for key, val in ctx.metadata().items():
        writer.writerow([f"# {key}", json.dumps(val)])
    writer.writerow(
        ["character \\ class"]
        + [f"{c.family}:{format_element(ctx, c.rep)}" for c in table.classes]
    )
    writer.writerow(["class size"] + [c.size for c in table.classes])
    for i, chi in enumerate(table.labels):
        cells = [
            "(" + ",".join(str(int(v)) for v in cell[:-1]) + ")"
            for cell in table.values[i]
        ]
        writer.writerow([f"{chi.family}{chi.params}"] + cells)
    return buf.getvalue()


def dump_json(doc, path=None):
    text = json.dumps(doc, indent=1)
    if path is None:
        return text
    with open(path, "w") as fh:
        fh.write(text)
    return None
