"""Text renderings of triangles: csv, json and b-file."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Tuple

from .coefficients import CoeffTriangle

FORMATS = ("csv", "json", "bfile")

Entry = Tuple[int, int, Fraction]


def fmt_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def render_csv(entries: Iterable[Entry]) -> str:
    return "".join(f"{m},{k},{fmt_rational(v)}\n" for m, k, v in entries)


def render_bfile(entries: Iterable[Entry]) -> str:
    """Entries flattened row by row, as 1-based "index value" lines.

    Only integer sequences can be written this way.
    """
    lines = []
    for i, (m, k, v) in enumerate(entries, start=1):
        v = Fraction(v)
        if v.denominator != 1:
            raise ValueError(f"b-file needs integer values; entry ({m}, {k}) is {fmt_rational(v)}")
        lines.append(f"{i} {v.numerator}\n")
    return "".join(lines)


def render_json(kind: str, max_m: int, entries: Iterable[Entry]) -> str:
    rows = {}
    for m, k, v in entries:
        v = Fraction(v)
        rows.setdefault(m, []).append({"k": k, "num": str(v.numerator), "den": str(v.denominator)})
    doc = {
        "kind": kind,
        "max_m": max_m,
        "rows": [{"m": m, "entries": es} for m, es in sorted(rows.items())],
    }
    return json.dumps(doc, indent=1) + "\n"


def triangle_to_json(tri: CoeffTriangle) -> str:
    return render_json(tri.kind, tri.max_m, tri.entries())


def triangle_from_json(text: str) -> CoeffTriangle:
    doc = json.loads(text)
    if doc.get("kind") not in ("a", "c"):
        raise ValueError(f"not a coefficient triangle: kind={doc.get('kind')!r}")
    rows = []
    for expect_m, row in enumerate(doc["rows"], start=2):
        if row["m"] != expect_m:
            raise ValueError(f"rows out of order: expected m={expect_m}, got {row['m']}")
        ks = [e["k"] for e in row["entries"]]
        if ks != list(range(2, expect_m + 1)):
            raise ValueError(f"row {expect_m} has entries for k = {ks}")
        rows.append(tuple(Fraction(int(e["num"]), int(e["den"])) for e in row["entries"]))
    tri = CoeffTriangle(doc["kind"], tuple(rows), "json")
    if tri.max_m != doc["max_m"]:
        raise ValueError(f"max_m {doc['max_m']} does not match {len(rows)} rows")
    return tri
