"""Delimited/markdown/JSON rendering of approximation tables and neighborhood maps."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Sequence

from roughlab.approximations import ApproximationResult, Indefinite, format_accuracy
from roughlab.neighborhoods import NeighborhoodSystem
from roughlab.topologies import SetFamily, TopoApproximationResult

FORMATS = ("csv", "markdown", "json")
APPROX_COLUMNS = ("set", "lower", "upper", "boundary", "accuracy", "exact")
TOPO_COLUMNS = ("set", "interior", "closure", "boundary", "accuracy")


def accuracy_json(value) -> dict:
    if isinstance(value, Indefinite):
        return {"accuracy": "indefinite", "accuracy_decimal": None}
    return {"accuracy": str(Fraction(value)), "accuracy_decimal": round(float(value), 4)}


def approx_row(result: ApproximationResult) -> dict:
    return {
        "set": str(result.target),
        "lower": str(result.lower),
        "upper": str(result.upper),
        "boundary": str(result.boundary),
        "accuracy": format_accuracy(result.accuracy),
        "exact": "yes" if result.exact else "no",
    }


def topo_row(result: TopoApproximationResult) -> dict:
    return {
        "set": str(result.target),
        "interior": str(result.interior),
        "closure": str(result.closure),
        "boundary": str(result.boundary),
        "accuracy": format_accuracy(result.accuracy),
    }


def render_rows(rows: Sequence[dict], columns: Sequence[str], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| " + " | ".join(columns) + " |", "|" + "|".join("---" for _ in columns) + "|"]
        for row in rows:
            lines.append("| " + " | ".join(row[c] for c in columns) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unsupported format {fmt!r}")


def approx_json(results: Iterable[ApproximationResult], meta: dict) -> str:
    rows = []
    for r in results:
        rows.append({
            "set": list(r.target),
            "lower": list(r.lower),
            "upper": list(r.upper),
            "boundary": list(r.boundary),
            **accuracy_json(r.accuracy),
            "exact": r.exact,
        })
    return json.dumps({**meta, "rows": rows}, ensure_ascii=False, indent=2) + "\n"


def render_approximations(results: Sequence[ApproximationResult], fmt: str, meta: dict) -> str:
    if fmt == "json":
        return approx_json(results, meta)
    header = "".join(f"# {k}: {v}\n" for k, v in meta.items()) if fmt == "markdown" else ""
    return header + render_rows([approx_row(r) for r in results], APPROX_COLUMNS, fmt)


def render_system(system: NeighborhoodSystem, fmt: str) -> str:
    rows = [{"element": e, "neighborhood": str(s)} for e, s in system.map.items()]
    if fmt == "json":
        return json.dumps({e: list(s) for e, s in system.map.items()}, ensure_ascii=False) + "\n"
    return render_rows(rows, ("element", "neighborhood"), fmt)


def topology_json(family: SetFamily) -> str:
    return json.dumps(family.to_names(), ensure_ascii=False) + "\n"
