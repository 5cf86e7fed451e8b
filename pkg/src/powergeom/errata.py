"""Known misprints in reference Painleve hull data, checked at run time.

Each entry in ``data/errata.json`` names the printed value; when an analysis
of the matching preset runs, the entry fires and records what was actually
computed, so reports carry both.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from functools import cache
from importlib import resources
from typing import Any

from powergeom import presets
from powergeom.exponents import Convention, shear, shear_normal, support
from powergeom.polyhedron import convex_hull, facet_contains


@dataclass(frozen=True)
class FiredErratum:
    id: str
    kind: str
    summary: str
    printed: Any
    computed: Any

    def to_json(self) -> dict:
        return dataclasses.asdict(self)


@cache
def ledger() -> dict:
    text = resources.files("powergeom").joinpath("data/errata.json").read_text("utf-8")
    return json.loads(text)


def entries(preset: str | None = None) -> list[dict]:
    return [e for e in ledger()["entries"] if preset is None or e["preset"] in (preset, None)]


def _plane_in(conv: Convention, plane: dict) -> tuple[tuple[int, ...], int]:
    normal = tuple(plane["normal"])
    if conv is Convention.COUNT_DEPENDENT:
        normal = shear_normal(normal, inverse=True)
    return normal, plane["offset"]


def _to_count(conv: Convention, q) -> tuple[int, ...]:
    return tuple(q) if conv is Convention.COUNT_DEPENDENT else shear(q)


def _check(entry: dict, report) -> Any:
    """Computed value for a firing entry, or ``None`` if it does not apply."""
    kind = entry["kind"]
    conv = report.convention
    if kind == "map_label":
        return "two-dimensional map" if report.dim == 2 else None
    if kind == "equation_typo":
        return entry["used"]
    if report.dim != 4:
        return None
    if kind == "affine_dim_wording":
        return report.lattice.affine_dim

    if kind == "convention_mix":
        labels = ledger()["labels"][entry["preset"]]
        printed_support = {tuple(v) for v in labels.values()}
        found = {}
        for c in Convention:
            pts = support(report.equation, 4, c).points
            lattice = convex_hull(pts)
            normal, offset = _plane_in(Convention.PLAIN, entry["plane"])
            found[c.value] = {
                "support_matches_printed": set(pts) == printed_support,
                "printed_plane_is_facet": facet_contains(lattice, normal, offset) is not None,
            }
        return found

    normal, offset = _plane_in(conv, entry["plane"])
    row = report.facet_by_plane(normal, offset)
    if row is None:
        return None
    if kind == "normal_sign":
        computed = row.facet.normal
        if conv is Convention.COUNT_DEPENDENT:
            computed = shear_normal(computed)
        return list(computed)
    if kind == "point_listing":
        labels = ledger()["labels"][entry["preset"]]
        by_point = {tuple(v): k for k, v in labels.items()}
        on = [by_point.get(_to_count(conv, report.lattice.points[i]), "?")
              for i in row.facet.point_ids]
        on.sort(key=lambda s: int(s[1:]) if s[1:].isdigit() else 10**6)
        printed = set(entry["printed"])
        return {
            "points": on,
            "missing_from_listing": [x for x in on if x not in printed],
            "not_on_facet": [x for x in entry["printed"] if x not in on],
        }
    raise ValueError(f"unknown erratum kind {kind!r}")


def attach(report):
    """Return ``report`` with the ledger entries that fired for it."""
    name = report.preset or presets.identify(report.equation)
    fired = []
    for entry in entries():
        if entry["preset"] is not None and entry["preset"] != name:
            continue
        computed = _check(entry, report)
        if computed is None or computed == entry["printed"]:
            continue
        fired.append(FiredErratum(entry["id"], entry["kind"], entry["summary"],
                                  entry["printed"], computed))
    return dataclasses.replace(report, preset=name, errata=tuple(fired))
