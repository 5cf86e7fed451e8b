"""Deterministic JSON documents for analyses, hulls and order estimates,
plus a plain-text rendering derived from the same documents."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from powergeom.diffsum import format_sum
from powergeom.orders import DerivativeGapReport, OrderEstimate, RaySpec
from powergeom.polyhedron import FaceLattice
from powergeom.truncation import AnalysisReport, format_plane

SCHEMA_VERSION = 1


def fmt_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _facet_doc(lattice: FaceLattice, j: int) -> dict:
    f = lattice.facets[j]
    return {
        "id": j,
        "normal": list(f.normal),
        "offset": f.offset,
        "plane": format_plane(f.normal, f.offset),
        "point_ids": list(f.point_ids),
        "points": [list(lattice.points[i]) for i in f.point_ids],
        "vertices": [list(lattice.points[i]) for i in f.vertex_ids],
    }


def analysis_document(report: AnalysisReport, regime: str = "both") -> dict:
    lattice = report.lattice
    nonzero = report.assumptions.nonzero
    support = [
        {
            "point": list(e.point),
            "coefficient": str(e.coefficient),
            "terms": [format_sum(type(report.equation)((t,))) for t in e.terms],
            "genericity": e.genericity_condition(nonzero),
        }
        for e in report.support.entries
    ]
    facets = []
    for row in report.facets:
        doc = _facet_doc(lattice, row.facet_id)
        doc["truncation"] = format_sum(row.truncation)
        doc["admissible"] = None if row.verdict is None else row.verdict.admissible
        doc["reason"] = None if row.verdict is None else row.verdict.reason.value
        orders = row.orders
        if orders is not None and regime in ("both", orders.regime.value):
            doc["candidate_orders"] = {
                "gamma": fmt_rational(orders.gamma),
                "gamma1": fmt_rational(orders.gamma1),
                "gamma2": fmt_rational(orders.gamma2),
                "regime": orders.regime.value,
                "shift": fmt_rational(orders.shift),
            }
        else:
            doc["candidate_orders"] = None
        facets.append(doc)
    deg = report.degeneracy
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "analyze",
        "preset": report.preset,
        "equation": format_sum(report.equation),
        "dim": report.dim,
        "convention": report.convention.value,
        "regime_filter": regime,
        "assumptions": {
            "nonzero": sorted(nonzero),
            "values": {k: str(v) for k, v in sorted(report.assumptions.values.items())},
        },
        "support": support,
        "affine_dim": lattice.affine_dim,
        "normal_space": [list(n) for n in lattice.normal_space],
        "vertices": [list(p) for p in lattice.vertex_points()],
        "f_vector": list(lattice.f_vector()),
        "relative": report.relative,
        "facets": facets,
        "degeneracy": {
            "kind": deg.kind.value,
            "affine_dim": deg.affine_dim,
            "witness": None if deg.witness is None else list(deg.witness),
            "hyperplane": (None if deg.witness is None
                           else format_plane(deg.witness, deg.witness_offset)),
            "message": deg.message,
        },
        "errata": [e.to_json() for e in report.errata],
    }


def hull_document(lattice: FaceLattice) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "hull",
        "points": [list(p) for p in lattice.points],
        "ambient_dim": lattice.ambient_dim,
        "affine_dim": lattice.affine_dim,
        "normal_space": [list(n) for n in lattice.normal_space],
        "vertices": [list(p) for p in lattice.vertex_points()],
        "f_vector": list(lattice.f_vector()),
        "facets": [_facet_doc(lattice, j) for j in range(len(lattice.facets))],
        "faces": [[list(f.point_ids) for f in layer] for layer in lattice.faces],
    }


def _estimate_doc(e: OrderEstimate) -> dict:
    return {"value": e.value, "residual": e.residual,
            "converged": e.converged, "status": e.status.value}


def order_document(functions: Sequence[str],
                   rows: Sequence[tuple[RaySpec, list[OrderEstimate], DerivativeGapReport | None]],
                   tol: float) -> dict:
    rays = []
    for ray, estimates, gaps in rows:
        doc: dict[str, Any] = {
            "phi": ray.phi,
            "regime": ray.regime.value,
            "r0": ray.r0,
            "ratio": ray.ratio,
            "count": ray.count,
            "estimates": [_estimate_doc(e) for e in estimates],
            "gaps": None,
        }
        if gaps is not None:
            doc["gaps"] = {"gamma1": gaps.gap1, "gamma2": gaps.gap2,
                           "adequacy": gaps.adequacy.value}
        rays.append(doc)
    return {"schema_version": SCHEMA_VERSION, "command": "order",
            "functions": list(functions), "tol": tol, "rays": rays}


# -- text -------------------------------------------------------------------

def _pt(p) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


def render_text(doc: dict) -> str:
    return {"analyze": _analysis_text, "hull": _hull_text, "order": _order_text}[doc["command"]](doc)


def _analysis_text(doc: dict) -> str:
    lines = []
    title = f"preset {doc['preset']}" if doc["preset"] else "equation"
    lines.append(f"{title}: {doc['equation']} = 0")
    lines.append(f"geometry: {doc['dim']}D, {doc['convention']} exponents")
    assume = doc["assumptions"]
    if assume["nonzero"] or assume["values"]:
        parts = [f"{n}!=0" for n in assume["nonzero"]]
        parts += [f"{k}={v}" for k, v in assume["values"].items()]
        lines.append("assumptions: " + ", ".join(parts))
    lines.append(f"support ({len(doc['support'])} points):")
    for e in doc["support"]:
        cond = f"   [requires {e['genericity']}]" if e["genericity"] else ""
        lines.append(f"  {_pt(e['point'])}  {' + '.join(e['terms'])}{cond}")
    lines.append(f"affine dimension: {doc['affine_dim']}")
    if doc["normal_space"]:
        lines.append("normal space: " + ", ".join(_pt(n) for n in doc["normal_space"]))
    lines.append("vertices: " + ", ".join(_pt(v) for v in doc["vertices"]))
    lines.append("f-vector: " + " ".join(str(x) for x in doc["f_vector"]))
    deg = doc["degeneracy"]
    lines.append(f"verdict: {deg['kind']}")
    if deg["message"]:
        lines.append(f"  {deg['message']}")
    if doc["facets"]:
        kind = "relative facets" if doc["relative"] else "facets"
        lines.append(f"{kind} ({len(doc['facets'])}):")
    for f in doc["facets"]:
        if f["admissible"] is None:
            flag = ""
        else:
            flag = "  admissible" if f["admissible"] else "  rejected (n1 = 0)"
        lines.append(f"  [{f['id']}] {f['plane']}  N={_pt(f['normal'])}{flag}")
        lines.append(f"      points: {', '.join(_pt(p) for p in f['points'])}")
        lines.append(f"      truncation: {f['truncation']} = 0")
        o = f["candidate_orders"]
        if o:
            where = "z -> 0" if o["regime"] == "zero" else "z -> infinity"
            lines.append(f"      orders (w, w', w''): ({o['gamma']}, {o['gamma1']}, "
                         f"{o['gamma2']}) as {where}")
    for e in doc["errata"]:
        lines.append(f"erratum {e['id']}: {e['summary']}")
        lines.append(f"  printed: {json.dumps(e['printed'], sort_keys=True)}")
        lines.append(f"  computed: {json.dumps(e['computed'], sort_keys=True)}")
    return "\n".join(lines) + "\n"


def _hull_text(doc: dict) -> str:
    names = {0: "vertices", 1: "edges", 2: "2-faces", 3: "3-faces"}
    lines = [f"{len(doc['points'])} points in dimension {doc['ambient_dim']}, "
             f"affine dimension {doc['affine_dim']}"]
    if doc["normal_space"]:
        lines.append("normal space: " + ", ".join(_pt(n) for n in doc["normal_space"]))
    for d, layer in enumerate(doc["faces"]):
        if d == doc["affine_dim"]:
            break
        lines.append(f"{len(layer)} {names.get(d, f'{d}-faces')}")
    lines.append("vertices: " + ", ".join(_pt(v) for v in doc["vertices"]))
    lines.append("facets:")
    for f in doc["facets"]:
        lines.append(f"  [{f['id']}] {f['plane']}  N={_pt(f['normal'])}  "
                     f"points: {', '.join(_pt(p) for p in f['points'])}")
    return "\n".join(lines) + "\n"


def _order_text(doc: dict) -> str:
    lines = []
    labels = ["psi", "psi'", "psi''"]
    for ray in doc["rays"]:
        where = "r -> 0" if ray["regime"] == "zero" else "r -> infinity"
        lines.append(f"ray phi={ray['phi']:g} ({where}):")
        for label, fn, e in zip(labels, doc["functions"], ray["estimates"]):
            lines.append(f"  {label} = {fn}: order {e['value']:.6g} "
                         f"(residual {e['residual']:.2e}, {e['status']})")
        if ray["gaps"]:
            g = ray["gaps"]
            lines.append(f"  gaps: {g['gamma1']:.6g}, {g['gamma2']:.6g} -> {g['adequacy']}")
    return "\n".join(lines) + "\n"
