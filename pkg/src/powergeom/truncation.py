"""Truncated equations, the n1 != 0 admissibility filter and order triples."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from powergeom import _linalg as la
from powergeom.coefficient import GaussianRational
from powergeom.diffsum import DifferentialSum, expand_and_collect
from powergeom.exponents import Convention, Support, shear_normal, support
from powergeom.parser import RESERVED, ParseError, normalize_identifier, parse_scalar
from powergeom.polyhedron import Facet, FaceLattice, convex_hull, facet_contains

FaceId = int | tuple[int, int]


class InvalidFaceError(ValueError):
    pass


class InadmissibleFacetError(ValueError):
    """Order triples need a facet normal with nonzero first coordinate."""


class NotFullDimensionalError(ValueError):
    pass


class AssumptionError(ValueError):
    def __init__(self, message: str, token: str):
        self.token = token
        super().__init__(f"{message}: {token!r}")


class Regime(str, enum.Enum):
    TO_ZERO = "zero"
    TO_INFINITY = "infinity"


class Reason(str, enum.Enum):
    N1_ZERO = "n1-zero"
    N1_NONZERO = "n1-nonzero"


class DegeneracyKind(str, enum.Enum):
    FULL_DIMENSIONAL = "full-dimensional"
    HYPERPLANE_N1_ZERO = "degenerate-hyperplane-n1-zero"
    OTHER = "degenerate-other"


@dataclass(frozen=True)
class TruncatedEquation:
    face_id: FaceId
    sum: DifferentialSum


@dataclass(frozen=True)
class AdmissibilityVerdict:
    facet_id: int
    admissible: bool
    reason: Reason


@dataclass(frozen=True)
class CandidateOrderTriple:
    """Orders of w, w', w'' read off a facet normal, plus the constant
    ``shift`` with ``q1 + gamma*q2 + gamma1*q3 + gamma2*q4 + shift == 0`` on
    the facet (plain 4D coordinates)."""

    gamma: Fraction
    gamma1: Fraction
    gamma2: Fraction
    regime: Regime
    shift: Fraction


@dataclass(frozen=True)
class DegeneracyVerdict:
    kind: DegeneracyKind
    affine_dim: int
    witness: tuple[int, ...] | None = None
    witness_offset: int | None = None
    message: str = ""


@dataclass(frozen=True)
class Assumptions:
    nonzero: frozenset[str] = frozenset()
    values: Mapping[str, GaussianRational] = field(default_factory=dict)

    def __str__(self) -> str:
        parts = [f"{n}!=0" for n in sorted(self.nonzero)]
        parts += [f"{n}={v}" for n, v in sorted(self.values.items())]
        return ",".join(parts)


def _is_parameter(name: str) -> bool:
    return name.isidentifier() and name not in RESERVED


def parse_assumptions(text: str | None) -> Assumptions:
    """Parse ``"alpha!=0,beta=1/2"``-style assumption lists."""
    nonzero: set[str] = set()
    values: dict[str, GaussianRational] = {}
    if not text:
        return Assumptions()
    for raw in text.split(","):
        item = raw.strip()
        if not item:
            continue
        if "!=" in item:
            name, _, rhs = item.partition("!=")
            name = normalize_identifier(name.strip())
            if rhs.strip() != "0" or not _is_parameter(name):
                raise AssumptionError("only 'name!=0' is supported", item)
            nonzero.add(name)
        elif "=" in item:
            name, _, rhs = item.partition("=")
            name = normalize_identifier(name.strip())
            if not _is_parameter(name):
                raise AssumptionError("malformed parameter name", item)
            try:
                values[name] = parse_scalar(rhs.strip())
            except ParseError:
                raise AssumptionError("value must be a numeric literal", item) from None
        else:
            raise AssumptionError("expected 'name!=0' or 'name=value'", item)
    for name in nonzero & values.keys():
        if not values[name]:
            raise AssumptionError("contradictory assumptions", name)
    return Assumptions(frozenset(nonzero), values)


def format_plane(normal: Sequence[int], offset: int) -> str:
    """``(1,1,0,-1), 1`` -> ``"q1 + q2 - q4 = 1"``."""
    out = ""
    for j, n in enumerate(normal, start=1):
        if not n:
            continue
        mag = "" if abs(n) == 1 else str(abs(n))
        if not out:
            out = ("-" if n < 0 else "") + f"{mag}q{j}"
        else:
            out += (" - " if n < 0 else " + ") + f"{mag}q{j}"
    return f"{out or '0'} = {offset}"


def _face_points(lattice: FaceLattice, face_id: FaceId) -> tuple[int, ...]:
    try:
        if isinstance(face_id, tuple):
            d, j = face_id
            if d < 0 or j < 0:
                raise IndexError
            return lattice.faces[d][j].point_ids
        if face_id < 0:
            raise IndexError
        return lattice.facets[face_id].point_ids
    except (IndexError, TypeError, ValueError):
        raise InvalidFaceError(f"no face with id {face_id!r}") from None


def truncate(sum_: DifferentialSum, lattice: FaceLattice, face_id: FaceId,
             dim: int = 4, conv: Convention = Convention.PLAIN) -> TruncatedEquation:
    """Sub-sum of monomials whose exponents lie on the given face.

    ``face_id`` is a facet index or a ``(dimension, index)`` pair into
    ``lattice.faces``.
    """
    supp = support(sum_, dim, conv)
    if tuple(supp.points) != lattice.points:
        raise ValueError("lattice was not built from this sum's support")
    ids = _face_points(lattice, face_id)
    terms = [t for i in ids for t in supp.entries[i].terms]
    return TruncatedEquation(face_id, expand_and_collect(terms))


def admissible_facets(lattice: FaceLattice) -> list[AdmissibilityVerdict]:
    if lattice.ambient_dim != 4 or not lattice.full_dimensional:
        raise NotFullDimensionalError(
            "admissibility needs a full-dimensional 4D hull; use degeneracy_verdict")
    return [_verdict(j, f) for j, f in enumerate(lattice.facets)]


def _verdict(j: int, f: Facet) -> AdmissibilityVerdict:
    ok = f.normal[0] != 0
    return AdmissibilityVerdict(j, ok, Reason.N1_NONZERO if ok else Reason.N1_ZERO)


def candidate_orders(facet: Facet | Sequence[int], dim: int = 4,
                     conv: Convention = Convention.PLAIN,
                     offset: int | None = None) -> CandidateOrderTriple:
    """Orders (gamma, gamma1, gamma2) of w, w', w'' balanced on a facet.

    Count-dependent normals are first carried to plain coordinates; for the
    3D and 2D geometries the per-derivative shift encoded by the map is
    unfolded, so the triple always refers to w, w', w''.
    """
    if isinstance(facet, Facet):
        normal, offset = facet.normal, facet.offset
    else:
        normal = tuple(facet)
        offset = 0 if offset is None else offset
    n1 = normal[0]
    if n1 == 0:
        raise InadmissibleFacetError(f"normal {tuple(normal)} has n1 = 0")
    if dim == 4:
        if Convention(conv) is Convention.COUNT_DEPENDENT:
            normal = shear_normal(normal)
        g, g1, g2 = (Fraction(x, n1) for x in normal[1:])
    elif dim == 3:
        g, step = Fraction(normal[1], n1), Fraction(normal[2], n1)
        g1, g2 = g + step, g + 2 * step
    elif dim == 2:
        g = Fraction(normal[1], n1)
        g1, g2 = g - 1, g - 2
    else:
        raise ValueError(f"unsupported dimension {dim}")
    regime = Regime.TO_INFINITY if n1 > 0 else Regime.TO_ZERO
    return CandidateOrderTriple(g, g1, g2, regime, Fraction(-offset, n1))


def degeneracy_verdict(supp: Support, hull: FaceLattice) -> DegeneracyVerdict:
    ambient = hull.ambient_dim
    k = hull.affine_dim
    if k == ambient:
        return DegeneracyVerdict(DegeneracyKind.FULL_DIMENSIONAL, k)
    basis = list(hull.normal_space)
    firsts = [[n[0] for n in basis]]
    witness = None
    for t in la.nullspace(firsts, len(basis)):
        v = la.primitive([sum(tj * n[c] for tj, n in zip(t, basis)) for c in range(ambient)])
        if any(v):
            witness = v
            break
    if witness is None:
        return DegeneracyVerdict(
            DegeneracyKind.OTHER, k,
            message=f"support spans an affine subspace of dimension {k}; "
                    "every normal direction has n1 != 0")
    offset = la.dot(witness, hull.points[0])
    plane = format_plane(witness, offset)
    return DegeneracyVerdict(
        DegeneracyKind.HYPERPLANE_N1_ZERO, k, witness, offset,
        message=f"support spans an affine subspace of dimension {k} inside the "
                f"hyperplane {plane}, whose external normal {witness} has n1 = 0; "
                "no truncated equation yields a solution of finite order")


@dataclass(frozen=True)
class FacetAnalysis:
    facet_id: int
    facet: Facet
    truncation: DifferentialSum
    verdict: AdmissibilityVerdict | None
    orders: CandidateOrderTriple | None


@dataclass(frozen=True)
class AnalysisReport:
    equation: DifferentialSum
    dim: int
    convention: Convention
    assumptions: Assumptions
    support: Support
    lattice: FaceLattice
    degeneracy: DegeneracyVerdict
    facets: tuple[FacetAnalysis, ...]
    relative: bool = False
    preset: str | None = None
    errata: tuple = ()

    def admissible(self) -> list[FacetAnalysis]:
        return [f for f in self.facets if f.verdict is not None and f.verdict.admissible]

    def facet_by_plane(self, coeffs: Sequence[int], offset: int) -> FacetAnalysis | None:
        j = facet_contains(self.lattice, coeffs, offset)
        if j is None or not self.facets:
            return None
        return self.facets[j]


def apply_assumptions(sum_: DifferentialSum, assumptions: Assumptions) -> DifferentialSum:
    known = sum_.parameters()
    for name in sorted(assumptions.nonzero | assumptions.values.keys()):
        if name not in known:
            raise AssumptionError("unknown parameter", name)
    return sum_.substitute(assumptions.values) if assumptions.values else sum_


def analyze(sum_: DifferentialSum, dim: int = 4,
            conv: Convention = Convention.PLAIN,
            assumptions: Assumptions | None = None,
            force_relative: bool = False,
            preset: str | None = None) -> AnalysisReport:
    """Support, hull, degeneracy check, then per-facet truncations,
    verdicts and candidate orders."""
    from powergeom import errata

    assumptions = assumptions or Assumptions()
    conv = Convention(conv)
    eq = apply_assumptions(sum_, assumptions)
    if not eq:
        raise ValueError("equation is identically zero")
    supp = support(eq, dim, conv)
    lattice = convex_hull(supp.points)
    degeneracy = degeneracy_verdict(supp, lattice)
    full = lattice.full_dimensional
    rows = []
    if full or force_relative:
        for j, f in enumerate(lattice.facets):
            verdict = _verdict(j, f) if dim == 4 else None
            orders = None
            if f.normal[0] != 0:
                orders = candidate_orders(f, dim, conv)
            rows.append(FacetAnalysis(j, f, truncate(eq, lattice, j, dim, conv).sum,
                                      verdict, orders))
    report = AnalysisReport(eq, dim, conv, assumptions, supp, lattice, degeneracy,
                            tuple(rows), relative=not full and force_relative,
                            preset=preset)
    return errata.attach(report)
