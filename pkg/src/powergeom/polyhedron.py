"""Exact convex hulls of small integer point sets with full face lattices.

Facets are found with the double description method applied to the cone of
valid inequalities ``{(m, c) : <m, y_i> <= c}`` in coordinates of the affine
hull; its extreme rays are exactly the facets.  Lower faces are all nonempty
intersections of facets.  Everything is exact integer/rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from powergeom import _linalg as la

Point = tuple[int, ...]


class HullInvariantError(RuntimeError):
    """An internal consistency check on a computed hull failed."""


@dataclass(frozen=True)
class AffineHull:
    dim: int
    base: Point
    basis: tuple[Point, ...]
    normal_space: tuple[Point, ...]


@dataclass(frozen=True)
class Facet:
    """Supporting hyperplane ``<normal, q> == offset`` with ``<normal, q> <=
    offset`` for all input points.  ``point_ids`` lists every input point on
    the plane, ``vertex_ids`` the hull vertices among them."""

    normal: Point
    offset: int
    point_ids: tuple[int, ...]
    vertex_ids: tuple[int, ...]


@dataclass(frozen=True)
class Face:
    dim: int
    point_ids: tuple[int, ...]
    vertex_ids: tuple[int, ...]
    incident_facets: tuple[int, ...]


@dataclass(frozen=True)
class FaceLattice:
    points: tuple[Point, ...]
    ambient_dim: int
    affine_dim: int
    normal_space: tuple[Point, ...]
    vertices: tuple[int, ...]
    facets: tuple[Facet, ...]
    faces: tuple[tuple[Face, ...], ...]  # indexed by face dimension

    @property
    def full_dimensional(self) -> bool:
        return self.affine_dim == self.ambient_dim

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.faces)

    def vertex_points(self) -> list[Point]:
        return [self.points[i] for i in self.vertices]

    def facet_points(self, facet_id: int) -> list[Point]:
        return [self.points[i] for i in self.facets[facet_id].point_ids]


def _check_points(points: Sequence[Sequence[int]]) -> list[Point]:
    pts = [tuple(int(x) for x in p) for p in points]
    if not pts:
        raise ValueError("at least one point is required")
    d = len(pts[0])
    if not 1 <= d <= 4 or any(len(p) != d for p in pts):
        raise ValueError("points must share one ambient dimension between 1 and 4")
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points in input")
    return pts


def affine_hull(points: Sequence[Sequence[int]]) -> AffineHull:
    """Dimension, a basis of difference vectors and the integer normal space."""
    pts = [tuple(int(x) for x in p) for p in points]
    if not pts:
        raise ValueError("at least one point is required")
    d = len(pts[0])
    base = pts[0]
    diffs = [tuple(x - y for x, y in zip(p, base)) for p in pts[1:]]
    idx = la.independent_subset(diffs, d)
    basis = tuple(diffs[i] for i in idx)
    return AffineHull(len(basis), base, basis, tuple(la.nullspace(basis, d)))


def _double_description(rows: list[Point]) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone ``{x : <row, x> >= 0}``."""
    n = len(rows[0])
    init = la.independent_subset(rows, n)
    if len(init) != n:
        raise HullInvariantError("constraint system is not of full rank")
    inv = la.inverse([rows[i] for i in init])
    rays = [la.primitive([inv[r][c] for r in range(n)]) for c in range(n)]
    processed = list(init)
    zeros = {ray: frozenset(i for i in processed if la.dot(rows[i], ray) == 0)
             for ray in rays}

    for i in range(len(rows)):
        if i in init:
            continue
        row = rows[i]
        values = {ray: la.dot(row, ray) for ray in rays}
        pos = [r for r in rays if values[r] > 0]
        neg = [r for r in rays if values[r] < 0]
        new_rays = [r for r in rays if values[r] >= 0]
        new_zeros = {r: zeros[r] | ({i} if values[r] == 0 else set()) for r in new_rays}
        for p in pos:
            for q in neg:
                common = zeros[p] & zeros[q]
                if len(common) < n - 2:
                    continue
                if any(common <= zeros[r] for r in rays if r != p and r != q):
                    continue
                vp, vq = values[p], values[q]
                ray = la.primitive([vp * b - vq * a for a, b in zip(p, q)])
                new_rays.append(ray)
                new_zeros[ray] = common | {i}
        rays = new_rays
        zeros = new_zeros
        processed.append(i)
    return rays


def _affine_coordinates(pts: list[Point], hull: AffineHull):
    """Coordinates of the points in the affine hull's basis and the map
    lifting a dual vector there back to an ambient normal orthogonal to the
    normal space."""
    d = len(pts[0])
    if hull.dim == d:
        return [list(p) for p in pts], lambda m: list(m)
    basis = [list(b) for b in hull.basis]
    gram = [[la.dot(u, v) for v in basis] for u in basis]
    ginv = la.inverse(gram)
    coords = []
    for p in pts:
        rel = [x - y for x, y in zip(p, hull.base)]
        bv = [la.dot(b, rel) for b in basis]
        coords.append([la.dot(g, bv) for g in ginv])

    def lift(m):
        t = [la.dot(g, m) for g in ginv]
        return [sum(t[j] * basis[j][c] for j in range(len(basis))) for c in range(d)]

    return coords, lift


def _faces_from_facets(pts: list[Point], facet_sets: list[frozenset[int]],
                       affine_dim: int) -> tuple[tuple[Face, ...], ...]:
    known = set(facet_sets)
    frontier = list(facet_sets)
    while frontier:
        nxt = []
        for f in frontier:
            for g in facet_sets:
                h = f & g
                if h and h not in known:
                    known.add(h)
                    nxt.append(h)
        frontier = nxt
    known.add(frozenset(range(len(pts))))

    def face_dim(ids):
        ids = sorted(ids)
        base = pts[ids[0]]
        return la.rank([[a - b for a, b in zip(pts[i], base)] for i in ids[1:]], len(base))

    dims = {ids: face_dim(ids) for ids in known}
    vertex_set = {next(iter(ids)) for ids, dim in dims.items() if dim == 0}
    layers: list[list[Face]] = [[] for _ in range(affine_dim + 1)]
    for ids, dim in dims.items():
        incident = tuple(j for j, fs in enumerate(facet_sets) if ids <= fs)
        point_ids = tuple(sorted(ids))
        layers[dim].append(Face(dim, point_ids,
                                tuple(i for i in point_ids if i in vertex_set),
                                incident if dim < affine_dim else ()))
    return tuple(tuple(sorted(layer, key=lambda f: f.point_ids)) for layer in layers)


def convex_hull(points: Sequence[Sequence[int]]) -> FaceLattice:
    """Face lattice of the convex hull of distinct integer points.

    For lower-dimensional inputs the lattice is that of the hull relative to
    its affine span; facet normals are then chosen orthogonal to
    ``normal_space``.
    """
    pts = _check_points(points)
    d = len(pts[0])
    hull = affine_hull(pts)
    k = hull.dim

    facets: list[Facet] = []
    if k > 0:
        coords, lift = _affine_coordinates(pts, hull)
        rows = [la.primitive([-x for x in y] + [1]) for y in coords]
        seen = set()
        for ray in _double_description(rows):
            normal = la.primitive(lift(ray[:k]))
            values = [la.dot(normal, p) for p in pts]
            offset = max(values)
            on = tuple(i for i, v in enumerate(values) if v == offset)
            if on in seen:
                raise HullInvariantError("duplicate facet from double description")
            seen.add(on)
            base = pts[on[0]]
            if la.rank([[a - b for a, b in zip(pts[i], base)] for i in on[1:]], d) != k - 1:
                raise HullInvariantError(f"facet {on} has wrong dimension")
            facets.append(Facet(normal, offset, on, ()))
        facets.sort(key=lambda f: f.point_ids)

    faces = _faces_from_facets(pts, [frozenset(f.point_ids) for f in facets], k)
    vertices = tuple(sorted(f.point_ids[0] for f in faces[0]))
    vset = set(vertices)
    facets = [Facet(f.normal, f.offset, f.point_ids,
                    tuple(i for i in f.point_ids if i in vset)) for f in facets]
    return FaceLattice(tuple(pts), d, k, hull.normal_space, vertices,
                       tuple(facets), faces)


def facet_contains(lattice: FaceLattice, coeffs: Sequence[int],
                   offset: int) -> int | None:
    """Index of the facet lying in the plane ``<coeffs, q> == offset``.

    Planes are sign-free: the stored normal may be the negated query.
    """
    on = tuple(i for i, p in enumerate(lattice.points) if la.dot(coeffs, p) == offset)
    if not on:
        return None
    for j, f in enumerate(lattice.facets):
        if f.point_ids == on:
            return j
    return None


def check_lattice(lattice: FaceLattice) -> None:
    """Raise :class:`HullInvariantError` if a structural invariant fails."""
    pts = lattice.points
    for f in lattice.facets:
        for i, p in enumerate(pts):
            v = la.dot(f.normal, p)
            if v > f.offset or ((v == f.offset) != (i in f.point_ids)):
                raise HullInvariantError(f"facet {f.normal} is not supporting")
        if any(la.dot(f.normal, n) for n in lattice.normal_space):
            raise HullInvariantError("facet normal not orthogonal to normal space")
    if lattice.affine_dim + len(lattice.normal_space) != lattice.ambient_dim:
        raise HullInvariantError("affine dimension and normal space disagree")
    fv = lattice.f_vector()
    euler = sum((-1) ** i * n for i, n in enumerate(fv))
    if euler != 1:
        raise HullInvariantError(f"Euler relation fails for f-vector {fv}")
