"""Brute-force face lattice used to cross-check :func:`convex_hull`.

Facets come from trying every affinely independent subset of the right size:
its hyperplane (computed with cofactor determinants) is kept when all other
points fall weakly on one side.  Faces are the point subsets equal to the
intersection of the facets containing them.  Exponential, so capped at 12
points.
"""

from __future__ import annotations

from itertools import combinations, permutations
from math import gcd
from functools import reduce
from typing import Sequence

from powergeom.polyhedron import Face, FaceLattice, Facet, affine_hull

MAX_POINTS = 12


def _det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for row, col in enumerate(perm):
            prod *= m[row][col]
            if not prod:
                break
        total += -prod if inversions % 2 else prod
    return total


def _cross(rows: list[tuple[int, ...]], d: int) -> tuple[int, ...]:
    """Vector orthogonal to d-1 rows in Z^d (zero if they are dependent)."""
    out = []
    for j in range(d):
        minor = [[r[c] for c in range(d) if c != j] for r in rows]
        out.append((-1) ** j * _det(minor))
    g = reduce(gcd, (abs(x) for x in out), 0)
    return tuple(x // g for x in out) if g else tuple(out)


def _affine_dim(pts: list[tuple[int, ...]]) -> int:
    """Largest r with r independent difference vectors, by nonzero minors."""
    if len(pts) <= 1:
        return 0
    d = len(pts[0])
    diffs = [tuple(a - b for a, b in zip(p, pts[0])) for p in pts[1:]]
    for r in range(min(d, len(diffs)), 0, -1):
        for rows in combinations(diffs, r):
            for cols in combinations(range(d), r):
                if _det([[row[c] for c in cols] for row in rows]):
                    return r
    return 0


def oracle_hull(points: Sequence[Sequence[int]]) -> FaceLattice:
    pts = [tuple(int(x) for x in p) for p in points]
    if len(pts) > MAX_POINTS:
        raise ValueError(f"oracle_hull is limited to {MAX_POINTS} points")
    if not pts or len(set(pts)) != len(pts):
        raise ValueError("need distinct points")
    d = len(pts[0])
    n = len(pts)
    hull = affine_hull(pts)
    k = _affine_dim(pts)
    normal_space = list(hull.normal_space)

    facet_masks: dict[int, tuple[tuple[int, ...], int]] = {}
    if k > 0:
        for subset in combinations(range(n), k):
            base = pts[subset[0]]
            diffs = [tuple(a - b for a, b in zip(pts[i], base)) for i in subset[1:]]
            normal = _cross(normal_space + diffs, d)
            if not any(normal):
                continue
            values = [sum(a * b for a, b in zip(normal, p)) for p in pts]
            c = values[subset[0]]
            if all(v <= c for v in values):
                pass
            elif all(v >= c for v in values):
                normal = tuple(-x for x in normal)
                c = -c
                values = [-v for v in values]
            else:
                continue
            mask = sum(1 << i for i, v in enumerate(values) if v == c)
            facet_masks[mask] = (normal, c)

    full = (1 << n) - 1
    masks = list(facet_masks)
    face_masks = []
    for s in range(1, full + 1):
        closure = full
        for fm in masks:
            if s & fm == s:
                closure &= fm
        if closure == s:
            face_masks.append(s)

    def ids(mask):
        return tuple(i for i in range(n) if mask >> i & 1)

    dims = {m: _affine_dim([pts[i] for i in ids(m)]) for m in face_masks}
    vertices = tuple(sorted(ids(m)[0] for m, dm in dims.items() if dm == 0))
    vset = set(vertices)

    facets = sorted(
        (Facet(normal, c, ids(m), tuple(i for i in ids(m) if i in vset))
         for m, (normal, c) in facet_masks.items()),
        key=lambda f: f.point_ids,
    )
    facet_ids = [sum(1 << i for i in f.point_ids) for f in facets]
    layers: list[list[Face]] = [[] for _ in range(k + 1)]
    for m, dm in dims.items():
        incident = () if m == full else tuple(j for j, fm in enumerate(facet_ids) if m & fm == m)
        layers[dm].append(Face(dm, ids(m), tuple(i for i in ids(m) if i in vset), incident))
    faces = tuple(tuple(sorted(layer, key=lambda f: f.point_ids)) for layer in layers)
    return FaceLattice(tuple(pts), d, k, tuple(normal_space), vertices, tuple(facets), faces)
