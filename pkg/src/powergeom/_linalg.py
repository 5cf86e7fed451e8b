"""Small exact linear algebra over the rationals."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

Vector = Sequence[Fraction | int]


def dot(u: Vector, v: Vector):
    return sum(x * y for x, y in zip(u, v))


def rref(rows: Sequence[Vector], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Vector], ncols: int | None = None) -> int:
    if not rows:
        return 0
    ncols = ncols if ncols is not None else len(rows[0])
    if all(type(x) is int for row in rows for x in row):
        return _int_rank([list(row) for row in rows], ncols)
    return len(rref(rows, ncols)[1])


def _int_rank(m: list[list[int]], ncols: int) -> int:
    """Fraction-free elimination; rows are kept primitive to bound growth."""
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                row = [x * piv[c] - f * y for x, y in zip(m[i], piv)]
                g = reduce(gcd, row, 0)
                m[i] = [x // g for x in row] if g > 1 else row
        r += 1
        if r == len(m):
            break
    return r


def primitive(v: Vector) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers, keeping its direction."""
    fr = [Fraction(x) for x in v]
    den = reduce(lcm, (x.denominator for x in fr), 1)
    ints = [int(x * den) for x in fr]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def nullspace(rows: Sequence[Vector], ncols: int) -> list[tuple[int, ...]]:
    """Primitive integer basis of {x : row . x = 0 for every row}."""
    if not rows:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    m, pivots = rref(rows, ncols)
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in zip(m, pivots):
            v[pc] = -row[free]
        basis.append(primitive(v))
    return basis


def independent_subset(rows: Sequence[Vector], ncols: int) -> list[int]:
    """Indices of a greedily chosen maximal linearly independent subset."""
    chosen: list[int] = []
    echelon: list[tuple[int, list[Fraction]]] = []  # (pivot column, row)
    for i, row in enumerate(rows):
        v = [Fraction(x) for x in row]
        for c, e in echelon:
            if v[c]:
                f = v[c] / e[c]
                v = [x - f * y for x, y in zip(v, e)]
        pivot = next((c for c in range(ncols) if v[c]), None)
        if pivot is None:
            continue
        chosen.append(i)
        echelon.append((pivot, v))
        if len(chosen) == ncols:
            break
    return chosen


def solve(a: Sequence[Vector], b: Vector) -> list[Fraction]:
    """Solve a square nonsingular system exactly."""
    n = len(a)
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    m, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [m[i][n] for i in range(n)]


def inverse(a: Sequence[Vector]) -> list[list[Fraction]]:
    n = len(a)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    m, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in m]
