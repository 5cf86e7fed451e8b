"""Exponent maps from differential monomials to integer lattice points.

Three geometries are supported.  In 4D the derivatives get their own axes;
``Convention.PLAIN`` uses Q(w') = (0,0,1,0), Q(w'') = (0,0,0,1), while
``Convention.COUNT_DEPENDENT`` also counts every derivative factor in the
w-degree: Q(w') = (0,1,1,0), Q(w'') = (0,1,0,1).  The two are related by the
unimodular shear :func:`shear`.  The 3D map sends the l-th derivative to
(0,1,l) and the 2D map to (-l,1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from powergeom._linalg import primitive
from powergeom.coefficient import Coefficient
from powergeom.diffsum import DiffMonomial, DifferentialSum

Point = tuple[int, ...]


class Convention(str, enum.Enum):
    PLAIN = "plain"
    COUNT_DEPENDENT = "count-dependent"


DIMS = (2, 3, 4)


def _check_dim(dim: int) -> None:
    if dim not in DIMS:
        raise ValueError(f"geometry dimension must be one of {DIMS}, got {dim}")


def exponent(m: DiffMonomial, dim: int = 4,
             conv: Convention = Convention.PLAIN) -> Point:
    """Lattice point of a monomial; ``conv`` only matters for ``dim == 4``."""
    _check_dim(dim)
    r, s, a, b = m.key
    if dim == 4:
        if Convention(conv) is Convention.PLAIN:
            return (r, s, a, b)
        return (r, s + a + b, a, b)
    if dim == 3:
        return (r, s + a + b, a + 2 * b)
    return (r - a - 2 * b, s + a + b)


def project(q: Point, target: int) -> Point:
    """Project a plain 4D exponent to the 3D or 2D geometry."""
    _check_dim(target)
    if len(q) != 4:
        raise ValueError("project expects a 4D exponent")
    q1, q2, q3, q4 = q
    if target == 4:
        return tuple(q)
    if target == 3:
        return (q1, q2 + q3 + q4, q3 + 2 * q4)
    return (q1 - q3 - 2 * q4, q2 + q3 + q4)


def shear(q: Point, inverse: bool = False) -> Point:
    """Plain -> count-dependent (or back with ``inverse=True``)."""
    if len(q) != 4:
        raise ValueError("shear expects a 4D exponent")
    q1, q2, q3, q4 = q
    step = -(q3 + q4) if inverse else q3 + q4
    return (q1, q2 + step, q3, q4)


def shear_normal(n: Point, inverse: bool = False) -> Point:
    """Carry a count-dependent facet normal to the plain one (transpose
    shear), or back with ``inverse=True``.

    Normals pair with points, so ``<shear_normal(n), q> == <n, shear(q)>``.
    """
    n1, n2, n3, n4 = n
    if inverse:
        return (n1, n2, n3 - n2, n4 - n2)
    return (n1, n2, n2 + n3, n2 + n4)


@dataclass(frozen=True)
class SupportPoint:
    """One lattice point of a support with the monomials that map onto it.

    ``coefficient`` is the sum of the contributing coefficients.  The point
    belongs to the support whenever any contributing monomial is present,
    even if the aggregate cancels (distinct differential monomials sharing a
    point are not like terms).
    """

    point: Point
    coefficient: Coefficient
    terms: tuple[DiffMonomial, ...]

    def genericity_condition(self, nonzero: Iterable[str] = ()) -> str | None:
        """Condition on the parameters keeping this point present.

        Returns ``None`` when the point is unconditionally present, taking
        parameters declared nonzero into account.
        """
        nonzero = set(nonzero)
        coeffs = [t.coeff for t in self.terms]
        if any(_certainly_nonzero(c, nonzero) for c in coeffs):
            return None
        if len(coeffs) == 1:
            return f"{_condition_text(coeffs[0])} != 0"
        return "not all zero: " + ", ".join(_condition_text(c) for c in coeffs)


def _condition_text(c: Coefficient) -> str:
    """Coefficient up to a nonzero scalar factor: ``-4*alpha`` -> ``alpha``."""
    if c.is_monomial():
        (mono, _), = c.terms
        return str(Coefficient.from_terms([(mono, 1)]))
    values = [v for _, v in c.terms]
    if all(v.is_real() for v in values):
        ints = primitive([v.re for v in values])
        if ints[0] < 0:
            ints = tuple(-x for x in ints)
        return str(Coefficient.from_terms(zip((m for m, _ in c.terms), ints)))
    return str(c * Coefficient.constant(values[0].inverse()))


def _certainly_nonzero(c: Coefficient, nonzero: set[str]) -> bool:
    return c.is_monomial() and c.parameters() <= nonzero


@dataclass(frozen=True)
class Support:
    dim: int
    convention: Convention
    entries: tuple[SupportPoint, ...]

    @property
    def points(self) -> list[Point]:
        return [e.point for e in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, q) -> bool:
        return tuple(q) in {e.point for e in self.entries}

    def entry(self, q: Point) -> SupportPoint:
        for e in self.entries:
            if e.point == tuple(q):
                return e
        raise KeyError(q)


def support(sum_: DifferentialSum, dim: int = 4,
            conv: Convention = Convention.PLAIN) -> Support:
    """Exponent set of a canonical sum, one entry per distinct point, sorted."""
    _check_dim(dim)
    groups: dict[Point, list[DiffMonomial]] = {}
    for t in sum_.terms:
        if t.coeff:
            groups.setdefault(exponent(t, dim, conv), []).append(t)
    entries = []
    for q in sorted(groups):
        terms = tuple(groups[q])
        total = Coefficient()
        for t in terms:
            total = total + t.coeff
        entries.append(SupportPoint(q, total, terms))
    return Support(dim, Convention(conv), tuple(entries))
