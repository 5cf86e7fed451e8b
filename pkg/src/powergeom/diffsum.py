"""Differential monomials and canonical differential sums."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from powergeom.coefficient import Coefficient, Scalar

# Exponent key of a differential monomial: powers of z, w, w', w''.
Key = tuple[int, int, int, int]


@dataclass(frozen=True)
class DiffMonomial:
    """``coeff * z^r * w^s * (w')^a * (w'')^b``."""

    coeff: Coefficient
    r: int = 0
    s: int = 0
    a: int = 0
    b: int = 0

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("derivative powers must be nonnegative")

    @property
    def key(self) -> Key:
        return (self.r, self.s, self.a, self.b)

    def __mul__(self, other: DiffMonomial) -> DiffMonomial:
        return DiffMonomial(
            self.coeff * other.coeff,
            self.r + other.r,
            self.s + other.s,
            self.a + other.a,
            self.b + other.b,
        )

    def __str__(self) -> str:
        return format_sum(DifferentialSum((self,)))


def expand_and_collect(terms: Iterable[DiffMonomial]) -> DifferentialSum:
    """Merge like monomials, drop zero coefficients, sort by exponent key."""
    acc: dict[Key, Coefficient] = {}
    for t in terms:
        acc[t.key] = acc.get(t.key, Coefficient()) + t.coeff
    return DifferentialSum(
        tuple(DiffMonomial(c, *k) for k, c in sorted(acc.items()) if c)
    )


@dataclass(frozen=True)
class DifferentialSum:
    """A polynomial in z, w, w', w'' with parametric coefficients.

    Instances built through :func:`expand_and_collect`, arithmetic or the
    parser are canonical: distinct keys, sorted, no zero coefficients.
    """

    terms: tuple[DiffMonomial, ...] = ()

    @classmethod
    def monomial(cls, coeff: Coefficient | Scalar = 1, r=0, s=0, a=0, b=0) -> DifferentialSum:
        if not isinstance(coeff, Coefficient):
            coeff = Coefficient.constant(coeff)
        return expand_and_collect([DiffMonomial(coeff, r, s, a, b)])

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_canonical(self) -> bool:
        keys = [t.key for t in self.terms]
        return keys == sorted(set(keys)) and all(t.coeff for t in self.terms)

    def coefficient(self, r=0, s=0, a=0, b=0) -> Coefficient:
        for t in self.terms:
            if t.key == (r, s, a, b):
                return t.coeff
        return Coefficient()

    def parameters(self) -> frozenset[str]:
        out: frozenset[str] = frozenset()
        for t in self.terms:
            out |= t.coeff.parameters()
        return out

    def __add__(self, other: DifferentialSum) -> DifferentialSum:
        return expand_and_collect(self.terms + other.terms)

    def __neg__(self) -> DifferentialSum:
        return DifferentialSum(tuple(DiffMonomial(-t.coeff, *t.key) for t in self.terms))

    def __sub__(self, other: DifferentialSum) -> DifferentialSum:
        return self + (-other)

    def __mul__(self, other: DifferentialSum) -> DifferentialSum:
        return expand_and_collect(x * y for x in self.terms for y in other.terms)

    def __pow__(self, k: int) -> DifferentialSum:
        result = DifferentialSum.monomial(1)
        for _ in range(k):
            result = result * self
        return result

    def substitute(self, values: Mapping[str, Scalar]) -> DifferentialSum:
        return expand_and_collect(
            DiffMonomial(t.coeff.substitute(values), *t.key) for t in self.terms
        )

    def __str__(self) -> str:
        return format_sum(self)


def _power(base: str, k: int) -> str:
    return base if k == 1 else f"{base}^{k}"


def _format_term(t: DiffMonomial) -> tuple[bool, str]:
    """Return (negative, text) with the sign pulled out for the joiner."""
    num, den = [], []
    for base, k in (("z", t.r), ("w", t.s), ("w'", t.a), ("w''", t.b)):
        if k > 0:
            num.append(_power(base, k))
        elif k < 0:
            den.append(_power(base, -k))
    body = "*".join(num)
    negative = False
    coeff = t.coeff
    if coeff.is_monomial():
        (pmono, value), = coeff.terms
        if value.is_negative():
            negative, coeff = True, -coeff
        head = str(coeff)
        if head == "1" and body:
            text = body
        else:
            text = head if not body else f"{head}*{body}"
    else:
        text = f"({coeff})" + (f"*{body}" if body else "")
    if den:
        text += "".join(f"/{d}" for d in den)
    return negative, text


def format_sum(sum_: DifferentialSum) -> str:
    """Deterministic text that re-parses to the same canonical sum."""
    if not sum_.terms:
        return "0"
    pieces = [_format_term(t) for t in sum_.terms]
    neg, text = pieces[0]
    out = ("-" if neg else "") + text
    for neg, text in pieces[1:]:
        out += (" - " if neg else " + ") + text
    return out
