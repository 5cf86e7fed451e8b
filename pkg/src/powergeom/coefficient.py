"""Exact coefficients: polynomials in named parameters over Gaussian rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction, "GaussianRational"]

# A monomial in the parameters: ((name, power), ...) sorted by name, powers > 0.
ParamMonomial = tuple[tuple[str, int], ...]


@dataclass(frozen=True, order=True)
class GaussianRational:
    """A complex number re + im*i with both parts exact rationals."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def of(cls, value: Scalar) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        return cls(Fraction(value), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other: Scalar) -> GaussianRational:
        o = GaussianRational.of(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> GaussianRational:
        return self + (-GaussianRational.of(other))

    def __mul__(self, other: Scalar) -> GaussianRational:
        o = GaussianRational.of(other)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self) -> GaussianRational:
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("division by zero")
        return GaussianRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other: Scalar) -> GaussianRational:
        return self * GaussianRational.of(other).inverse()

    def is_negative(self) -> bool:
        """Sign used for pretty printing: leading nonzero part is negative."""
        return self.re < 0 or (self.re == 0 and self.im < 0)

    def is_real(self) -> bool:
        return self.im == 0

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return _fmt_fraction(self.re)
        imag = _fmt_imag(self.im)
        if self.re == 0:
            return imag
        sign = "-" if self.im < 0 else "+"
        return f"({_fmt_fraction(self.re)} {sign} {_fmt_imag(abs(self.im))})"


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1))
I = GaussianRational(Fraction(0), Fraction(1))


def _fmt_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _fmt_imag(x: Fraction) -> str:
    if x == 1:
        return "i"
    if x == -1:
        return "-i"
    return f"{_fmt_fraction(x)}*i"


def _mul_monomials(a: ParamMonomial, b: ParamMonomial) -> ParamMonomial:
    powers = dict(a)
    for name, k in b:
        powers[name] = powers.get(name, 0) + k
    return tuple(sorted(powers.items()))


def _fmt_param_monomial(m: ParamMonomial) -> str:
    return "*".join(name if k == 1 else f"{name}^{k}" for name, k in m)


@dataclass(frozen=True)
class Coefficient:
    """Sparse polynomial in parameters, kept in canonical form.

    ``terms`` holds ``(monomial, scalar)`` pairs sorted by monomial with no
    zero scalars; the zero polynomial has no terms.  Construct through
    :meth:`from_terms`, :meth:`constant` or :meth:`parameter` rather than
    directly.
    """

    terms: tuple[tuple[ParamMonomial, GaussianRational], ...] = ()

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[ParamMonomial, Scalar]]) -> Coefficient:
        acc: dict[ParamMonomial, GaussianRational] = {}
        for mono, value in pairs:
            mono = tuple(sorted((n, k) for n, k in mono if k != 0))
            acc[mono] = acc.get(mono, ZERO) + GaussianRational.of(value)
        return cls(tuple(sorted((m, v) for m, v in acc.items() if v)))

    @classmethod
    def constant(cls, value: Scalar) -> Coefficient:
        return cls.from_terms([((), value)])

    @classmethod
    def parameter(cls, name: str) -> Coefficient:
        return cls(((((name, 1),), ONE),))

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not m for m, _ in self.terms)

    def constant_value(self) -> GaussianRational:
        """Scalar value of a constant coefficient."""
        if not self.is_constant():
            raise ValueError(f"coefficient {self} depends on parameters")
        return self.terms[0][1] if self.terms else ZERO

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def parameters(self) -> frozenset[str]:
        return frozenset(name for m, _ in self.terms for name, _ in m)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: Coefficient | Scalar) -> Coefficient:
        other = _as_coefficient(other)
        return Coefficient.from_terms(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> Coefficient:
        return Coefficient(tuple((m, -v) for m, v in self.terms))

    def __sub__(self, other: Coefficient | Scalar) -> Coefficient:
        return self + (-_as_coefficient(other))

    def __rsub__(self, other: Scalar) -> Coefficient:
        return _as_coefficient(other) - self

    def __mul__(self, other: Coefficient | Scalar) -> Coefficient:
        other = _as_coefficient(other)
        return Coefficient.from_terms(
            (_mul_monomials(m1, m2), v1 * v2)
            for m1, v1 in self.terms
            for m2, v2 in other.terms
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Coefficient:
        if k < 0:
            raise ValueError("negative powers of coefficients are not supported")
        result = Coefficient.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def substitute(self, values: Mapping[str, Scalar]) -> Coefficient:
        """Replace the named parameters by exact scalars."""
        pairs = []
        for mono, value in self.terms:
            kept = []
            for name, k in mono:
                if name in values:
                    value = value * _power(GaussianRational.of(values[name]), k)
                else:
                    kept.append((name, k))
            pairs.append((tuple(kept), value))
        return Coefficient.from_terms(pairs)

    # -- text ------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, value in self.terms:
            negative = value.is_negative()
            text = _fmt_scaled(-value if negative else value, _fmt_param_monomial(mono))
            parts.append((negative, text))
        first_neg, first = parts[0]
        out = ("-" if first_neg else "") + first
        for negative, text in parts[1:]:
            out += (" - " if negative else " + ") + text
        return out


def _fmt_scaled(value: GaussianRational, body: str) -> str:
    """Render ``value*body`` for a value that is not 'negative'."""
    if not body:
        return str(value)
    if value == ONE:
        return body
    return f"{value}*{body}"


def _power(x: GaussianRational, k: int) -> GaussianRational:
    out = ONE
    for _ in range(k):
        out = out * x
    return out


def _as_coefficient(x: Coefficient | Scalar) -> Coefficient:
    if isinstance(x, Coefficient):
        return x
    return Coefficient.constant(x)
