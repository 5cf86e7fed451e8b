"""Numerical order of a function along a ray, p = lim ln|psi(r e^{i phi})| / ln r.

Samples are taken on a geometric sequence of radii, so successive slopes
``d ln|psi| / d ln r`` are shift invariant; for a pure power ``c z^p`` every
slope equals ``p`` up to rounding.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from powergeom.truncation import Regime

ComplexFunction = Callable[[complex], complex]

DEFAULT_TOL = 1e-3
TAIL = 4  # slopes examined for convergence


class OrderEvaluationError(ValueError):
    """The function vanished, blew up, or could not be evaluated on the ray."""


class Status(str, enum.Enum):
    CONVERGED = "converged"
    NOT_CONVERGED = "not-converged"
    OSCILLATING = "oscillating"


class Adequacy(str, enum.Enum):
    TWO_D = "2d-adequate"
    THREE_D = "3d-adequate"
    FOUR_D = "4d-necessary"


@dataclass(frozen=True)
class RaySpec:
    phi: float = 0.0
    regime: Regime = Regime.TO_ZERO
    r0: float = 1e-1
    ratio: float = 10 ** -0.5
    count: int = 12

    def __post_init__(self):
        regime = Regime(self.regime)
        object.__setattr__(self, "regime", regime)
        if self.r0 <= 0:
            raise ValueError("r0 must be positive")
        if self.count < 4:
            raise ValueError("at least 4 radii are needed")
        if regime is Regime.TO_ZERO and not 0 < self.ratio < 1:
            raise ValueError("a ray towards zero needs 0 < ratio < 1")
        if regime is Regime.TO_INFINITY and not self.ratio > 1:
            raise ValueError("a ray towards infinity needs ratio > 1")

    @classmethod
    def default(cls, regime: Regime | str = Regime.TO_ZERO, phi: float = 0.0) -> RaySpec:
        if Regime(regime) is Regime.TO_ZERO:
            return cls(phi, Regime.TO_ZERO, 1e-1, 10 ** -0.5, 12)
        return cls(phi, Regime.TO_INFINITY, 1e1, 10 ** 0.5, 12)

    def radii(self) -> list[float]:
        return [self.r0 * self.ratio ** k for k in range(self.count)]


@dataclass(frozen=True)
class OrderEstimate:
    value: float
    residual: float
    converged: bool
    status: Status
    slopes: tuple[float, ...] = field(repr=False, default=())


def _log_abs(psi: ComplexFunction, r: float, phi: float) -> float:
    try:
        v = psi(cmath.rect(r, phi))
    except (ArithmeticError, ValueError) as exc:
        raise OrderEvaluationError(f"evaluation failed at r={r:g}: {exc}") from None
    mag = abs(v)
    if mag == 0 or not math.isfinite(mag):
        raise OrderEvaluationError(
            f"|psi| = {mag} at r={r:g}: zero or pole on the ray")
    return math.log(mag)


def estimate_order(psi: ComplexFunction, ray: RaySpec | None = None,
                   tol: float = DEFAULT_TOL) -> OrderEstimate:
    ray = ray or RaySpec.default()
    radii = ray.radii()
    logs = [_log_abs(psi, r, ray.phi) for r in radii]
    slopes = [(logs[k + 1] - logs[k]) / (math.log(radii[k + 1]) - math.log(radii[k]))
              for k in range(len(radii) - 1)]
    tail = slopes[-TAIL:]
    diffs = [b - a for a, b in zip(tail, tail[1:])]
    residual = max((abs(d) for d in diffs), default=0.0)

    value = slopes[-1]
    d1, d2 = diffs[-2], diffs[-1]
    # Aitken step, only for a clean geometric tail well above rounding noise.
    if abs(d1) > 1e-12 and d1 * d2 > 0 and abs(d2) < abs(d1):
        value = slopes[-1] - d2 * d2 / (d2 - d1)

    converged = residual <= tol
    if converged:
        status = Status.CONVERGED
    elif all(a * b < 0 for a, b in zip(diffs, diffs[1:])):
        status = Status.OSCILLATING
    else:
        status = Status.NOT_CONVERGED
    return OrderEstimate(value, residual, converged, status, tuple(slopes))


@dataclass(frozen=True)
class DerivativeGapReport:
    orders: tuple[OrderEstimate, OrderEstimate, OrderEstimate]
    gap1: float  # order(psi) - order(psi')
    gap2: float  # order(psi') - order(psi'')
    adequacy: Adequacy


def derivative_order_gaps(psi: ComplexFunction, dpsi: ComplexFunction,
                          d2psi: ComplexFunction, ray: RaySpec | None = None,
                          tol: float = DEFAULT_TOL) -> DerivativeGapReport:
    """Orders of a function and its two (explicitly supplied) derivatives.

    The gaps say which exponent geometry can see the balance: equal gaps of 1
    fit the 2D construction, equal gaps the 3D one, and unequal gaps need 4D.
    """
    est = tuple(estimate_order(f, ray, tol) for f in (psi, dpsi, d2psi))
    gap1 = est[0].value - est[1].value
    gap2 = est[1].value - est[2].value
    if abs(gap1 - 1) <= 2 * tol and abs(gap2 - 1) <= 2 * tol:
        adequacy = Adequacy.TWO_D
    elif abs(gap1 - gap2) <= 4 * tol:
        adequacy = Adequacy.THREE_D
    else:
        adequacy = Adequacy.FOUR_D
    return DerivativeGapReport(est, gap1, gap2, adequacy)


def sweep(psi: ComplexFunction, phis: Sequence[float],
          regime: Regime | str = Regime.TO_ZERO,
          tol: float = DEFAULT_TOL) -> list[tuple[float, OrderEstimate]]:
    """Estimate the order on several rays with default radii."""
    return [(phi, estimate_order(psi, RaySpec.default(regime, phi), tol)) for phi in phis]
