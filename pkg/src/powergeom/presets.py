"""The first five Painleve equations, written as cleared differential sums."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from powergeom.diffsum import DifferentialSum
from powergeom.parser import parse_differential_sum


@dataclass(frozen=True)
class Preset:
    name: str
    title: str
    equation: str
    genericity: str = ""
    note: str = ""


PRESETS: dict[str, Preset] = {
    p.name: p
    for p in [
        Preset(
            "painleve1",
            "w'' = 6w^2 + z",
            "w'' - 6*w^2 - z",
        ),
        Preset(
            "painleve2",
            "w'' = 2w^3 + zw + alpha",
            "w'' - 2*w^3 - z*w - alpha",
        ),
        Preset(
            "painleve3",
            "w'' = w'^2/w - w'/z + (alpha w^2 + beta)/z + gamma w^3 + delta/w, "
            "multiplied by -z*w",
            "-z*w*w'' + z*(w')^2 - w*w' + alpha*w^3 + beta*w + gamma*z*w^4 + delta*z",
            genericity="alpha*beta*gamma*delta != 0",
        ),
        Preset(
            "painleve4",
            "w'' = w'^2/(2w) + 3/2 w^3 + 4zw^2 + 2(z^2 - alpha)w + beta/w, "
            "multiplied by -2w",
            "-2*w*w'' + (w')^2 + 3*w^4 + 8*z*w^3 + 4*(z^2 - alpha)*w^2 + 2*beta",
            genericity="alpha*beta != 0",
            note="the cubic term is 8*z*w^3 (erratum P4-TYPO); the equation is the "
                 "standard form with w'^2/(2w) + 3/2 w^3 (erratum P4-EQ)",
        ),
        Preset(
            "painleve5",
            "w'' = (1/(2w) + 1/(w-1)) w'^2 - w'/z + (w-1)^2/z^2 (alpha w + beta/w) "
            "+ gamma w/z + delta w(w+1)/(w-1), multiplied by z^2 w (w-1)",
            "-z^2*w*(w-1)*w'' + z^2*(3/2*w - 1/2)*(w')^2 - z*w*(w-1)*w'"
            " + (w-1)^3*(alpha*w^2 + beta) + gamma*z*w^2*(w-1)"
            " + delta*z^2*w^2*(w+1)",
            genericity="delta != 0",
        ),
    ]
}


class UnknownPresetError(KeyError):
    def __str__(self) -> str:
        return f"unknown preset {self.args[0]!r}; choose from {', '.join(PRESETS)}"


def get(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        raise UnknownPresetError(name) from None


@cache
def preset_sum(name: str) -> DifferentialSum:
    return parse_differential_sum(get(name).equation)


def identify(sum_: DifferentialSum) -> str | None:
    """Name of the preset whose canonical sum equals ``sum_`` up to sign."""
    for name in PRESETS:
        s = preset_sum(name)
        if s == sum_ or s == -sum_:
            return name
    return None
