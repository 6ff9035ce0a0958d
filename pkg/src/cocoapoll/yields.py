"""Pollination-yield multipliers and the shade-cover equivalence."""
from __future__ import annotations

from dataclasses import dataclass

from .core import CountryProfile, baseline_production
from .errors import DomainError

DEFAULT_SHADE_SLOPE = 0.962


def apply_pym(yield_dry: float, pym: float) -> float:
    """Dry yield (kg/ha) under a pollination-yield multiplier."""
    if yield_dry < 0:
        raise DomainError(f"yield must be >= 0, got {yield_dry}")
    if not pym >= 1:
        raise DomainError(f"pym must be >= 1, got {pym}")
    return yield_dry * pym


def country_addition(profile: CountryProfile, pym: float, adoption: float) -> float:
    """Extra national production (t) when ``adoption`` of farms pollinate by hand."""
    if not pym >= 1:
        raise DomainError(f"pym must be >= 1, got {pym}")
    if not 0 <= adoption <= 1:
        raise DomainError(f"adoption {adoption} not in [0, 1]")
    return baseline_production(profile) * (pym - 1.0) * adoption


@dataclass(frozen=True)
class ShadeYieldModel:
    """Linear yield decline with shade: ``y0 * (1 - slope * shade)``."""

    y0_kg_ha: float = 1.0
    slope: float = DEFAULT_SHADE_SLOPE

    def __post_init__(self):
        if self.y0_kg_ha <= 0:
            raise DomainError("y0_kg_ha must be > 0")
        if self.slope <= 0:
            raise DomainError(f"shade slope must be > 0, got {self.slope}")

    @property
    def max_shade(self) -> float:
        return min(1.0, 1.0 / self.slope)

    def yield_at(self, shade: float, pym: float = 1.0) -> float:
        if not 0 <= shade <= self.max_shade:
            raise DomainError(f"shade {shade} outside [0, {self.max_shade:.4f}]")
        return pym * self.y0_kg_ha * (1.0 - self.slope * shade)


@dataclass(frozen=True)
class ShadeEquivalent:
    shade: float
    exceeds_full_shade: bool


def shade_equivalent(pym: float, model: ShadeYieldModel | None = None) -> ShadeEquivalent:
    """Shade fraction at which pollinated yield equals the unshaded yield.

    Solves ``pym * (1 - slope * s) = 1``. The raw solution is returned even
    when it exceeds 1; ``exceeds_full_shade`` flags that case.
    """
    model = model or ShadeYieldModel()
    if not pym >= 1:
        raise DomainError(f"pym must be >= 1, got {pym}")
    s = (1.0 - 1.0 / pym) / model.slope
    return ShadeEquivalent(s, s > 1.0)


def calibrate_slope(pym: float, shade: float) -> float:
    """Slope that places the equivalence for ``pym`` exactly at ``shade``."""
    if not pym > 1 or not 0 < shade <= 1:
        raise DomainError("need pym > 1 and shade in (0, 1]")
    return (1.0 - 1.0 / pym) / shade
