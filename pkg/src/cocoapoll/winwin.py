"""Win-win scenario: pollination only offsets conversion and suitability losses."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .core import CountryProfile, baseline_production
from .errors import DomainError, InfeasibleError, ValidationError


# requests this close above capacity (tonnes rounded for reporting) count as full adoption
CAPACITY_RTOL = 1e-6


class LossComposition(str, enum.Enum):
    COMPOUND = "compound"
    ADDITIVE = "additive"


@dataclass(frozen=True)
class WinWinParams:
    conversion_share: float = 1.0
    agroforestry_yield_penalty: float = 0.4
    suitability_decline_rate: float = 0.004
    horizon_years: float = 0.0
    loss_composition: LossComposition = LossComposition.COMPOUND
    encroachment: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "loss_composition", LossComposition(self.loss_composition))
        for name in ("conversion_share", "agroforestry_yield_penalty", "suitability_decline_rate"):
            v = getattr(self, name)
            if not 0 <= v <= 1:
                raise ValidationError(f"{name} {v} not in [0, 1]")
        if self.horizon_years < 0:
            raise ValidationError("horizon_years must be >= 0")
        if self.encroachment != 0:
            raise ValidationError("the win-win scenario assumes zero encroachment")

    @property
    def suitability_loss(self) -> float:
        """Cumulative fraction of production lost to declining suitability."""
        return 1.0 - (1.0 - self.suitability_decline_rate) ** self.horizon_years

    @property
    def conversion_loss(self) -> float:
        return self.agroforestry_yield_penalty * self.conversion_share


def required_compensation(base_production_t: float, params: WinWinParams) -> float:
    """Production (t) that pollination must add back to keep supply unchanged."""
    if base_production_t < 0:
        raise DomainError("base production must be >= 0")
    conv, suit = params.conversion_loss, params.suitability_loss
    if params.loss_composition is LossComposition.COMPOUND:
        frac = 1.0 - (1.0 - conv) * (1.0 - suit)
    else:
        frac = conv + suit
    return base_production_t * frac


def pollination_capacity(profiles: Sequence[CountryProfile], pym: float) -> float:
    """Extra production (t) at full adoption."""
    return sum(baseline_production(p) for p in profiles) * (pym - 1.0)


def compensating_adoption(
    required_t: float, profiles: Sequence[CountryProfile], pym: float
) -> float:
    """Adoption rate whose pollination gain equals ``required_t``.

    Raises :class:`InfeasibleError` when more than full adoption is needed,
    allowing ``CAPACITY_RTOL`` relative slack for rounded tonnages.
    """
    if not pym > 1:
        raise DomainError(f"pym must be > 1, got {pym}")
    if required_t < 0:
        raise DomainError("required compensation must be >= 0")
    capacity = pollination_capacity(profiles, pym)
    adoption = required_t / capacity
    if adoption > 1.0 + CAPACITY_RTOL:
        raise InfeasibleError(
            f"compensation of {required_t:,.0f} t needs adoption {adoption:.3f} > 1 at pym {pym}",
            required_adoption=adoption,
            shortfall_t=required_t - capacity,
        )
    return min(adoption, 1.0)


def winwin_base(global_production_t: float, share: float) -> float:
    """Three-country production taken as a share of world output."""
    return global_production_t * share
