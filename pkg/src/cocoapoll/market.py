"""Long-run partial equilibrium of the world cocoa market.

A production shock ``delta`` (fraction of baseline world output) moves the
market along constant-elasticity supply and demand curves. With supply
elasticity ``es > 0`` and demand elasticity ``ed < 0``:

    price ratio   gp = (1 + delta) ** (1 / (ed - es))
    supply ratio  gs = (1 + delta) ** (ed / (ed - es))   (= gp ** ed)
    displaced     lam = delta - (gs - 1)
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .core import CountryProfile, MarketParams, ScenarioSpec
from .errors import DomainError
from .yields import country_addition


@dataclass(frozen=True)
class EquilibriumResult:
    delta: float
    gamma_p: float
    gamma_s: float
    lambda_: float
    new_price_usd_kg: float
    new_supply_t: float

    @property
    def price_change(self) -> float:
        return self.gamma_p - 1.0

    @property
    def supply_change(self) -> float:
        return self.gamma_s - 1.0


def _exponent_base(delta: float, market: MarketParams) -> tuple[float, float]:
    denom = market.demand_elasticity - market.supply_elasticity
    if not denom < 0:
        raise DomainError(
            f"degenerate elasticities: demand - supply = {denom} must be < 0"
        )
    if not delta > -1:
        raise DomainError(f"delta must be > -1, got {delta}")
    return math.log1p(delta), denom


def country_additions(
    profiles: Sequence[CountryProfile], spec: ScenarioSpec
) -> dict[str, float]:
    """Extra production per country (t), keyed by normalized name."""
    return {
        p.key: country_addition(p, spec.pym_for(p), spec.adoption_rate) for p in profiles
    }


def global_delta(
    profiles: Sequence[CountryProfile],
    spec: ScenarioSpec,
    market: MarketParams,
    loss_t: float = 0.0,
) -> float:
    """Fractional change in world production.

    ``loss_t`` is production lost elsewhere (e.g. agroforestry conversion);
    it is netted against the pollination additions.
    """
    added = sum(country_additions(profiles, spec).values())
    return (added - loss_t) / market.global_production_t


def price_ratio(delta: float, market: MarketParams) -> float:
    log1p, denom = _exponent_base(delta, market)
    return math.exp(log1p / denom)


def supply_ratio(delta: float, market: MarketParams) -> float:
    log1p, denom = _exponent_base(delta, market)
    return math.exp(market.demand_elasticity * log1p / denom)


def displaced_share(delta: float, gamma_s: float) -> float:
    """Share of original production whose producers exit the market."""
    return delta - (gamma_s - 1.0)


def equilibrium_from_delta(delta: float, market: MarketParams) -> EquilibriumResult:
    gp = price_ratio(delta, market)
    gs = supply_ratio(delta, market)
    return EquilibriumResult(
        delta=delta,
        gamma_p=gp,
        gamma_s=gs,
        lambda_=displaced_share(delta, gs),
        new_price_usd_kg=market.base_price_usd_kg * gp,
        new_supply_t=market.global_production_t * gs,
    )


def equilibrium(
    profiles: Sequence[CountryProfile],
    spec: ScenarioSpec,
    market: MarketParams,
    loss_t: float = 0.0,
) -> EquilibriumResult:
    return equilibrium_from_delta(global_delta(profiles, spec, market, loss_t), market)
