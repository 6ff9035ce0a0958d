"""Per-hectare, national and per-farmer income under a pollination scenario."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    CountryProfile,
    MarketParams,
    PriceMode,
    ScenarioSpec,
    farm_area_per_farmer,
)
from .errors import DomainError
from .market import equilibrium
from .yields import apply_pym

STATEMENT_COLUMNS = (
    "country",
    "scenario",
    "days",
    "price_mode",
    "price",
    "gross_ha",
    "opcost_farm_ha",
    "opcost_poll_ha",
    "net_ha",
    "national",
    "per_farmer",
    "pct_change",
)


@dataclass(frozen=True)
class IncomeStatement:
    country: str
    pym: float
    days: int
    price_used_usd_kg: float
    gross_usd_ha: float
    opcost_farm_usd_ha: float
    opcost_poll_usd_ha: float
    net_usd_ha: float
    national_usd: float
    per_farmer_usd: float


def gross_income(yield_kg_ha: float, price_usd_kg: float) -> float:
    if yield_kg_ha < 0 or price_usd_kg < 0:
        raise DomainError("yield and price must be >= 0")
    return yield_kg_ha * price_usd_kg


def pollination_opcost(profile: CountryProfile, days: int) -> float:
    """Hand-pollination wage bill per hectare over ``days`` of work."""
    if days < 0:
        raise DomainError(f"days must be >= 0, got {days}")
    if profile.trees_per_worker_day <= 0:
        raise DomainError("trees_per_worker_day must be > 0")
    return profile.daily_pollination_cost_usd_ha * days


def income_statement(
    profile: CountryProfile, spec: ScenarioSpec, price_usd_kg: float
) -> IncomeStatement:
    if not price_usd_kg > 0:
        raise DomainError(f"price must be > 0, got {price_usd_kg}")
    pym = spec.pym_for(profile)
    days = int(spec.pollination_days) if pym > 1 else 0
    gross = gross_income(apply_pym(profile.yield_dry_no_poll_kg_ha, pym), price_usd_kg)
    farm = profile.farm_opcost_usd_ha
    poll = pollination_opcost(profile, days)
    net = gross - farm - poll
    national = net * profile.area_harvested_ha * profile.smallholder_share
    return IncomeStatement(
        country=profile.name,
        pym=pym,
        days=days,
        price_used_usd_kg=price_usd_kg,
        gross_usd_ha=gross,
        opcost_farm_usd_ha=farm,
        opcost_poll_usd_ha=poll,
        net_usd_ha=net,
        national_usd=national,
        per_farmer_usd=national / profile.farmer_count,
    )


def baseline_statement(profile: CountryProfile, price_usd_kg: float) -> IncomeStatement:
    """No-pollination statement (pym 1, zero days)."""
    return income_statement(profile, ScenarioSpec(pym=1.0, pollination_days=0), price_usd_kg)


def pct_change(statement: IncomeStatement, baseline: IncomeStatement) -> float:
    """Per-farmer income change in percent against ``baseline``."""
    return 100.0 * (statement.per_farmer_usd / baseline.per_farmer_usd - 1.0)


def per_farmer_income(
    profile: CountryProfile, pym: float, price_usd_kg: float, days: float
) -> float:
    """Per-farmer income as a continuous function of pollination days.

    Same arithmetic as :func:`income_statement` but accepts real-valued days,
    which the break-even solver needs.
    """
    net = (
        apply_pym(profile.yield_dry_no_poll_kg_ha, pym) * price_usd_kg
        - profile.farm_opcost_usd_ha
        - profile.daily_pollination_cost_usd_ha * days
    )
    return net * farm_area_per_farmer(profile)


def scenario_price(
    spec: ScenarioSpec,
    market: MarketParams,
    profiles: Sequence[CountryProfile] = (),
) -> float:
    """Price a scenario is evaluated at, according to its price mode."""
    if spec.price_mode is PriceMode.SHORT_TERM:
        return market.base_price_usd_kg
    if spec.price_mode is PriceMode.EXPLICIT:
        return float(spec.price_usd_kg)
    if not profiles:
        raise DomainError("long-term price needs the producer profiles to compute the shock")
    return equilibrium(profiles, spec, market).new_price_usd_kg


def statement_row(
    st: IncomeStatement, scenario: str, price_mode: str, baseline: IncomeStatement | None
) -> dict:
    return {
        "country": st.country,
        "scenario": scenario,
        "days": st.days,
        "price_mode": price_mode,
        "price": st.price_used_usd_kg,
        "gross_ha": st.gross_usd_ha,
        "opcost_farm_ha": st.opcost_farm_usd_ha,
        "opcost_poll_ha": st.opcost_poll_usd_ha,
        "net_ha": st.net_usd_ha,
        "national": st.national_usd,
        "per_farmer": st.per_farmer_usd,
        "pct_change": pct_change(st, baseline) if baseline is not None else None,
    }
