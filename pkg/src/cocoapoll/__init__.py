"""Scenario engine for manual cocoa pollination: yields, world market, farm income."""

from .breakeven import BreakEven, breakeven_days, gridline_floor
from .core import (
    CountryProfile,
    InputCosts,
    MarketParams,
    PriceMode,
    ScenarioSpec,
    baseline_production,
    farm_area_per_farmer,
    load_profiles,
    write_profiles,
)
from .errors import ConfigurationError, DomainError, InfeasibleError, ValidationError
from .income import IncomeStatement, gross_income, income_statement, pollination_opcost
from .market import (
    EquilibriumResult,
    displaced_share,
    equilibrium,
    global_delta,
    price_ratio,
    supply_ratio,
)
from .trials import TrialRecord, estimate_pym, ingest_trials, trial_rates
from .winwin import WinWinParams, compensating_adoption, required_compensation
from .yields import ShadeYieldModel, apply_pym, country_addition, shade_equivalent

__version__ = "0.1.0"
