"""Maximum pollination days that still meet an income goal."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .core import CountryProfile
from .errors import DomainError
from .income import per_farmer_income

DOUBLE = 2.0
TEN_PERCENT = 1.1


@dataclass(frozen=True)
class BreakEven:
    days: float
    reachable: bool
    goal_income_usd: float


def breakeven_days(
    profile: CountryProfile,
    pym: float,
    price_usd_kg: float,
    goal_multiplier: float,
    baseline_price_usd_kg: float | None = None,
) -> BreakEven:
    """Solve ``income(d) = goal * income(no pollination)`` for ``d``.

    Income falls linearly in days, so the root is closed-form. The
    no-pollination reference is evaluated at ``baseline_price_usd_kg``
    (defaults to ``price_usd_kg``). When the goal is out of reach even at zero
    days the result is 0 with ``reachable=False``.
    """
    if not pym > 1:
        raise DomainError(f"pym must be > 1, got {pym}")
    if not goal_multiplier >= 1:
        raise DomainError(f"goal multiplier must be >= 1, got {goal_multiplier}")
    daily = profile.daily_pollination_cost_usd_ha
    if not daily > 0:
        raise DomainError("daily pollination cost is zero; no break-even exists")
    ref_price = price_usd_kg if baseline_price_usd_kg is None else baseline_price_usd_kg
    goal = goal_multiplier * per_farmer_income(profile, 1.0, ref_price, 0.0)
    at_zero = per_farmer_income(profile, pym, price_usd_kg, 0.0)
    slope = per_farmer_income(profile, pym, price_usd_kg, 1.0) - at_zero
    d = (goal - at_zero) / slope
    if d < 0:
        return BreakEven(0.0, False, goal)
    return BreakEven(d, True, goal)


def gridline_floor(days: float, step: float = 10) -> int:
    """Largest multiple of ``step`` not above ``days``."""
    if not step > 0:
        raise DomainError("step must be > 0")
    if days < step:
        return 0
    n = math.floor(days / step)
    if (n + 1) * step <= days:
        n += 1
    value = n * step
    return int(value) if value == int(value) else value
