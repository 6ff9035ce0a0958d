import pytest
from hypothesis import given, strategies as st

from cocoapoll import DomainError, breakeven_days, gridline_floor
from cocoapoll.breakeven import DOUBLE, TEN_PERCENT
from cocoapoll.income import per_farmer_income


def _scan(p, pym, price, goal, step=1e-3, limit=400):
    # brute-force oracle: walk days upward until income drops below the goal
    target = goal * per_farmer_income(p, 1.0, price, 0)
    d = 0.0
    if per_farmer_income(p, pym, price, 0) < target:
        return 0.0
    while per_farmer_income(p, pym, price, d + step) >= target and d < limit:
        d += step
    return d


@pytest.mark.parametrize("key,pym,expected", [("ivory_coast", 3.3, 81.5), ("ghana", 2.6, 26.0),
                                              ("indonesia", 2.6, 67.5)])
def test_breakeven_derived_examples(by_key, key, pym, expected):
    assert breakeven_days(by_key[key], pym, 2.28, DOUBLE).days == pytest.approx(expected, abs=0.1)


@pytest.mark.parametrize("key", ["ivory_coast", "ghana", "indonesia"])
@pytest.mark.parametrize("pym", [2.6, 3.3])
@pytest.mark.parametrize("goal", [DOUBLE, TEN_PERCENT])
def test_breakeven_matches_brute_force(by_key, key, pym, goal):
    p = by_key[key]
    assert breakeven_days(p, pym, 2.28, goal).days == pytest.approx(_scan(p, pym, 2.28, goal), abs=2e-3)


@pytest.mark.parametrize("key", ["ivory_coast", "ghana", "indonesia"])
def test_verification_identity(by_key, key):
    p = by_key[key]
    be = breakeven_days(p, 3.3, 1.61, DOUBLE)
    assert per_farmer_income(p, 3.3, 1.61, be.days) == pytest.approx(be.goal_income_usd, rel=1e-9)


def test_unreachable_goal_returns_zero(by_key):
    be = breakeven_days(by_key["ghana"], 1.01, 2.28, DOUBLE)
    assert be.days == 0 and not be.reachable


def test_goal_exactly_met_at_zero_days(by_key):
    p = by_key["ivory_coast"]
    # pick the multiplier whose gross gain equals the doubling gain
    base = per_farmer_income(p, 1.0, 2.28, 0)
    pym = 1 + base / (per_farmer_income(p, 2.0, 2.28, 0) - base)
    assert breakeven_days(p, pym, 2.28, DOUBLE).days == pytest.approx(0, abs=1e-9)


def test_zero_daily_cost_is_domain_error(by_key):
    import dataclasses
    p = dataclasses.replace(by_key["ghana"], pollination_wage_per_day=0.0)
    with pytest.raises(DomainError):
        breakeven_days(p, 2.6, 2.28, DOUBLE)


def test_precondition_errors(by_key):
    with pytest.raises(DomainError):
        breakeven_days(by_key["ghana"], 1.0, 2.28, DOUBLE)
    with pytest.raises(DomainError):
        breakeven_days(by_key["ghana"], 2.6, 2.28, 0.9)


@pytest.mark.parametrize("days,expected", [(81.5, 80), (39.4, 30), (9.9, 0), (10.0, 10), (0, 0)])
def test_gridline_floor(days, expected):
    assert gridline_floor(days, 10) == expected


def test_gridline_floor_bad_step():
    with pytest.raises(DomainError):
        gridline_floor(5, 0)


keys = st.sampled_from(["ivory_coast", "ghana", "indonesia"])


@given(keys, st.floats(1.5, 5), st.floats(1.0, 3.0), st.floats(1.0, 3.0), st.floats(1e-3, 0.5))
def test_monotonicity(by_key, key, pym, price, goal, eps):
    p = by_key[key]
    d = breakeven_days(p, pym, price, goal).days
    assert breakeven_days(p, pym, price, goal + eps).days <= d
    assert breakeven_days(p, pym + eps, price, goal).days >= d
    # price raises the reference too, so hold the reference price fixed
    assert breakeven_days(p, pym, price + eps, goal, baseline_price_usd_kg=price).days >= d
