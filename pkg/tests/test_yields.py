import pytest
from hypothesis import assume, given, strategies as st

from cocoapoll import DomainError, ShadeYieldModel, apply_pym, country_addition, shade_equivalent
from cocoapoll.yields import calibrate_slope


@pytest.mark.parametrize("y,pym,expected", [(273.19, 2.6, 710.29), (431.30, 3.3, 1423.29)])
def test_apply_pym_published(y, pym, expected):
    assert apply_pym(y, pym) == pytest.approx(expected, abs=0.005)


@given(st.floats(min_value=0, max_value=1e5))
def test_apply_pym_identity(x):
    assert apply_pym(x, 1.0) == x


def test_apply_pym_rejects_reduction():
    with pytest.raises(DomainError):
        apply_pym(100, 0.99)


@given(st.floats(min_value=1e-3, max_value=1e4), st.floats(min_value=1, max_value=10),
       st.floats(min_value=1e-3, max_value=1))
def test_apply_pym_strictly_increasing(y, pym, eps):
    assert apply_pym(y + eps, pym) > apply_pym(y, pym)
    assert apply_pym(y, pym + eps) > apply_pym(y, pym)


@pytest.mark.parametrize("key,pym,expected", [("ivory_coast", 2.6, 311_555.06),
                                              ("indonesia", 3.3, 421_930.79)])
def test_country_addition_published(by_key, key, pym, expected):
    assert country_addition(by_key[key], pym, 0.25) == pytest.approx(expected, rel=1e-6)


@given(st.floats(min_value=0, max_value=1))
def test_country_addition_no_pollination(by_key, a):
    assert country_addition(by_key["ghana"], 1.0, a) == 0


@given(st.floats(min_value=0, max_value=1), st.floats(min_value=0, max_value=1),
       st.floats(min_value=1, max_value=6))
def test_country_addition_linear_in_adoption(by_key, a1, a2, pym):
    assume(a1 + a2 <= 1)
    p = by_key["ivory_coast"]
    assert country_addition(p, pym, a1 + a2) == pytest.approx(
        country_addition(p, pym, a1) + country_addition(p, pym, a2), rel=1e-12, abs=1e-6)


def _bisect_shade(pym, slope):
    # independent oracle: root of pym * (1 - slope * s) - 1 on [0, 2]
    lo, hi = 0.0, 2.0
    f = lambda s: pym * (1 - slope * s) - 1
    for _ in range(200):
        mid = (lo + hi) / 2
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


@pytest.mark.parametrize("pym", [2.6, 3.3])
def test_shade_equivalent_matches_bisection(pym):
    m = ShadeYieldModel(slope=0.962)
    assert shade_equivalent(pym, m).shade == pytest.approx(_bisect_shade(pym, 0.962), abs=1e-12)


def test_shade_anchor_values():
    m = ShadeYieldModel(slope=0.962)
    assert round(shade_equivalent(2.6, m).shade, 3) == 0.640
    assert abs(shade_equivalent(3.3, m).shade - 0.72) <= 0.005


def test_shade_equivalent_no_multiplier():
    assert shade_equivalent(1.0, ShadeYieldModel(slope=0.5)).shade == 0.0


def test_shade_equivalent_beyond_full_shade_is_flagged():
    eq = shade_equivalent(10.0, ShadeYieldModel(slope=0.5))
    assert eq.shade > 1 and eq.exceeds_full_shade


def test_shade_slope_must_be_positive():
    with pytest.raises(DomainError):
        ShadeYieldModel(slope=0.0)


def test_calibrate_slope_hits_anchor_exactly():
    slope = calibrate_slope(2.6, 0.64)
    assert shade_equivalent(2.6, ShadeYieldModel(slope=slope)).shade == pytest.approx(0.64, abs=1e-15)


@given(st.floats(min_value=1, max_value=50), st.floats(min_value=0.05, max_value=5))
def test_shade_roundtrip_identity(pym, slope):
    s = shade_equivalent(pym, ShadeYieldModel(slope=slope)).shade
    assert pym * (1 - slope * s) == pytest.approx(1.0, rel=1e-12)


@given(st.floats(min_value=1, max_value=20), st.floats(min_value=1e-3, max_value=1))
def test_shade_increasing_in_pym(pym, eps):
    m = ShadeYieldModel()
    assert shade_equivalent(pym + eps, m).shade > shade_equivalent(pym, m).shade


def test_yield_at_respects_domain():
    m = ShadeYieldModel(y0_kg_ha=400, slope=0.962)
    assert m.yield_at(0.0) == 400
    # pollinated yield at the equivalence shade equals the unshaded yield
    s = shade_equivalent(2.6, m).shade
    assert m.yield_at(s, 2.6) == pytest.approx(400, rel=1e-12)
    with pytest.raises(DomainError):
        m.yield_at(1.5)
