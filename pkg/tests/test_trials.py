import dataclasses
import io
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from cocoapoll import DomainError, ValidationError, estimate_pym, ingest_trials, trial_rates
from cocoapoll.trials import TRIAL_COLUMNS, TrialRecord, write_trials

from strategies import record_sets, trial_records

HEADER = ",".join(TRIAL_COLUMNS)


def _file(*rows):
    return io.StringIO("\n".join([HEADER, *rows]) + "\n")


def rec(treatment="hand_pollinated", dry=1.0, farm="F01", tree="T1", **kw):
    base = dict(farm_id=farm, tree_id=tree, treatment=treatment, assigned_rate=0.5,
                flowers_open=100, flowers_pollinated=100, fruit_set_48h=40, wilt_losses=10,
                pest_losses=5, disease_losses=5, fruits_harvested=20, dry_bean_kg=dry)
    base.update(kw)
    return TrialRecord(**base)


def test_ingest_three_rows():
    f = _file("F01,T1,hand_pollinated,0.5,100,50,20,5,2,3,10,2.5",
              "F01,T2,open_control,0,100,0,8,2,1,1,4,1.0",
              "F02,T3,hand_pollinated,1.0,80,80,30,10,5,5,10,")
    records = ingest_trials(f)
    assert len(records) == 3
    assert records[2].dry_bean_kg is None


def test_fruit_set_above_pollinated_names_row():
    f = _file("F01,T1,hand_pollinated,0.5,100,50,20,5,2,3,10,2.5",
              "F01,T2,hand_pollinated,0.5,100,10,20,0,0,0,5,1.0")
    with pytest.raises(ValidationError) as exc:
        ingest_trials(f)
    assert exc.value.issues == ["row 3: fruit_set_48h exceeds flowers_pollinated"]


def test_dry_weight_without_harvest_rejected():
    with pytest.raises(ValidationError, match="invalid trial"):
        ingest_trials(_file("F01,T1,hand_pollinated,0.5,100,50,20,5,2,3,0,2.5"))


def test_all_bad_rows_reported_together():
    f = _file("F01,T1,hand_pollinated,0.5,100,50,20,5,2,3,10,2.5",
              "F01,T2,sprayed,0.5,100,50,20,5,2,3,10,2.5",
              "F01,T3,open_control,0.5,ten,50,20,5,2,3,10,2.5")
    with pytest.raises(ValidationError) as exc:
        ingest_trials(f)
    assert [i.split(",")[0] for i in exc.value.issues] == ["row 3", "row 4"]


def test_losses_exceeding_fruit_set_rejected():
    with pytest.raises(ValidationError, match="invalid"):
        rec(wilt_losses=30)


def test_empty_file_is_error():
    with pytest.raises(ValidationError):
        ingest_trials(io.StringIO(""))
    with pytest.raises(ValidationError):
        ingest_trials(_file())


def test_missing_column():
    with pytest.raises(ValidationError, match="missing"):
        ingest_trials(io.StringIO("farm_id,tree_id\nF,T\n"))


def test_estimate_published_ratio():
    records = [rec(dry=2.6, tree="a"), rec("open_control", dry=1.0, tree="b", flowers_pollinated=0,
                                             fruit_set_48h=20, wilt_losses=0, pest_losses=0, disease_losses=0)]
    assert estimate_pym(records).pym == pytest.approx(2.6, rel=1e-12)


def test_estimate_arithmetic_means():
    ctl = dict(treatment="open_control", flowers_pollinated=0)
    records = [rec(dry=2, tree="a"), rec(dry=4, tree="b"), rec(dry=1, tree="c", **ctl), rec(dry=1, tree="d", **ctl)]
    est = estimate_pym(records)
    assert est.pym == 3.0
    assert (est.n_treated, est.n_control) == (2, 2)
    assert est.sd_control_kg == 0
    assert est.per_farm == {"F01": 3.0}


def test_estimate_identity_for_equal_groups():
    treated = [rec(dry=d, tree=f"t{i}") for i, d in enumerate([1.2, 3.4, 0.7])]
    control = [dataclasses.replace(r, treatment="open_control") for r in treated]
    assert estimate_pym(treated + control).pym == 1.0


def test_estimate_errors():
    with pytest.raises(DomainError, match="insufficient"):
        estimate_pym([rec(dry=1.0)])
    with pytest.raises(DomainError, match="undefined"):
        estimate_pym([rec(dry=1.0), rec("open_control", dry=0.0, tree="b", flowers_pollinated=0)])


def test_rates_direct_ratio():
    r = trial_rates([rec(flowers_pollinated=100, fruit_set_48h=40, wilt_losses=0, pest_losses=0,
                         disease_losses=0, fruits_harvested=40)])
    assert r.fruit_set_rate == 0.40
    assert r.harvest_rate == 1.0
    assert r.wilt_rate == r.pest_rate == r.disease_rate == 0


def test_rates_zero_denominators_marked():
    r = trial_rates([rec(flowers_pollinated=0, fruit_set_48h=0, wilt_losses=0, pest_losses=0,
                         disease_losses=0, fruits_harvested=0, dry=0.0)])
    assert r.fruit_set_rate is None and r.harvest_rate is None
    assert r.open_fruit_set_rate is None and r.open_rate_in_natural_band is None


@pytest.mark.parametrize("set_per_100,in_band", [(5, True), (8, True), (10, True), (3, False), (12, False)])
def test_open_pollination_band_flag(set_per_100, in_band):
    ctl = rec("open_control", flowers_pollinated=0, fruit_set_48h=set_per_100, wilt_losses=0,
              pest_losses=0, disease_losses=0, fruits_harvested=set_per_100, tree="c")
    r = trial_rates([rec(), ctl])
    assert r.open_fruit_set_rate == set_per_100 / 100
    assert r.open_rate_in_natural_band is in_band


def test_rates_need_hand_pollinated():
    with pytest.raises(DomainError):
        trial_rates([rec("open_control", flowers_pollinated=0)])


def test_bundled_example_trial_file():
    path = Path(__file__).parent / "data" / "trials_example.csv"
    records = ingest_trials(path)
    est = estimate_pym(records)
    assert est.pym == pytest.approx(2.6, rel=1e-12)


@given(st.lists(trial_records(), min_size=1, max_size=20))
def test_roundtrip(records):
    buf = io.StringIO()
    write_trials(records, buf)
    buf.seek(0)
    assert ingest_trials(buf) == records


@given(record_sets(), st.floats(0.1, 10))
def test_scale_equivariance(records, k):
    def scaled(r, group):
        if r.treatment.value == group and r.dry_bean_kg is not None:
            return dataclasses.replace(r, dry_bean_kg=r.dry_bean_kg * k)
        return r
    base = estimate_pym(records).pym
    up = estimate_pym([scaled(r, "hand_pollinated") for r in records]).pym
    down = estimate_pym([scaled(r, "open_control") for r in records]).pym
    assert up == pytest.approx(k * base, rel=1e-9)
    assert down == pytest.approx(base / k, rel=1e-9)


@given(st.lists(trial_records(treatment="hand_pollinated"), min_size=1, max_size=15))
def test_rate_bounds(records):
    r = trial_rates(records)
    shares = [r.wilt_rate, r.pest_rate, r.disease_rate, r.harvest_rate]
    for v in [r.fruit_set_rate, *shares]:
        assert v is None or 0 <= v <= 1
    if shares[0] is not None:
        assert sum(shares) <= 1 + 1e-12
