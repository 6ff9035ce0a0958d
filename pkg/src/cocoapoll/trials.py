"""Hand-pollination field trials: tree-level records, PYM and loss rates.

Each row is one tree. ``fruit_set_48h`` counts flowers still attached two
days after pollination; the later losses (cherelle wilt, Helopeltis damage,
Phytophthora black pod) and the harvested pods partition that set.
"""
from __future__ import annotations

import csv
import enum
import math
import statistics
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, ValidationError

TRIAL_COLUMNS = (
    "farm_id",
    "tree_id",
    "treatment",
    "assigned_rate",
    "flowers_open",
    "flowers_pollinated",
    "fruit_set_48h",
    "wilt_losses",
    "pest_losses",
    "disease_losses",
    "fruits_harvested",
    "dry_bean_kg",
)
_COUNT_COLUMNS = TRIAL_COLUMNS[4:11]

NATURAL_FRUIT_SET_BAND = (0.05, 0.10)


class Treatment(str, enum.Enum):
    HAND_POLLINATED = "hand_pollinated"
    OPEN_CONTROL = "open_control"


@dataclass(frozen=True)
class TrialRecord:
    farm_id: str
    tree_id: str
    treatment: Treatment
    assigned_rate: float
    flowers_open: int
    flowers_pollinated: int
    fruit_set_48h: int
    wilt_losses: int
    pest_losses: int
    disease_losses: int
    fruits_harvested: int
    dry_bean_kg: float | None

    def __post_init__(self):
        object.__setattr__(self, "treatment", Treatment(self.treatment))
        problems = self.problems()
        if problems:
            raise ValidationError(f"invalid trial record {self.farm_id}/{self.tree_id}", problems)

    def problems(self) -> list[str]:
        out = []
        if not str(self.farm_id).strip() or not str(self.tree_id).strip():
            out.append("farm_id and tree_id must be non-empty")
        for col in _COUNT_COLUMNS:
            if getattr(self, col) < 0:
                out.append(f"{col} must be >= 0")
        if not 0 <= self.assigned_rate <= 1:
            out.append(f"assigned_rate {self.assigned_rate} not in [0, 1]")
        if self.flowers_pollinated > self.flowers_open:
            out.append("flowers_pollinated exceeds flowers_open")
        if self.treatment is Treatment.HAND_POLLINATED:
            if self.fruit_set_48h > self.flowers_pollinated:
                out.append("fruit_set_48h exceeds flowers_pollinated")
        elif self.fruit_set_48h > self.flowers_open:
            out.append("fruit_set_48h exceeds flowers_open")
        fates = self.wilt_losses + self.pest_losses + self.disease_losses + self.fruits_harvested
        if fates > self.fruit_set_48h:
            out.append(f"losses plus harvested fruits ({fates}) exceed fruit_set_48h ({self.fruit_set_48h})")
        if self.dry_bean_kg is not None:
            if not math.isfinite(self.dry_bean_kg) or self.dry_bean_kg < 0:
                out.append("dry_bean_kg must be a finite number >= 0")
            elif self.fruits_harvested == 0 and self.dry_bean_kg > 0:
                out.append("dry_bean_kg > 0 but no fruits harvested")
        return out


def _row_to_record(rec: dict, row: int, issues: list) -> TrialRecord | None:
    bad = []
    vals = {}
    for col in _COUNT_COLUMNS:
        raw = (rec.get(col) or "").strip()
        try:
            vals[col] = int(raw)
        except ValueError:
            bad.append(f"row {row}, column {col!r}: {raw!r} is not an integer count")
    try:
        vals["assigned_rate"] = float(rec.get("assigned_rate") or "")
    except ValueError:
        bad.append(f"row {row}, column 'assigned_rate': {rec.get('assigned_rate')!r} is not a number")
    raw_dry = (rec.get("dry_bean_kg") or "").strip()
    if raw_dry:
        try:
            vals["dry_bean_kg"] = float(raw_dry)
        except ValueError:
            bad.append(f"row {row}, column 'dry_bean_kg': {raw_dry!r} is not a number")
    else:
        vals["dry_bean_kg"] = None
    treatment = (rec.get("treatment") or "").strip().lower()
    if treatment not in {t.value for t in Treatment}:
        bad.append(f"row {row}, column 'treatment': {rec.get('treatment')!r} is not one of hand_pollinated, open_control")
    if bad:
        issues.extend(bad)
        return None
    try:
        return TrialRecord(
            farm_id=(rec.get("farm_id") or "").strip(),
            tree_id=(rec.get("tree_id") or "").strip(),
            treatment=Treatment(treatment),
            **vals,
        )
    except ValidationError as exc:
        issues.extend(f"row {row}: {msg}" for msg in exc.issues)
        return None


def ingest_trials(source) -> list[TrialRecord]:
    """Read a trial CSV (path or text file). All bad rows are reported together."""
    fh = source if hasattr(source, "read") else open(source, newline="", encoding="utf-8")
    try:
        reader = csv.DictReader(fh)
        if not reader.fieldnames:
            raise ValidationError("trial file is empty")
        missing = [c for c in TRIAL_COLUMNS if c not in reader.fieldnames]
        if missing:
            raise ValidationError("trial file header is missing columns", [f"missing column {c!r}" for c in missing])
        records, issues = [], []
        for rec in reader:
            r = _row_to_record(rec, reader.line_num, issues)
            if r is not None:
                records.append(r)
        if issues:
            raise ValidationError("invalid trial records", issues)
        if not records:
            raise ValidationError("trial file has a header but no records")
        return records
    finally:
        if fh is not source:
            fh.close()


def write_trials(records: Iterable[TrialRecord], dest) -> None:
    fh = dest if hasattr(dest, "write") else open(dest, "w", newline="", encoding="utf-8")
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(TRIAL_COLUMNS)
        for r in records:
            w.writerow([
                r.farm_id,
                r.tree_id,
                r.treatment.value,
                repr(r.assigned_rate),
                *(getattr(r, c) for c in _COUNT_COLUMNS),
                "" if r.dry_bean_kg is None else repr(r.dry_bean_kg),
            ])
    finally:
        if fh is not dest:
            fh.close()


# -- estimators ---------------------------------------------------------------


@dataclass(frozen=True)
class PymEstimate:
    pym: float
    n_treated: int
    n_control: int
    mean_treated_kg: float
    mean_control_kg: float
    sd_treated_kg: float | None
    sd_control_kg: float | None
    per_farm: dict


def _weights(records, treatment):
    return [r.dry_bean_kg for r in records if r.treatment is treatment and r.dry_bean_kg is not None]


def _sd(xs):
    return statistics.stdev(xs) if len(xs) > 1 else None


def estimate_pym(records: Sequence[TrialRecord]) -> PymEstimate:
    """Ratio of mean dry-bean yield per tree, hand-pollinated over open control.

    Per-farm ratios are reported for farms that have both groups and a
    non-zero control mean.
    """
    treated = _weights(records, Treatment.HAND_POLLINATED)
    control = _weights(records, Treatment.OPEN_CONTROL)
    if not treated or not control:
        raise DomainError(
            f"insufficient data: {len(treated)} hand-pollinated and {len(control)} control trees with dry weight"
        )
    mt, mc = statistics.fmean(treated), statistics.fmean(control)
    if mc == 0:
        raise DomainError("control mean dry yield is 0; multiplier undefined")

    by_farm = defaultdict(list)
    for r in records:
        by_farm[r.farm_id].append(r)
    per_farm = {}
    for farm in sorted(by_farm):
        t = _weights(by_farm[farm], Treatment.HAND_POLLINATED)
        c = _weights(by_farm[farm], Treatment.OPEN_CONTROL)
        if t and c and statistics.fmean(c) > 0:
            per_farm[farm] = statistics.fmean(t) / statistics.fmean(c)

    return PymEstimate(
        pym=mt / mc,
        n_treated=len(treated),
        n_control=len(control),
        mean_treated_kg=mt,
        mean_control_kg=mc,
        sd_treated_kg=_sd(treated),
        sd_control_kg=_sd(control),
        per_farm=per_farm,
    )


@dataclass(frozen=True)
class TrialRates:
    """Rates over the hand-pollinated trees; ``None`` marks a zero denominator."""

    fruit_set_rate: float | None
    wilt_rate: float | None
    pest_rate: float | None
    disease_rate: float | None
    harvest_rate: float | None
    open_fruit_set_rate: float | None
    open_rate_in_natural_band: bool | None


def _ratio(num, den):
    return num / den if den else None


def trial_rates(records: Sequence[TrialRecord]) -> TrialRates:
    hand = [r for r in records if r.treatment is Treatment.HAND_POLLINATED]
    if not hand:
        raise DomainError("no hand-pollinated records")
    pollinated = sum(r.flowers_pollinated for r in hand)
    set_ = sum(r.fruit_set_48h for r in hand)

    ctrl = [r for r in records if r.treatment is Treatment.OPEN_CONTROL]
    open_rate = _ratio(sum(r.fruit_set_48h for r in ctrl), sum(r.flowers_open for r in ctrl))
    lo, hi = NATURAL_FRUIT_SET_BAND
    return TrialRates(
        fruit_set_rate=_ratio(set_, pollinated),
        wilt_rate=_ratio(sum(r.wilt_losses for r in hand), set_),
        pest_rate=_ratio(sum(r.pest_losses for r in hand), set_),
        disease_rate=_ratio(sum(r.disease_losses for r in hand), set_),
        harvest_rate=_ratio(sum(r.fruits_harvested for r in hand), set_),
        open_fruit_set_rate=open_rate,
        open_rate_in_natural_band=None if open_rate is None else lo <= open_rate <= hi,
    )
