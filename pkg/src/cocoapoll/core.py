"""Domain model: country profiles, market parameters and scenario specs.

Profiles are read from a flat CSV (one row per producer country). The bundled
default holds Ivory Coast, Ghana and Indonesia for the 2016 season.
"""
from __future__ import annotations

import csv
import enum
import io
import math
import os
import re
from dataclasses import dataclass
from importlib import resources
from typing import IO, Iterable, Mapping, Union

from .errors import ConfigurationError, DomainError, ValidationError

PROFILE_COLUMNS = (
    "name",
    "area_harvested_ha",
    "yield_dry_no_poll_kg_ha",
    "trees_per_ha",
    "farmer_count",
    "smallholder_share",
    "cost_fertilizer",
    "cost_insecticide",
    "cost_herbicide",
    "cost_fungicide",
    "cost_farm_labour",
    "pollination_wage_per_day",
    "trees_per_worker_day",
)

INPUT_COST_KINDS = ("fertilizer", "insecticide", "herbicide", "fungicide")


def normalize_name(name: str) -> str:
    """Case-insensitive key for a country name: ``"Ivory Coast"`` -> ``"ivory_coast"``."""
    key = re.sub(r"[\s\-]+", "_", name.strip().lower())
    return key.strip("_")


@dataclass(frozen=True)
class InputCosts:
    """Farm input costs in USD/ha/yr."""

    fertilizer: float = 0.0
    insecticide: float = 0.0
    herbicide: float = 0.0
    fungicide: float = 0.0

    @property
    def total(self) -> float:
        return self.fertilizer + self.insecticide + self.herbicide + self.fungicide

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in INPUT_COST_KINDS}


@dataclass(frozen=True)
class CountryProfile:
    """Production, agronomic and cost parameters of one producer country."""

    name: str
    area_harvested_ha: float
    yield_dry_no_poll_kg_ha: float
    trees_per_ha: float
    farmer_count: int
    smallholder_share: float
    input_costs: InputCosts
    farm_labour_cost: float
    pollination_wage_per_day: float
    trees_per_worker_day: float

    def __post_init__(self):
        problems = _profile_problems(self)
        if problems:
            raise ValidationError(f"invalid profile {self.name!r}", problems)

    @property
    def key(self) -> str:
        return normalize_name(self.name)

    @property
    def farm_opcost_usd_ha(self) -> float:
        """Input costs plus farm labour, USD/ha/yr."""
        return self.input_costs.total + self.farm_labour_cost

    @property
    def daily_pollination_cost_usd_ha(self) -> float:
        """Wage bill for pollinating one hectare for one day."""
        return self.trees_per_ha / self.trees_per_worker_day * self.pollination_wage_per_day


def _profile_problems(p: CountryProfile) -> list[str]:
    out = []
    if not p.name or not normalize_name(p.name):
        out.append("name: must be non-empty")
    numeric = {
        "area_harvested_ha": p.area_harvested_ha,
        "yield_dry_no_poll_kg_ha": p.yield_dry_no_poll_kg_ha,
        "trees_per_ha": p.trees_per_ha,
        "farmer_count": p.farmer_count,
        "smallholder_share": p.smallholder_share,
        "cost_farm_labour": p.farm_labour_cost,
        "pollination_wage_per_day": p.pollination_wage_per_day,
        "trees_per_worker_day": p.trees_per_worker_day,
    }
    numeric.update({f"cost_{k}": v for k, v in p.input_costs.as_dict().items()})
    for col, value in numeric.items():
        if not isinstance(value, (int, float)) or not math.isfinite(value):
            out.append(f"{col}: {value!r} is not a finite number")
        elif value < 0:
            out.append(f"{col}: {value} must be >= 0")
    if out:
        return out
    if p.area_harvested_ha <= 0:
        out.append("area_harvested_ha: must be > 0")
    if p.trees_per_worker_day <= 0:
        out.append("trees_per_worker_day: must be > 0")
    if not 0 < p.smallholder_share <= 1:
        out.append(f"smallholder_share: {p.smallholder_share} not in (0, 1]")
    if p.farmer_count <= 0:
        out.append("farmer_count: must be > 0")
    return out


@dataclass(frozen=True)
class MarketParams:
    """Global market baseline and long-run elasticities."""

    global_production_t: float = 4_466_574.0
    base_price_usd_kg: float = 2.28
    supply_elasticity: float = 0.57
    demand_elasticity: float = -0.34

    def __post_init__(self):
        if self.global_production_t <= 0 or self.base_price_usd_kg <= 0:
            raise ValidationError("global production and base price must be > 0")
        if self.supply_elasticity <= 0:
            raise ValidationError("supply elasticity must be > 0")
        if self.demand_elasticity >= 0:
            raise ValidationError("demand elasticity must be < 0")


class PriceMode(str, enum.Enum):
    SHORT_TERM = "short_term"
    LONG_TERM = "long_term"
    EXPLICIT = "explicit"

    @classmethod
    def parse(cls, value: Union[str, "PriceMode"]) -> "PriceMode":
        if isinstance(value, cls):
            return value
        aliases = {"short": cls.SHORT_TERM, "long": cls.LONG_TERM}
        v = str(value).strip().lower().replace("-", "_")
        if v in aliases:
            return aliases[v]
        try:
            return cls(v)
        except ValueError:
            raise ValidationError(f"unknown price mode {value!r}") from None


@dataclass(frozen=True)
class ScenarioSpec:
    """A pollination scenario.

    ``pym`` is either one multiplier applied to every country or a mapping
    from (normalized) country name to multiplier.
    """

    pym: Union[float, Mapping[str, float]] = 1.0
    adoption_rate: float = 0.25
    pollination_days: int = 0
    price_mode: PriceMode = PriceMode.SHORT_TERM
    price_usd_kg: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "price_mode", PriceMode.parse(self.price_mode))
        if isinstance(self.pym, Mapping):
            pym = {normalize_name(k): float(v) for k, v in self.pym.items()}
            object.__setattr__(self, "pym", pym)
            values = pym.values()
        else:
            values = [self.pym]
        for v in values:
            if not v >= 1:
                raise ValidationError(f"pym must be >= 1, got {v}")
        if not 0 <= self.adoption_rate <= 1:
            raise ValidationError(f"adoption_rate {self.adoption_rate} not in [0, 1]")
        if self.pollination_days < 0 or int(self.pollination_days) != self.pollination_days:
            raise ValidationError("pollination_days must be a non-negative integer")
        if self.price_mode is PriceMode.EXPLICIT and not (
            self.price_usd_kg is not None and self.price_usd_kg > 0
        ):
            raise ValidationError("explicit price mode needs a positive price_usd_kg")

    def pym_for(self, country: Union[str, CountryProfile]) -> float:
        key = country.key if isinstance(country, CountryProfile) else normalize_name(country)
        if isinstance(self.pym, Mapping):
            try:
                return self.pym[key]
            except KeyError:
                raise ConfigurationError(f"no pym configured for country {key!r}") from None
        return float(self.pym)


def baseline_production(profile: CountryProfile) -> float:
    """National production without pollination, tonnes."""
    return profile.area_harvested_ha * profile.yield_dry_no_poll_kg_ha / 1000.0


def farm_area_per_farmer(profile: CountryProfile) -> float:
    """Smallholder hectares per farmer."""
    if profile.farmer_count <= 0:
        raise DomainError("farmer_count must be > 0")
    return profile.area_harvested_ha * profile.smallholder_share / profile.farmer_count


# -- CSV I/O ------------------------------------------------------------------

Source = Union[str, os.PathLike, IO[str], None]


def _open_text(source):
    if hasattr(source, "read"):
        return source, False
    return open(source, newline="", encoding="utf-8"), True


def _parse_number(raw: str, row: int, col: str, issues: list) -> float | None:
    text = (raw or "").strip()
    try:
        value = float(text)
    except ValueError:
        issues.append(f"row {row}, column {col!r}: {raw!r} is not a number")
        return None
    if not math.isfinite(value):
        issues.append(f"row {row}, column {col!r}: {raw!r} is not finite")
        return None
    return value


def load_profiles(source: Source = None) -> list[CountryProfile]:
    """Read and validate country profiles.

    ``source`` may be a path, an open text file, or None for the bundled
    three-country dataset. All schema and invariant problems are collected
    and raised together as one :class:`ValidationError`.
    """
    if source is None:
        text = resources.files(__package__).joinpath("data/profiles.csv").read_text("utf-8")
        source = io.StringIO(text)
    fh, close = _open_text(source)
    try:
        reader = csv.DictReader(fh)
        header = reader.fieldnames
        if not header:
            raise ValidationError("profile file is empty or has no header")
        missing = [c for c in PROFILE_COLUMNS if c not in header]
        if missing:
            raise ValidationError("profile file header is missing columns", [f"missing column {c!r}" for c in missing])

        profiles, issues, seen = [], [], {}
        for rec in reader:
            row = reader.line_num
            vals = {}
            for col in PROFILE_COLUMNS[1:]:
                vals[col] = _parse_number(rec.get(col), row, col, issues)
            name = (rec.get("name") or "").strip()
            if not name:
                issues.append(f"row {row}, column 'name': empty")
                continue
            if any(v is None for v in vals.values()):
                continue
            key = normalize_name(name)
            if key in seen:
                issues.append(f"row {row}, column 'name': duplicate country {name!r} (first at row {seen[key]})")
                continue
            seen[key] = row
            fc = vals["farmer_count"]
            if fc != int(fc):
                issues.append(f"row {row}, column 'farmer_count': {fc} is not an integer")
                continue
            try:
                profiles.append(
                    CountryProfile(
                        name=name,
                        area_harvested_ha=vals["area_harvested_ha"],
                        yield_dry_no_poll_kg_ha=vals["yield_dry_no_poll_kg_ha"],
                        trees_per_ha=vals["trees_per_ha"],
                        farmer_count=int(fc),
                        smallholder_share=vals["smallholder_share"],
                        input_costs=InputCosts(
                            fertilizer=vals["cost_fertilizer"],
                            insecticide=vals["cost_insecticide"],
                            herbicide=vals["cost_herbicide"],
                            fungicide=vals["cost_fungicide"],
                        ),
                        farm_labour_cost=vals["cost_farm_labour"],
                        pollination_wage_per_day=vals["pollination_wage_per_day"],
                        trees_per_worker_day=vals["trees_per_worker_day"],
                    )
                )
            except ValidationError as exc:
                issues.extend(f"row {row}, column {i}" for i in exc.issues)
        if issues:
            raise ValidationError("invalid country profiles", issues)
        if not profiles:
            raise ValidationError("profile file contains no rows")
        return profiles
    finally:
        if close:
            fh.close()


def profile_row(p: CountryProfile) -> dict:
    return {
        "name": p.name,
        "area_harvested_ha": p.area_harvested_ha,
        "yield_dry_no_poll_kg_ha": p.yield_dry_no_poll_kg_ha,
        "trees_per_ha": p.trees_per_ha,
        "farmer_count": p.farmer_count,
        "smallholder_share": p.smallholder_share,
        **{f"cost_{k}": v for k, v in p.input_costs.as_dict().items()},
        "cost_farm_labour": p.farm_labour_cost,
        "pollination_wage_per_day": p.pollination_wage_per_day,
        "trees_per_worker_day": p.trees_per_worker_day,
    }


def write_profiles(profiles: Iterable[CountryProfile], dest) -> None:
    """Write profiles in the loadable CSV schema (floats via ``repr``, lossless)."""
    fh, close = (dest, False) if hasattr(dest, "write") else (open(dest, "w", newline="", encoding="utf-8"), True)
    try:
        w = csv.DictWriter(fh, fieldnames=PROFILE_COLUMNS, lineterminator="\n")
        w.writeheader()
        for p in profiles:
            w.writerow({k: repr(v) if isinstance(v, float) else v for k, v in profile_row(p).items()})
    finally:
        if close:
            fh.close()


def profiles_by_key(profiles: Iterable[CountryProfile]) -> dict[str, CountryProfile]:
    return {p.key: p for p in profiles}


def get_profile(profiles: Iterable[CountryProfile], name: str) -> CountryProfile:
    table = profiles_by_key(profiles)
    key = normalize_name(name)
    if key not in table:
        raise ConfigurationError(f"unknown country {name!r}; known: {', '.join(sorted(table))}")
    return table[key]
