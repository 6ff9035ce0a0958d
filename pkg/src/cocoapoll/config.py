"""Run configuration: bundled defaults overlaid by an optional JSON file."""
from __future__ import annotations

import copy
import json
from dataclasses import dataclass
from importlib import resources

from .core import MarketParams
from .errors import ValidationError
from .winwin import WinWinParams
from .yields import ShadeYieldModel


def _deep_merge(base: dict, override: dict) -> dict:
    out = copy.deepcopy(base)
    for k, v in override.items():
        if isinstance(v, dict) and isinstance(out.get(k), dict) and k != "maximum_table1_override":
            out[k] = _deep_merge(out[k], v)
        else:
            out[k] = v
    return out


def default_config_dict() -> dict:
    text = resources.files(__package__).joinpath("data/defaults.json").read_text("utf-8")
    return json.loads(text)


@dataclass(frozen=True)
class Config:
    raw: dict

    @classmethod
    def load(cls, path=None, overrides: dict | None = None) -> "Config":
        data = default_config_dict()
        if path is not None:
            try:
                with open(path, encoding="utf-8") as fh:
                    user = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ValidationError(f"config {path}: invalid JSON ({exc})") from None
            if not isinstance(user, dict):
                raise ValidationError(f"config {path}: top level must be an object")
            data = _deep_merge(data, user)
        if overrides:
            data = _deep_merge(data, overrides)
        cfg = cls(data)
        cfg.market  # validate eagerly
        return cfg

    @property
    def market(self) -> MarketParams:
        try:
            return MarketParams(**self.raw["market"])
        except TypeError as exc:
            raise ValidationError(f"config market section: {exc}") from None

    @property
    def pym_intermediate(self) -> float:
        return float(self.raw["pym"]["intermediate"])

    @property
    def pym_maximum(self) -> float:
        return float(self.raw["pym"]["maximum"])

    @property
    def pym_table1_override(self) -> dict:
        return dict(self.raw["pym"]["maximum_table1_override"])

    @property
    def adoption_rate(self) -> float:
        return float(self.raw["adoption_rate"])

    @property
    def published_long_term_prices(self) -> dict:
        return dict(self.raw["published_long_term_prices"])

    @property
    def shade_model(self) -> ShadeYieldModel:
        return ShadeYieldModel(
            y0_kg_ha=float(self.raw.get("shade_y0_kg_ha", 1.0)),
            slope=float(self.raw["shade_yield_slope"]),
        )

    @property
    def gridline_step(self) -> float:
        return float(self.raw.get("gridline_step_days", 10))

    @property
    def winwin(self) -> dict:
        return dict(self.raw["winwin"])

    def winwin_params(self, **overrides) -> WinWinParams:
        w = self.winwin
        kw = dict(
            conversion_share=w["conversion_share"],
            agroforestry_yield_penalty=w["agroforestry_yield_penalty"],
            suitability_decline_rate=w["suitability_decline_rate"],
            horizon_years=w["horizon_years"],
            loss_composition=w["loss_composition"],
        )
        kw.update({k: v for k, v in overrides.items() if v is not None})
        return WinWinParams(**kw)
