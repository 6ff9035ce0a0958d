"""Command-line front end.

Usage:
    cocoapoll replicate [TARGET ...] [--out DIR] [--strict]
    cocoapoll scenario --country ghana --pym 3.3 --days 30 --price-mode short
    cocoapoll equilibrium --pym 2.6 --adoption 0.25
    cocoapoll breakeven --country indonesia --pym 2.6 --goal 2.0
    cocoapoll sweep --start 0 --stop 1 --step 0.25 --pym 2.6
    cocoapoll winwin --penalty 0.4 --conversion 1 --rate 0.004 --horizon 10
    cocoapoll ingest-trial trials.csv

Exit status: 0 success, 2 usage error, 3 validation error,
4 replication cells outside tolerance (only with --strict).
"""
from __future__ import annotations

import argparse
import sys

from .breakeven import breakeven_days, gridline_floor
from .config import Config
from .core import PriceMode, ScenarioSpec, get_profile, load_profiles
from .errors import CocoaPollError, InfeasibleError
from .income import STATEMENT_COLUMNS, baseline_statement, income_statement, scenario_price, statement_row
from .market import equilibrium
from .replicate import TARGETS, Replicator, frange, summarize
from .report import Report, render, write_report
from .trials import estimate_pym, ingest_trials, trial_rates
from .winwin import LossComposition, compensating_adoption, required_compensation

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_TOLERANCE = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from None


def _target(text: str) -> str:
    if text not in TARGETS:
        raise argparse.ArgumentTypeError(f"unknown target {text!r}; valid targets: {', '.join(TARGETS)}")
    return text


def _pym_map(text: str) -> dict:
    out = {}
    for part in text.split(","):
        if not part.strip():
            continue
        name, sep, value = part.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"expected country=multiplier, got {part!r}")
        try:
            out[name.strip()] = float(value)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad multiplier in {part!r}") from None
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--profiles", help="country-profile CSV (default: bundled three-country data)")
    common.add_argument("--config", help="JSON config overriding bundled defaults")
    common.add_argument("--out", help="output directory (default: print to stdout)")
    common.add_argument("--format", choices=("csv", "txt"), default="txt", help="output format (default: txt)")

    def price_flags(p):
        p.add_argument("--price-mode", default="short", choices=("short", "long", "explicit",
                                                                 "short_term", "long_term"),
                       help="short: base price; long: equilibrium price; explicit: --price")
        p.add_argument("--price", type=float, help="price in USD/kg for --price-mode explicit")

    parser = argparse.ArgumentParser(prog="cocoapoll", description="Manual cocoa pollination scenario engine")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("replicate", parents=[common], help="regenerate published tables and figure data")
    p.add_argument("targets", nargs="*", type=_target, default=[],
                   metavar="TARGET", help=f"subset of: {', '.join(TARGETS)} (default: all)")
    p.add_argument("--grid", type=_float_list, help="adoption grid for figS3, comma-separated")
    p.add_argument("--strict", action="store_true", help="exit 4 if any cell is outside tolerance")

    p = sub.add_parser("scenario", parents=[common], help="income statements for one scenario")
    p.add_argument("--country", help="country name (default: all)")
    p.add_argument("--pym", type=float, help="pollination-yield multiplier (default: intermediate)")
    p.add_argument("--days", type=int, default=30)
    p.add_argument("--adoption", type=float, help="adoption rate (affects long-term price)")
    price_flags(p)

    p = sub.add_parser("equilibrium", parents=[common], help="global price/supply response")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--pym", type=float)
    g.add_argument("--pym-map", type=_pym_map, help="per-country multipliers, e.g. ghana=4.9,indonesia=3.3")
    p.add_argument("--adoption", type=float)

    p = sub.add_parser("breakeven", parents=[common], help="maximum pollination days meeting an income goal")
    p.add_argument("--country", help="country name (default: all)")
    p.add_argument("--pym", type=float, help="multiplier (default: intermediate and maximum)")
    p.add_argument("--goal", type=float, default=2.0, help="per-farmer income multiplier (default 2.0)")
    p.add_argument("--step", type=float, help="gridline step in days (default from config)")
    price_flags(p)

    p = sub.add_parser("sweep", parents=[common], help="equilibrium and incomes over an adoption grid")
    p.add_argument("--grid", type=_float_list, help="comma-separated adoption rates")
    p.add_argument("--start", type=float, default=0.0)
    p.add_argument("--stop", type=float, default=1.0)
    p.add_argument("--step", type=float, default=0.05)
    p.add_argument("--pym", type=float)
    p.add_argument("--days", type=int, default=30)
    price_flags(p)
    p.set_defaults(price_mode="long")

    p = sub.add_parser("winwin", parents=[common], help="compensation needed for conversion and suitability losses")
    p.add_argument("--penalty", type=float, help="agroforestry yield penalty (fraction)")
    p.add_argument("--conversion", type=float, help="share of area converted to agroforestry")
    p.add_argument("--rate", type=float, help="annual suitability decline rate")
    p.add_argument("--horizon", type=float, help="years of suitability decline")
    p.add_argument("--mode", choices=[m.value for m in LossComposition])
    p.add_argument("--base", choices=("share", "profiles"), help="baseline production source")
    p.add_argument("--base-t", type=float, help="explicit baseline production in tonnes")
    p.add_argument("--grid", action="store_true", help="emit the conversion x suitability grid instead")

    p = sub.add_parser("ingest-trial", parents=[common], help="validate a trial CSV and estimate PYM and rates")
    p.add_argument("path", help="trial CSV file")
    return parser


def _emit(reports, args) -> None:
    for rep in reports:
        if args.out:
            for path in write_report(rep, args.out, args.format):
                print(path)
        else:
            sys.stdout.write(render(rep, args.format))


def _context(args):
    cfg = Config.load(args.config)
    profiles = load_profiles(args.profiles)
    return cfg, profiles


def _select(profiles, country):
    return [get_profile(profiles, country)] if country else list(profiles)


def _price_spec(args) -> tuple[PriceMode, float | None]:
    mode = PriceMode.parse(args.price_mode)
    if mode is PriceMode.EXPLICIT and args.price is None:
        raise UsageError("--price-mode explicit requires --price")
    return mode, args.price


def cmd_replicate(args) -> int:
    cfg, profiles = _context(args)
    rep = Replicator(profiles, cfg)
    reports = rep.run(args.targets or TARGETS, figS3_grid=args.grid)
    if args.out:
        for r in reports:
            write_report(r, args.out, both=True)
    else:
        for r in reports:
            sys.stdout.write(render(r, args.format))
    print(summarize(reports))
    if args.strict and any(r.failures for r in reports):
        return EXIT_TOLERANCE
    return EXIT_OK


def cmd_scenario(args) -> int:
    cfg, profiles = _context(args)
    mode, price = _price_spec(args)
    pym = args.pym if args.pym is not None else cfg.pym_intermediate
    adoption = cfg.adoption_rate if args.adoption is None else args.adoption
    spec = ScenarioSpec(pym=pym, adoption_rate=adoption, pollination_days=args.days,
                        price_mode=mode, price_usd_kg=price)
    used = scenario_price(spec, cfg.market, profiles)
    rep = Report("scenario", STATEMENT_COLUMNS)
    for p in _select(profiles, args.country):
        base = baseline_statement(p, cfg.market.base_price_usd_kg)
        rep.rows.append(statement_row(income_statement(p, spec, used), f"pym {pym:g}", mode.value, base))
    _emit([rep], args)
    return EXIT_OK


def cmd_equilibrium(args) -> int:
    cfg, profiles = _context(args)
    pym = args.pym_map or (args.pym if args.pym is not None else cfg.pym_intermediate)
    adoption = cfg.adoption_rate if args.adoption is None else args.adoption
    eq = equilibrium(profiles, ScenarioSpec(pym=pym, adoption_rate=adoption), cfg.market)
    rep = Report("equilibrium", ("adoption", "delta", "gamma_p", "gamma_s", "lambda",
                                 "new_price_usd_kg", "new_supply_t"))
    rep.rows.append({"adoption": adoption, "delta": eq.delta, "gamma_p": eq.gamma_p, "gamma_s": eq.gamma_s,
                     "lambda": eq.lambda_, "new_price_usd_kg": eq.new_price_usd_kg,
                     "new_supply_t": eq.new_supply_t})
    _emit([rep], args)
    return EXIT_OK


def cmd_breakeven(args) -> int:
    cfg, profiles = _context(args)
    mode, price = _price_spec(args)
    step = args.step or cfg.gridline_step
    pyms = [args.pym] if args.pym is not None else [cfg.pym_intermediate, cfg.pym_maximum]
    rep = Report("breakeven", ("country", "pym", "price_mode", "price", "goal", "exact_days",
                               "gridline_days", "reachable"))
    for pym in pyms:
        spec = ScenarioSpec(pym=pym, adoption_rate=cfg.adoption_rate, price_mode=mode, price_usd_kg=price)
        used = scenario_price(spec, cfg.market, profiles)
        for p in _select(profiles, args.country):
            be = breakeven_days(p, pym, used, args.goal, baseline_price_usd_kg=cfg.market.base_price_usd_kg)
            rep.rows.append({"country": p.key, "pym": pym, "price_mode": mode.value, "price": used,
                             "goal": args.goal, "exact_days": be.days,
                             "gridline_days": gridline_floor(be.days, step), "reachable": be.reachable})
    _emit([rep], args)
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg, profiles = _context(args)
    mode, price = _price_spec(args)
    grid = args.grid if args.grid is not None else frange(args.start, args.stop, args.step)
    pym = args.pym if args.pym is not None else cfg.pym_intermediate
    rep = Replicator(profiles, cfg).sweep(grid, pym, price_mode=mode, days=args.days, price=price)
    _emit([rep], args)
    return EXIT_OK


def cmd_winwin(args) -> int:
    cfg, profiles = _context(args)
    r = Replicator(profiles, cfg)
    if args.grid:
        _emit([r.fig3()[1]], args)
        return EXIT_OK
    params = cfg.winwin_params(conversion_share=args.conversion, agroforestry_yield_penalty=args.penalty,
                               suitability_decline_rate=args.rate, horizon_years=args.horizon,
                               loss_composition=args.mode)
    base = args.base_t if args.base_t is not None else r.winwin_base(args.base)
    req = required_compensation(base, params)
    rep = Report("winwin", ("mode", "base_t", "penalty", "conversion_share", "suitability_decline_rate",
                            "horizon_years", "required_t", "pym", "compensating_adoption", "net_price_ratio",
                            "note"))
    for pym in (cfg.pym_intermediate, cfg.pym_maximum):
        row = {"mode": params.loss_composition.value, "base_t": base, "penalty": params.agroforestry_yield_penalty,
               "conversion_share": params.conversion_share,
               "suitability_decline_rate": params.suitability_decline_rate,
               "horizon_years": float(params.horizon_years), "required_t": req, "pym": pym, "note": ""}
        try:
            a = compensating_adoption(req, profiles, pym)
            eq = equilibrium(profiles, ScenarioSpec(pym=pym, adoption_rate=a), cfg.market, loss_t=req)
            row.update(compensating_adoption=a, net_price_ratio=eq.gamma_p)
        except InfeasibleError as exc:
            row.update(note=f"infeasible: needs adoption {exc.required_adoption:.3f}, "
                            f"shortfall {exc.shortfall_t:,.0f} t at full adoption")
        rep.rows.append(row)
    _emit([rep], args)
    return EXIT_OK


def cmd_ingest(args) -> int:
    records = ingest_trials(args.path)
    est = estimate_pym(records)
    rates = trial_rates(records)
    rep = Report("trial_summary", ("quantity", "value"))
    rows = [
        ("records", len(records)),
        ("pym", est.pym),
        ("n_hand_pollinated", est.n_treated),
        ("n_open_control", est.n_control),
        ("mean_dry_bean_kg_hand_pollinated", est.mean_treated_kg),
        ("mean_dry_bean_kg_open_control", est.mean_control_kg),
        ("sd_dry_bean_kg_hand_pollinated", est.sd_treated_kg),
        ("sd_dry_bean_kg_open_control", est.sd_control_kg),
    ]
    rows += [(f"pym_farm_{farm}", v) for farm, v in est.per_farm.items()]
    for name in ("fruit_set_rate", "wilt_rate", "pest_rate", "disease_rate", "harvest_rate",
                 "open_fruit_set_rate", "open_rate_in_natural_band"):
        rows.append((name, getattr(rates, name)))
    rep.rows = [{"quantity": q, "value": v} for q, v in rows]
    _emit([rep], args)
    return EXIT_OK


COMMANDS = {
    "replicate": cmd_replicate,
    "scenario": cmd_scenario,
    "equilibrium": cmd_equilibrium,
    "breakeven": cmd_breakeven,
    "sweep": cmd_sweep,
    "winwin": cmd_winwin,
    "ingest-trial": cmd_ingest,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.error(str(exc))
    except (CocoaPollError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
