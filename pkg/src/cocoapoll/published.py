"""Published reference values that replication reports are compared against.

Keys: country keys are normalized names; scenario cells are
``(scenario, days)`` with scenario in {"no", "intermediate", "maximum"}.
Percentages are kept in percent units, as printed.
"""

COUNTRIES = ("ivory_coast", "ghana", "indonesia")

TABLE1 = {
    "intermediate": {
        "global_production_t": 5_285_315.91,
        "delta_pct": 18.3,
        "addition_ivory_coast_t": 311_555.06,
        "addition_ghana_t": 213_669.78,
        "addition_indonesia_t": 293_517.07,
        "supply_change_pct": 6.5,
        "price_usd_kg": 1.89,
        "price_decrease_pct": 16.9,
        "job_change_pct": 11.8,
    },
    "maximum": {
        "global_production_t": 6_168_740.32,
        "delta_pct": 38.1,
        "addition_ivory_coast_t": 759_415.45,
        "addition_ghana_t": 520_820.09,
        "addition_indonesia_t": 421_930.79,
        "supply_change_pct": 12.8,
        "price_usd_kg": 1.60,
        "price_decrease_pct": 29.9,
        "job_change_pct": 25.3,
    },
}

# Tables S1-S3
COUNTRY_TABLES = {
    "ivory_coast": {
        "yield_dry_kg_ha": {"no": 273.19, "intermediate": 710.29, "maximum": 901.53},
        "production_t": {"no": 778_887.64, "intermediate": 2_025_107.86, "maximum": 2_570_329.21},
        "world_production_t": {"no": 4_466_574.00, "intermediate": 5_712_794.22, "maximum": 7_504_235.79},
        "gross_usd_ha": {"no": 622.87, "intermediate": 1_619.47, "maximum": 2_055.48},
        "farm_opcost_usd_ha": 34.57,
        "daily_poll_cost_usd_ha": 10.36,
        "poll_opcost_usd_ha": {60: 621.35, 30: 310.67},
        "net_usd_ha": {
            ("no", 0): 588.30,
            ("intermediate", 60): 963.55, ("intermediate", 30): 1_274.23,
            ("maximum", 60): 1_399.56, ("maximum", 30): 1_710.24,
        },
        "national_usd": {
            ("no", 0): 1_174_111_288.47,
            ("intermediate", 60): 1_923_015_001.82, ("intermediate", 30): 2_543_046_881.29,
            ("maximum", 60): 2_793_188_270.95, ("maximum", 30): 3_413_220_150.42,
        },
        "per_farmer_usd": {
            ("no", 0): 1_174.11,
            ("intermediate", 60): 1_923.02, ("intermediate", 30): 2_543.05,
            ("maximum", 60): 2_793.19, ("maximum", 30): 3_413.22,
        },
    },
    "ghana": {
        "yield_dry_kg_ha": {"no": 317.25, "intermediate": 824.85, "maximum": 1_046.93},
        "production_t": {"no": 534_174.45, "intermediate": 1_388_853.56, "maximum": 1_762_775.67},
        "world_production_t": {"no": 4_466_574.00, "intermediate": 5_321_253.11, "maximum": 6_549_854.34},
        "gross_usd_ha": {"no": 723.33, "intermediate": 1_880.66, "maximum": 2_386.99},
        "farm_opcost_usd_ha": 137.57,
        "daily_poll_cost_usd_ha": 21.97,
        "poll_opcost_usd_ha": {60: 1_318.28, 30: 659.14},
        "net_usd_ha": {
            ("no", 0): 585.76,
            ("intermediate", 60): 424.81, ("intermediate", 30): 1_083.95,
            ("maximum", 60): 931.14, ("maximum", 30): 1_590.28,
        },
        "national_usd": {
            ("no", 0): 887_653_967.76,
            ("intermediate", 60): 643_745_572.95, ("intermediate", 30): 1_642_600_541.32,
            ("maximum", 60): 1_411_033_747.54, ("maximum", 30): 2_409_888_715.91,
        },
        "per_farmer_usd": {
            ("no", 0): 1_109.57,
            ("intermediate", 60): 804.68, ("intermediate", 30): 2_053.25,
            ("maximum", 60): 1_763.79, ("maximum", 30): 3_012.36,
        },
    },
    "indonesia": {
        "yield_dry_kg_ha": {"no": 431.30, "intermediate": 1_121.38, "maximum": 1_423.29},
        "production_t": {"no": 733_792.69, "intermediate": 1_907_860.98, "maximum": 2_421_515.86},
        "world_production_t": {"no": 4_466_574.00, "intermediate": 5_640_642.30, "maximum": 6_154_297.18},
        "gross_usd_ha": {"no": 983.36, "intermediate": 2_556.75, "maximum": 3_245.10},
        "farm_opcost_usd_ha": 24.34,
        "daily_poll_cost_usd_ha": 9.10,
        "poll_opcost_usd_ha": {60: 545.79, 30: 272.89},
        "net_usd_ha": {
            ("no", 0): 959.02,
            ("intermediate", 60): 1_986.62, ("intermediate", 30): 2_259.51,
            ("maximum", 60): 2_674.97, ("maximum", 30): 2_947.87,
        },
        "national_usd": {
            ("no", 0): 1_533_738_254.94,
            ("intermediate", 60): 3_177_139_188.94, ("intermediate", 30): 3_613_570_310.16,
            ("maximum", 60): 4_278_004_328.63, ("maximum", 30): 4_714_435_449.85,
        },
        "per_farmer_usd": {
            ("no", 0): 1_095.53,
            ("intermediate", 60): 2_269.39, ("intermediate", 30): 2_581.12,
            ("maximum", 60): 3_055.72, ("maximum", 30): 3_367.45,
        },
    },
}

# Table S4: (per-farmer USD, percent change vs no pollination)
TABLE_S4 = {
    "short_term": {
        "ivory_coast": {
            ("intermediate", 30): (2543.05, 116.6), ("intermediate", 60): (1923.02, 63.8),
            ("maximum", 30): (3413.22, 190.7), ("maximum", 60): (2793.19, 137.9),
        },
        "ghana": {
            ("intermediate", 30): (2053.25, 85.0), ("intermediate", 60): (804.68, -27.5),
            ("maximum", 30): (3012.36, 171.5), ("maximum", 60): (1763.79, 59.0),
        },
        "indonesia": {
            ("intermediate", 30): (2581.12, 135.6), ("intermediate", 60): (2269.39, 107.2),
            ("maximum", 30): (3367.45, 207.4), ("maximum", 60): (3055.72, 178.9),
        },
    },
    "long_term": {
        "ivory_coast": {
            ("intermediate", 30): (1990.19, 69.5), ("intermediate", 60): (1370.16, 16.7),
            ("maximum", 30): (2207.74, 88.0), ("maximum", 60): (1587.70, 35.2),
        },
        "ghana": {
            ("intermediate", 30): (1443.89, 30.1), ("intermediate", 60): (195.32, -82.4),
            ("maximum", 30): (1683.67, 51.7), ("maximum", 60): (435.10, -60.8),
        },
        "indonesia": {
            ("intermediate", 30): (2081.53, 90.0), ("intermediate", 60): (1769.80, 61.5),
            ("maximum", 30): (2733.36, 149.5), ("maximum", 60): (1966.38, 79.5),
        },
    },
}
TABLE_S4_NO_POLLINATION = {"ivory_coast": 1174.11, "ghana": 1109.57, "indonesia": 1095.53}

# Break-even durations at the doubling goal, reported at 10-day gridlines:
# (intermediate, maximum)
FIG2_DOUBLING_GRIDLINES = {
    "short_term": {"ivory_coast": (30, 80), "ghana": (20, 40), "indonesia": (60, 140)},
    "long_term": {"ivory_coast": (10, 20), "ghana": (10, 10), "indonesia": (10, 20)},
}
# narrative cells that disagree with the closed form on the tabulated inputs
FIG2_PROSE_DIVERGENCES = {("long_term", "indonesia", "maximum")}

WINWIN_COMPENSATION_T = 1_270_000.0
THREE_COUNTRY_SHARE = 0.668

SHADE_EQUIVALENTS = {"intermediate": 0.64, "maximum": 0.72}
