"""Tabular reports: CSV and aligned plain text, deterministic formatting."""
from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass, field

CELL_COLUMNS = ("item", "computed", "published", "deviation", "tolerance", "status", "note")

OK, FAIL, FLAGGED, COMPUTED = "ok", "FAIL", "FLAGGED", "computed"


@dataclass
class Report:
    name: str
    columns: tuple
    rows: list = field(default_factory=list)

    @property
    def failures(self) -> list:
        return [r for r in self.rows if r.get("status") == FAIL]

    @property
    def flagged(self) -> list:
        return [r for r in self.rows if r.get("status") == FLAGGED]

    def cell(self, item: str) -> dict:
        for r in self.rows:
            if r.get("item") == item:
                return r
        raise KeyError(item)


def compare(item, computed, published=None, tol=0.005, kind="rel", flagged=False, note=""):
    """One comparison row.

    ``kind="rel"`` measures ``computed / published - 1``; ``kind="abs"``
    measures ``computed - published``. Out-of-tolerance cells are FAIL unless
    ``flagged`` marks them as a known, documented divergence.
    """
    if published is None:
        return {"item": item, "computed": computed, "published": None, "deviation": None,
                "tolerance": None, "status": COMPUTED, "note": note}
    dev = computed / published - 1.0 if kind == "rel" else computed - published
    if abs(dev) <= tol:
        status = OK
    else:
        status = FLAGGED if flagged else FAIL
    return {"item": item, "computed": computed, "published": published, "deviation": dev,
            "tolerance": f"{kind} {tol:g}", "status": status, "note": note}


def _fmt_csv(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".10g")
    return str(v)


def _fmt_txt(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, float):
        if abs(v) >= 1000:
            return f"{v:,.2f}"
        if v != 0 and abs(v) < 1e-3:
            return f"{v:.3e}"
        return f"{v:.4f}"
    return str(v)


def to_csv(report: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(report.columns)
    for r in report.rows:
        w.writerow([_fmt_csv(r.get(c)) for c in report.columns])
    return buf.getvalue()


def to_text(report: Report) -> str:
    cells = [[str(c) for c in report.columns]]
    cells += [[_fmt_txt(r.get(c)) for c in report.columns] for r in report.rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(report.columns))]
    lines = [f"== {report.name} =="]
    for j, row in enumerate(cells):
        lines.append("  ".join(s.ljust(w) for s, w in zip(row, widths)).rstrip())
        if j == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def render(report: Report, fmt: str = "csv") -> str:
    return to_csv(report) if fmt == "csv" else to_text(report)


def write_report(report: Report, out_dir, fmt: str = "csv", both: bool = False) -> list[str]:
    """Write ``report`` into ``out_dir``; with ``both`` emit .csv and .txt."""
    os.makedirs(out_dir, exist_ok=True)
    fmts = ("csv", "txt") if both else (fmt,)
    paths = []
    for f in fmts:
        path = os.path.join(out_dir, f"{report.name}.{f}")
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(render(report, f))
        paths.append(path)
    return paths
