import csv
import io
from pathlib import Path

import pytest

from cocoapoll.cli import main

TRIALS = Path(__file__).parent / "data" / "trials_example.csv"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_scenario_ghana(capsys):
    code, out, _ = run(capsys, "scenario", "--country", "ghana", "--pym", "3.3", "--days", "30",
                       "--price-mode", "short", "--format", "csv")
    assert code == 0
    (row,) = rows(out)
    assert float(row["per_farmer"]) == pytest.approx(3012.36, rel=0.005)
    assert float(row["pct_change"]) == pytest.approx(171.5, abs=0.5)


def test_breakeven_indonesia(capsys):
    code, out, _ = run(capsys, "breakeven", "--country", "indonesia", "--pym", "2.6", "--goal", "2.0",
                       "--price-mode", "short", "--format", "csv")
    assert code == 0
    (row,) = rows(out)
    assert float(row["exact_days"]) == pytest.approx(67.5, abs=0.1)
    assert row["gridline_days"] == "60"


def test_winwin_zero_parameters(capsys):
    code, out, _ = run(capsys, "winwin", "--penalty", "0", "--conversion", "0", "--rate", "0", "--format", "csv")
    assert code == 0
    assert all(float(r["required_t"]) == 0 for r in rows(out))


def test_winwin_default_reports_conversion_term(capsys):
    code, out, _ = run(capsys, "winwin", "--format", "csv")
    assert code == 0
    assert float(rows(out)[0]["required_t"]) == pytest.approx(1_193_468, abs=1)


def test_equilibrium_override(capsys):
    code, out, _ = run(capsys, "equilibrium", "--pym-map", "ivory_coast=4.9,ghana=4.9,indonesia=3.3",
                       "--format", "csv")
    assert code == 0
    assert float(rows(out)[0]["delta"]) == pytest.approx(0.3811, abs=5e-5)


def test_sweep_grid(capsys):
    code, out, _ = run(capsys, "sweep", "--grid", "1.0", "--pym", "2.6", "--format", "csv")
    assert code == 0
    assert float(rows(out)[0]["delta"]) == pytest.approx(3_274_968 / 4_466_574, rel=1e-6)


def test_sweep_bad_grid_is_validation_error(capsys):
    code, _, err = run(capsys, "sweep", "--grid", "0.5,1.5")
    assert code == 3 and "outside" in err


def test_sweep_empty_grid(capsys):
    code, _, err = run(capsys, "sweep", "--grid", "")
    assert code == 3 and "empty" in err


def test_ingest_trial(capsys):
    code, out, _ = run(capsys, "ingest-trial", str(TRIALS), "--format", "csv")
    assert code == 0
    values = {r["quantity"]: r["value"] for r in rows(out)}
    assert float(values["pym"]) == pytest.approx(2.6)
    assert values["records"] == "9"


def test_bad_trial_file_exit_3(capsys, tmp_path):
    bad = tmp_path / "t.csv"
    bad.write_text(TRIALS.read_text().replace("T002,hand_pollinated,1.0,110,110,40", "T002,hand_pollinated,1.0,110,10,40"))
    code, _, err = run(capsys, "ingest-trial", str(bad))
    assert code == 3 and "row 3" in err


def test_missing_file_exit_3(capsys, tmp_path):
    code, _, err = run(capsys, "scenario", "--profiles", str(tmp_path / "none.csv"))
    assert code == 3 and "error" in err


def test_unknown_target_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["replicate", "table9"])
    assert exc.value.code == 2
    assert "valid targets" in capsys.readouterr().err


def test_missing_required_argument(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["ingest-trial"])
    assert exc.value.code == 2


def test_explicit_price_needs_price(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["scenario", "--price-mode", "explicit"])
    assert exc.value.code == 2


def test_replicate_strict_exit(capsys, tmp_path):
    # tableS4 carries one published cell the model cannot reproduce
    assert main(["replicate", "tableS4", "--out", str(tmp_path)]) == 0
    assert main(["replicate", "tableS4", "--strict", "--out", str(tmp_path)]) == 4
    assert main(["replicate", "table1", "tableS3", "--strict", "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "FAIL" in out
    assert (tmp_path / "tableS4.csv").exists() and (tmp_path / "tableS4.txt").exists()


def test_replicate_output_is_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for d in (a, b):
        assert main(["replicate", "--grid", "0,0.25,1", "--out", str(d)]) == 0
    files = sorted(p.name for p in a.iterdir())
    assert files
    for name in files:
        assert (a / name).read_bytes() == (b / name).read_bytes()
