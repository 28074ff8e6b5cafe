import json
import math

import pytest

from fraclab.report import CSV_HEADER, Row, SweepReport, emit, load_json, render


def sample():
    rows = [Row.build(0.5, 2.0, 1.0, 4.0), Row.build(0.25, 3.0, 1.5, 4.0)]
    return SweepReport("demo", 2.0, 1.0, rows, {"seed": 7})


def test_rows_sorted_and_ratio_filled():
    rep = sample()
    assert [r.param for r in rep.rows] == [0.25, 0.5]
    assert rep.rows[0].ratio == 0.375


def test_zero_over_zero_flags_degenerate():
    rep = SweepReport("d", 2.0, 1.0, [Row.build(0.1, 0.0, 0.0, 0.0)])
    assert rep.degenerate and rep.rows[0].ratio == 0.0


def test_non_finite_rows_rejected():
    with pytest.raises(ValueError):
        SweepReport("bad", 2.0, 1.0, [Row(0.1, math.nan, 0.0, 1.0, 0.0)])


def test_empty_report_is_header_only():
    assert render(SweepReport("e", 2.0, 1.0), "csv") == CSV_HEADER + "\n"


def test_csv_layout():
    text = render(sample(), "csv")
    lines = text.split("\n")
    assert lines[0] == CSV_HEADER
    assert lines[1] == ",".join(
        ["demo"] + [f"{x:.16e}" for x in (2.0, 1.0, 0.25, 3.0, 1.5, 4.0, 0.375)]
    )
    assert text.endswith("\n") and "\r" not in text and not any(l.endswith(",") for l in lines)


def test_json_round_trip(tmp_path):
    path = tmp_path / "r.json"
    emit(sample(), "json", path)
    assert load_json(path) == sample()
    emit([sample(), sample()], "json", path)
    assert load_json(path) == [sample(), sample()]
    json.loads(path.read_text())


def test_gnuplot_script():
    text = render([sample()], "gnuplot")
    assert "$data0 << EOD" in text and text.rstrip().splitlines()[-1].startswith("plot $data0")


def test_unknown_format():
    with pytest.raises(ValueError):
        render(sample(), "xml")


def test_emit_reports_path_on_error(tmp_path):
    target = tmp_path / "missing" / "out.csv"
    with pytest.raises(OSError, match="missing"):
        emit(sample(), "csv", target)
