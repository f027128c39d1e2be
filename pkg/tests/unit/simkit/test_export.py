"""Tests for CSV export of sweep results."""

import pytest
from codedsts.simkit.export import CSV_COLUMNS, export_csv, read_csv
from codedsts.simkit.sweep import SweepPoint, SweepResult, SweepTally
from codedsts_core.exceptions import ResultExportError

from tests.helpers import create_test_config

HEADER = ",".join(CSV_COLUMNS)


@pytest.fixture
def result() -> SweepResult:
    points = (
        SweepPoint(
            -20.0, SweepTally(trials=10, user_trials=30, erasures=3, errors=0, false_accepts=1)
        ),
        SweepPoint(
            -18.0, SweepTally(trials=10, user_trials=30, erasures=1, errors=2, false_accepts=0)
        ),
    )
    return SweepResult(config=create_test_config(), points=points)


class TestExportCsv:
    def test_header_only_for_empty_sweep(self, tmp_path):
        path = tmp_path / "empty.csv"
        export_csv(SweepResult(config=create_test_config()), path)
        assert path.read_text() == HEADER + "\n"

    def test_single_point_two_lines(self, tmp_path, result):
        path = tmp_path / "one.csv"
        export_csv(SweepResult(config=result.config, points=result.points[:1]), path)
        lines = path.read_text().splitlines()
        assert len(lines) == 2
        assert lines[1].startswith("-20,0.1,")
        assert lines[1].endswith(",0.1,10")

    def test_six_significant_digits(self, tmp_path):
        point = SweepPoint(-17.5, SweepTally(trials=3, user_trials=3, erasures=1))
        path = tmp_path / "digits.csv"
        export_csv(SweepResult(config=create_test_config(), points=(point,)), path)
        assert path.read_text().splitlines()[1].startswith("-17.5,0.333333,")

    def test_round_trip(self, tmp_path, result):
        path = tmp_path / "sweep.csv"
        export_csv(result, path)
        rows = read_csv(path)

        assert [row["sir_db"] for row in rows] == [-20.0, -18.0]
        for row, point in zip(rows, result.points, strict=True):
            assert row["erasure_rate"] == pytest.approx(point.erasure_rate, rel=1e-5)
            assert row["error_rate"] == pytest.approx(point.error_rate, rel=1e-5)
            assert row["error_ci_hi"] == pytest.approx(point.error_ci[1], rel=1e-5)
            assert row["false_accept_rate"] == pytest.approx(point.false_accept_rate, rel=1e-5)
            assert row["trials"] == point.trials

    def test_byte_identical_rewrite(self, tmp_path, result):
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        export_csv(result, first)
        export_csv(result, second)
        assert first.read_bytes() == second.read_bytes()

    def test_unwritable_path(self, tmp_path, result):
        with pytest.raises(ResultExportError) as exc_info:
            export_csv(result, tmp_path / "missing" / "out.csv")
        assert "missing" in exc_info.value.path

    def test_read_missing_file(self, tmp_path):
        with pytest.raises(ResultExportError):
            read_csv(tmp_path / "absent.csv")
