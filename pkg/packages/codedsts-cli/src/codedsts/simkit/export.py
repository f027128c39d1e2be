"""CSV export of sweep results."""

import csv
import logging
from pathlib import Path

from codedsts_core.exceptions import ResultExportError

from codedsts.simkit.sweep import SweepPoint, SweepResult

logger = logging.getLogger(__name__)

CSV_COLUMNS = (
    "sir_db",
    "erasure_rate",
    "erasure_ci_lo",
    "erasure_ci_hi",
    "error_rate",
    "error_ci_lo",
    "error_ci_hi",
    "false_accept_rate",
    "trials",
)


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def _row(point: SweepPoint) -> list[str]:
    erasure_lo, erasure_hi = point.erasure_ci
    error_lo, error_hi = point.error_ci
    return [
        _fmt(point.sir_db),
        _fmt(point.erasure_rate),
        _fmt(erasure_lo),
        _fmt(erasure_hi),
        _fmt(point.error_rate),
        _fmt(error_lo),
        _fmt(error_hi),
        _fmt(point.false_accept_rate),
        str(point.trials),
    ]


def export_csv(result: SweepResult, path: Path) -> None:
    """Write one row per SIR point with a header.

    Raises:
        ResultExportError: If the file cannot be written
    """
    try:
        with path.open("w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            writer.writerows(_row(point) for point in result.points)
    except OSError as e:
        raise ResultExportError(str(path), str(e)) from e
    logger.info(f"Wrote {len(result.points)} SIR point(s) to {path}")


def read_csv(path: Path) -> list[dict[str, float]]:
    """Parse an exported file back into numeric rows."""
    try:
        with path.open(newline="") as f:
            return [
                {key: float(value) for key, value in row.items()} for row in csv.DictReader(f)
            ]
    except OSError as e:
        raise ResultExportError(str(path), str(e)) from e
