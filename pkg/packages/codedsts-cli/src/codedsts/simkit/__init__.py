"""Seeded Monte Carlo experiment engine."""

from codedsts.simkit.export import CSV_COLUMNS, export_csv, read_csv
from codedsts.simkit.sweep import SweepPoint, SweepResult, SweepTally, run_sweep
from codedsts.simkit.trial import TrialOutcome, UserStatus, classify, run_trial, trial_rng
from codedsts.simkit.validation import DetectionCheck, DetectionReport, validate_detection

__all__ = [
    "CSV_COLUMNS",
    "DetectionCheck",
    "DetectionReport",
    "SweepPoint",
    "SweepResult",
    "SweepTally",
    "TrialOutcome",
    "UserStatus",
    "classify",
    "export_csv",
    "read_csv",
    "run_sweep",
    "run_trial",
    "trial_rng",
    "validate_detection",
]
