"""Tests for the Monte Carlo check of the detection closed forms."""

import pytest
from codedsts.simkit.validation import (
    Z_LIMIT,
    CheckKind,
    DetectionCheck,
    DetectionReport,
    validate_detection,
)

from tests.helpers import create_test_config


class TestDetectionCheck:
    """Pass/fail logic of one comparison row."""

    def make(self, hits: int, analytic: float) -> DetectionCheck:
        return DetectionCheck(CheckKind.FALSE_ALARM, 1, 0, 4.6, analytic, hits, 10_000)

    def test_on_expectation_passes(self):
        check = self.make(100, 0.01)
        assert check.empirical == pytest.approx(0.01)
        assert check.z == pytest.approx(0.0)
        assert check.passed

    def test_far_outside_fails(self):
        check = self.make(200, 0.01)
        assert check.z > Z_LIMIT
        assert not check.passed

    def test_report_requires_every_check(self):
        report = DetectionReport(-20.0, 6.31, (self.make(100, 0.01), self.make(200, 0.01)))
        assert not report.passed


class TestValidateDetection:
    """Empirical detection rates against their closed forms."""

    def test_layout(self):
        cfg = create_test_config(validation_n_rx=[1, 2], validation_n_users=[1, 2, 4])
        report = validate_detection(cfg, 0.0, samples=500)

        assert len(report.checks) == 8
        assert [c.kind for c in report.checks[:4]] == [
            CheckKind.FALSE_ALARM,
            CheckKind.ERASURE,
            CheckKind.ERASURE,
            CheckKind.ERASURE,
        ]
        assert [c.n_user for c in report.checks[:4]] == [0, 1, 2, 4]
        assert {c.n_rx for c in report.checks} == {1, 2}
        assert all(c.samples == 500 for c in report.checks)

    def test_zero_threshold_is_exact(self):
        cfg = create_test_config(validation_n_rx=[1, 4], validation_n_users=[1, 2])
        report = validate_detection(cfg, -20.0, samples=1000, threshold=0.0)

        for check in report.checks:
            if check.kind is CheckKind.FALSE_ALARM:
                assert (check.analytic, check.empirical) == (1.0, 1.0)
            else:
                assert (check.analytic, check.empirical) == (0.0, 0.0)
            assert check.z == 0.0
        assert report.passed

    @pytest.mark.parametrize("fading", ["rayleigh", "awgn"])
    def test_matches_closed_forms(self, fading):
        """Validation always fades independently, whatever the sweep channel is."""
        cfg = create_test_config(
            validation_n_rx=[1, 2], validation_n_users=[1, 2], fading=fading, master_seed=5
        )
        report = validate_detection(cfg, 0.0, samples=40_000)
        assert all(abs(check.z) < 5.0 for check in report.checks)

    def test_perturbed_analytic_fails(self):
        cfg = create_test_config(validation_n_rx=[1], validation_n_users=[1])
        report = validate_detection(cfg, 0.0, samples=50_000, perturb=0.5)
        assert not report.passed

    def test_defaults_to_configured_samples(self):
        cfg = create_test_config(validation_samples=321)
        report = validate_detection(cfg, 0.0)
        assert all(check.samples == 321 for check in report.checks)

    def test_deterministic(self):
        cfg = create_test_config(master_seed=11)
        first = validate_detection(cfg, 0.0, samples=3000)
        second = validate_detection(cfg, 0.0, samples=3000)
        assert [c.hits for c in first.checks] == [c.hits for c in second.checks]

    def test_reports_tone_power(self):
        report = validate_detection(create_test_config(), -20.0, samples=10)
        assert report.tone_power == pytest.approx(0.17)
        assert report.sir_db == -20.0
