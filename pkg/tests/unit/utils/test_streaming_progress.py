"""Tests for the trial progress reporter."""

import io

from codedsts.utils.streaming_progress import SimpleProgress


class TestSimpleProgress:
    def test_counts_and_finishes_line(self):
        stream = io.StringIO()
        progress = SimpleProgress(total=10, desc="Trials", file=stream)
        progress.update(4)
        progress.update(6)

        output = stream.getvalue()
        assert "Trials: 4/10 (40%)" in output
        assert "Trials: 10/10 (100%)" in output
        assert output.endswith("\n")

    def test_close_terminates_partial_line(self):
        stream = io.StringIO()
        progress = SimpleProgress(total=10, file=stream)
        progress.update(3)
        progress.close()
        assert stream.getvalue().endswith("\n")

    def test_close_after_completion_adds_nothing(self):
        stream = io.StringIO()
        progress = SimpleProgress(total=2, file=stream)
        progress.update(2)
        before = stream.getvalue()
        progress.close()
        assert stream.getvalue() == before
