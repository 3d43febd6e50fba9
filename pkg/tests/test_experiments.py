import pytest

from mrawave.experiments import GramStudy, PeriodizationStudy, ReconstructionTiming


def test_periodization_study_halves_with_window():
    rows = PeriodizationStudy(windows=(16, 32), depths=(24,)).run()
    assert rows[1]["max_deviation"] == pytest.approx(rows[0]["max_deviation"] / 2, rel=0.02)


def test_gram_study_refines():
    rows = GramStudy(scales=(5, 6)).run()
    assert all(rows[1][k] < rows[0][k] for k in ("phi_gram", "psi_gram", "cross_gram"))


def test_reconstruction_timing_rows():
    rows = ReconstructionTiming(max_log_length=4, batch=3).run()
    assert [r["length"] for r in rows] == [2, 4, 8, 16]
    assert max(r["max_error"] for r in rows) < 1e-12


def test_unknown_filter():
    with pytest.raises(ValueError):
        GramStudy(filter="d8").run()
