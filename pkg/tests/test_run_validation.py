"""
Tests for the standalone validation run script.
"""

import json

import pytest

import run_validation
from plasma_response.models import ValidationCase, ValidationReport
from plasma_response.schemas import Suite


def fake_run_suite(passed):
    def run_suite(suite):
        case = ValidationCase.compare("c", {"q": 1.0}, 1.0 if passed else 2.0, 1.0, 1e-8)
        return ValidationReport.from_cases(suite, 1e-8, [case])
    return run_suite


@pytest.mark.parametrize("passed, mark", [(True, "✅ PASSED"), (False, "❌ FAILED")])
def test_progress_lines(monkeypatch, capsys, passed, mark):
    monkeypatch.setattr(run_validation, "run_suite", fake_run_suite(passed))
    summary = run_validation.ValidationEvaluator(suites=[Suite.KERNELS]).evaluate_suite(Suite.KERNELS)
    out = capsys.readouterr().out
    assert "🔬 Running kernels..." in out
    assert mark in out
    assert summary["passed"] is passed


def test_main_writes_summary(monkeypatch, capsys, tmp_path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setattr(run_validation, "run_suite", fake_run_suite(True))
    assert run_validation.main() == 0
    out = capsys.readouterr().out
    assert "📊 VALIDATION SUMMARY" in out
    assert "💾 Results saved to: validation_results.json" in out
    results = json.loads((tmp_path / "validation_results.json").read_text())
    assert results["suites"] == len(run_validation.SUITES)
    assert results["passed"] is True
