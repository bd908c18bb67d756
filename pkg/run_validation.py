#!/usr/bin/env python3
"""
Validation run for the plasma response library.

Runs every validation suite plus the figure properties, prints a
summary and saves the reports to a JSON file.
"""

import json
import sys
import time
from typing import Any, Dict, List

from plasma_response.logging_config import setup_logging
from plasma_response.models import ValidationReport
from plasma_response.schemas import Suite
from plasma_response.validation import run_suite

SUITES = [Suite.KERNELS, Suite.ORACLE3D, Suite.LIMITS, Suite.SUMRULE, Suite.FIGURES]


class ValidationEvaluator:
    """Runs the suites one by one and collects their reports."""

    def __init__(self, suites: List[Suite] = None):
        self.suites = suites or SUITES

    def evaluate_suite(self, suite: Suite) -> Dict[str, Any]:
        """Run one suite and summarize it."""
        print(f"\n🔬 Running {suite.value}...")
        start_time = time.time()
        report: ValidationReport = run_suite(suite)
        elapsed = time.time() - start_time

        summary = {
            "passed": report.passed,
            "cases": len(report.cases),
            "failures": [
                {"label": case.label, "point": case.point, "rel_error": case.rel_error, "abs_error": case.abs_error}
                for case in report.failures
            ],
            "advisory": [
                {"label": case.label, "point": case.point, "within_tolerance": case.passed}
                for case in report.cases if case.advisory
            ],
            "worst_rel_error": report.worst_rel_error,
            "processing_time": elapsed,
        }
        status = "✅ PASSED" if report.passed else "❌ FAILED"
        print(f"{status}: {len(report.cases)} cases, {len(report.failures)} failures, "
              f"worst rel error {report.worst_rel_error:.3e}, {elapsed:.1f}s")
        return summary

    def run_evaluation(self) -> Dict[str, Any]:
        """Run all suites."""
        results = {suite.value: self.evaluate_suite(suite) for suite in self.suites}
        return {
            "suites": len(results),
            "passed": all(result["passed"] for result in results.values()),
            "results": results,
        }


def main() -> int:
    """Run everything and save the results."""
    setup_logging("WARNING")
    print("🧪 Plasma Response Validation")
    print("=" * 50)

    results = ValidationEvaluator().run_evaluation()

    print("\n" + "=" * 50)
    print("📊 VALIDATION SUMMARY")
    print("=" * 50)
    print(f"Suites: {results['suites']}")
    print(f"Overall: {'PASSED' if results['passed'] else 'FAILED'}")

    output_file = "validation_results.json"
    with open(output_file, "w") as f:
        json.dump(results, f, indent=2)
    print(f"\n💾 Results saved to: {output_file}")

    return 0 if results["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
