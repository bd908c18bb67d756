"""
Output rendering for the command-line front end.

- CSV sweeps: `#` provenance lines, the fixed header, 12 significant digits
- JSON records with the CSV columns plus q, x, y, xp
- aligned text tables for single points and validation reports
- matplotlib plotting scripts that read a figure CSV (no image rendering here)
"""

import csv
import json
import math
from typing import Iterable, List, Optional, Sequence, TextIO

from plasma_response.config import settings
from plasma_response.logging_config import get_logger
from plasma_response.models import ResponseSample, SampleRecord, ValidationReport
from plasma_response.pipeline import SweepResult

logger = get_logger(__name__)

CSV_COLUMNS = ["var", "model", "re_sigma", "im_sigma", "abs_sigma", "re_eps", "im_eps"]
JSON_KEYS = CSV_COLUMNS + ["q", "x", "y", "xp"]


def format_number(value: Optional[float]) -> str:
    """12 significant digits; empty for None, `nan` for NaN."""
    if value is None:
        return ""
    if math.isnan(value):
        return "nan"
    return f"{value:.{settings.CSV_SIGNIFICANT_DIGITS}g}"


class ResultRenderer:
    """
    Writes sweep results, point evaluations and validation reports.

    All data goes to the given stream; nothing here writes diagnostics.
    """

    def __init__(self, stream: TextIO):
        self.stream = stream

    # =========================================================================
    # CSV
    # =========================================================================

    def write_csv(self, result: SweepResult, comments: Sequence[str] = ()) -> None:
        """
        Write one sweep as CSV.

        Args:
            result: sweep in grid order
            comments: provenance lines, written with a `# ` prefix before the header
        """
        for line in comments:
            self.stream.write(f"# {line}\n")
        writer = csv.writer(self.stream, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for value, samples in result.rows:
            for sample in samples:
                record = SampleRecord.from_sample(sample, var=value)
                writer.writerow(self._csv_row(record))
        logger.debug(f"Wrote {len(result.rows)} grid points as CSV")

    @staticmethod
    def _csv_row(record: SampleRecord) -> List[str]:
        return [
            format_number(record.var),
            record.model.value,
            format_number(record.re_sigma),
            format_number(record.im_sigma),
            format_number(record.abs_sigma),
            format_number(record.re_eps),
            format_number(record.im_eps),
        ]

    @staticmethod
    def sweep_comments(command: str, result: SweepResult, label: Optional[str] = None) -> List[str]:
        """Deterministic provenance lines (no timestamps)."""
        spec = result.spec
        fixed = ",".join(f"{name}={format_number(spec.fixed[name])}" for name in sorted(spec.fixed))
        lines = [f"{settings.APP_NAME} {command}"]
        if label:
            lines.append(f"curve: {label}")
        lines.extend([
            f"variable={spec.variable.value} from={format_number(spec.start)} to={format_number(spec.stop)} "
            f"points={spec.points} log_scale={str(spec.log_scale).lower()}",
            f"fixed: {fixed}",
            f"models={','.join(model.value for model in spec.models)}",
        ])
        return lines

    # =========================================================================
    # POINT EVALUATIONS
    # =========================================================================

    def write_json_records(self, samples: Iterable[ResponseSample], var: Optional[float] = None) -> None:
        """One JSON array of records with the CSV keys plus q, x, y, xp."""
        records = [self._json_record(SampleRecord.from_sample(sample, var=var)) for sample in samples]
        self.stream.write(json.dumps(records, indent=2) + "\n")

    @staticmethod
    def _json_record(record: SampleRecord) -> dict:
        data = record.model_dump(mode="json")
        return {key: data[key] for key in JSON_KEYS}

    def write_table(self, samples: Sequence[ResponseSample]) -> None:
        """Aligned text table of point evaluations."""
        header = ["model", "re_sigma", "im_sigma", "abs_sigma", "re_eps", "im_eps", "note"]
        rows = []
        for sample in samples:
            record = SampleRecord.from_sample(sample)
            note = sample.error or ("branch fallback" if sample.branch_fallback else "")
            rows.append([
                record.model.value,
                format_number(record.re_sigma),
                format_number(record.im_sigma),
                format_number(record.abs_sigma),
                format_number(record.re_eps),
                format_number(record.im_eps),
                note,
            ])
        self._write_aligned(header, rows)

    # =========================================================================
    # VALIDATION REPORTS
    # =========================================================================

    def write_report(self, report: ValidationReport) -> None:
        """Human-readable validation table with a summary line."""
        header = ["status", "check", "point", "abs_error", "rel_error", "tolerance"]
        rows = []
        for case in report.cases:
            if case.advisory:
                status = "INFO"
            elif case.passed:
                status = "PASS"
            else:
                status = "FAIL"
            point = " ".join(f"{k}={v:g}" for k, v in case.point.items())
            rows.append([
                status,
                case.label + (" [expected failure]" if case.expect_failure else ""),
                point,
                f"{case.abs_error:.3e}",
                f"{case.rel_error:.3e}",
                f"{case.tolerance:.1e} ({case.metric})",
            ])
        self._write_aligned(header, rows)
        verdict = "PASSED" if report.passed else "FAILED"
        self.stream.write(
            f"\nsuite={report.suite.value} cases={len(report.cases)} failures={len(report.failures)} "
            f"worst_rel_error={report.worst_rel_error:.3e} {verdict}\n"
        )

    def write_report_json(self, report: ValidationReport) -> None:
        """Machine-readable report; complex values become [re, im] pairs."""
        cases = []
        for case in report.cases:
            data = case.model_dump(mode="json", exclude={"computed", "reference"})
            data["computed"] = [case.computed.real, case.computed.imag]
            data["reference"] = [case.reference.real, case.reference.imag]
            cases.append(data)
        payload = {
            "suite": report.suite.value,
            "tolerance": report.tolerance,
            "passed": report.passed,
            "worst_rel_error": report.worst_rel_error,
            "cases": cases,
        }
        self.stream.write(json.dumps(payload, indent=2) + "\n")

    def _write_aligned(self, header: List[str], rows: List[List[str]]) -> None:
        widths = [max(len(str(row[i])) for row in [header] + rows) for i in range(len(header))]
        for row in [header] + rows:
            line = "  ".join(str(cell).ljust(width) for cell, width in zip(row, widths))
            self.stream.write(line.rstrip() + "\n")


# =============================================================================
# PLOT SCRIPTS
# =============================================================================

def plot_script(figure: int, csv_paths: Sequence[str], labels: Sequence[str], columns: Sequence[str],
                x_label: str) -> str:
    """
    Source of a standalone matplotlib script plotting the given figure CSVs.

    The script is written, not run; matplotlib is only needed by whoever runs it.
    """
    curves = ",\n    ".join(f"({path!r}, {label!r})" for path, label in zip(csv_paths, labels))
    return f'''"""Plot figure {figure} from {settings.APP_NAME} CSV output."""

import csv

import matplotlib.pyplot as plt

CURVES = [
    {curves},
]
COLUMNS = {list(columns)!r}


def read_rows(path):
    with open(path, newline="") as handle:
        lines = [line for line in handle if not line.startswith("#")]
    return list(csv.DictReader(lines))


fig, ax = plt.subplots()
for path, label in CURVES:
    rows = read_rows(path)
    for model in sorted({{row["model"] for row in rows}}):
        xs = [float(row["var"]) for row in rows if row["model"] == model]
        for column in COLUMNS:
            ys = [float(row[column]) for row in rows if row["model"] == model]
            ax.plot(xs, ys, label=f"{{model}} {{column}} ({{label}})")
ax.set_xlabel({x_label!r})
ax.legend()
fig.savefig("figure_{figure}.png", dpi=150)
'''
