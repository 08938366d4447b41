"""
Output Formatting

Renders reports as an aligned table, CSV or JSON lines. Everything here
writes to strings; the CLI decides where they go.
"""

import csv
import io
import json
from typing import Any, Sequence

from .config import OutputFormat
from .models import AnalysisReport, CensusRow, VerificationReport

CENSUS_CSV_HEADER = ("dimension", "orientable", "spinc", "spin", "elapsed_s")
NOT_APPLICABLE = "n/a"


def _flag(value: Any) -> str:
    if value is None:
        return NOT_APPLICABLE
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _csv(rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def _table(pairs: Sequence[tuple[str, str]]) -> str:
    width = max(len(key) for key, _ in pairs)
    lines = []
    for key, value in pairs:
        head, *rest = value.split("\n")
        lines.append(f"{key.ljust(width)}  {head}")
        lines.extend(" " * (width + 2) + line for line in rest)
    return "\n".join(lines) + "\n"


def analysis_fields(report: AnalysisReport) -> dict[str, Any]:
    """Display values; spin and spin^c become 'n/a' for non-orientable matrices"""
    fields: dict[str, Any] = {
        "n": report.n,
        "orientable": report.orientable,
        "b1": report.b1,
        "b2": report.b2,
        "H1": report.h1,
        "H^1(Z)": report.h1z,
        "H^2(Z)": report.h2z,
        "dim_img_rho2": report.dim_img_rho2,
        "w1": report.w1,
        "w2": report.w2,
        "w2_square_free": report.w2_square_free,
        "derived_matrix": report.derived_matrix,
        "spin": report.spin,
        "spinc": report.spinc,
    }
    if report.spinc_by_oracle:
        for name, answer in report.spinc_by_oracle.items():
            fields[f"spinc[{name}]"] = answer
        fields["oracles_agree"] = report.oracles_agree
    return fields


def render_analysis(report: AnalysisReport, fmt: OutputFormat = "table") -> str:
    fields = analysis_fields(report)
    if fmt == "json-lines":
        payload = {key: NOT_APPLICABLE if value is None else value for key, value in fields.items()}
        return json.dumps(payload) + "\n"
    if fmt == "csv":
        return _csv([list(fields), [_flag(value) for value in fields.values()]])
    return _table([(key, _flag(value)) for key, value in fields.items()])


def _elapsed(row: CensusRow, timing: bool) -> str:
    if not timing or row.elapsed is None:
        return ""
    return f"{row.elapsed:.3f}"


def render_census(
    rows: Sequence[CensusRow], fmt: OutputFormat = "table", timing: bool = True
) -> str:
    """
    Render census rows.

    CSV carries exactly the columns dimension, orientable, spinc, spin,
    elapsed_s; without timing the elapsed column is left empty so that the
    output is byte-stable.
    """
    if fmt == "csv":
        body = [
            [row.dimension, row.orientable, row.spinc, row.spin, _elapsed(row, timing)]
            for row in rows
        ]
        return _csv([list(CENSUS_CSV_HEADER), *body])

    if fmt == "json-lines":
        lines = []
        for row in rows:
            payload = row.model_dump(mode="json")
            if not timing:
                payload["elapsed"] = None
            lines.append(json.dumps(payload) + "\n")
        return "".join(lines)

    header = [*CENSUS_CSV_HEADER, "published", "matches"]
    table = [header]
    for row in rows:
        published = (
            f"{row.published_spinc}/{row.published_spin}"
            if row.published_spinc is not None
            else ""
        )
        table.append(
            [
                str(row.dimension),
                str(row.orientable),
                str(row.spinc),
                str(row.spin),
                _elapsed(row, timing),
                published,
                _flag(row.matches_published),
            ]
        )
    widths = [max(len(line[k]) for line in table) for k in range(len(header))]
    return "".join(
        "  ".join(cell.rjust(width) for cell, width in zip(line, widths)).rstrip() + "\n"
        for line in table
    )


def render_verification(report: VerificationReport, fmt: OutputFormat = "table") -> str:
    if fmt == "json-lines":
        return report.model_dump_json() + "\n"

    failure = report.failure
    if fmt == "csv":
        return _csv(
            [
                ["success", "checked", "check", "dimension", "detail", "matrix"],
                [
                    _flag(report.success),
                    report.checked,
                    failure.check if failure else "",
                    failure.dimension if failure else "",
                    failure.detail if failure else "",
                    failure.matrix if failure else "",
                ],
            ]
        )

    pairs = [
        ("success", _flag(report.success)),
        ("checked", str(report.checked)),
        ("exhaustive", ",".join(map(str, report.exhaustive_dimensions)) or "-"),
        ("sampled", ",".join(map(str, report.sampled_dimensions)) or "-"),
    ]
    if failure:
        pairs += [
            ("check", failure.check),
            ("dimension", str(failure.dimension)),
            ("detail", failure.detail),
            ("matrix", failure.matrix.rstrip("\n")),
        ]
    return _table(pairs)
