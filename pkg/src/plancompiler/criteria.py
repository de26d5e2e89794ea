"""Success-criterion checkers.

Five criterion kinds are supported: file_exists, file_has_column,
file_row_count, stdout_contains, and file_column_sorted.  All criteria for
a task must pass; evaluation is read-only over the run directory.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .executor import ExecutionResult

CRITERION_KINDS = (
    "file_exists",
    "file_has_column",
    "file_row_count",
    "stdout_contains",
    "file_column_sorted",
)

_REQUIRED_FIELDS = {
    "file_exists": ("path",),
    "file_has_column": ("path", "column"),
    "file_row_count": ("path", "count"),
    "stdout_contains": ("substring",),
    "file_column_sorted": ("path", "column", "direction"),
}


class CriterionSpecError(Exception):
    """A criterion is missing a field its kind requires."""


class TabularLoadError(Exception):
    """A file could not be loaded as tabular data."""


@dataclass(frozen=True)
class Criterion:
    kind: str
    path: str | None = None
    column: str | None = None
    count: int | None = None
    substring: str | None = None
    direction: str | None = None

    def __post_init__(self):
        if self.kind not in _REQUIRED_FIELDS:
            raise CriterionSpecError(f"unknown criterion kind '{self.kind}'")
        for name in _REQUIRED_FIELDS[self.kind]:
            if getattr(self, name) is None:
                raise CriterionSpecError(f"criterion '{self.kind}' requires field '{name}'")
        if self.kind == "file_row_count" and self.count < 0:
            raise CriterionSpecError("file_row_count requires a non-negative count")
        if self.kind == "file_column_sorted" and self.direction not in ("ascending", "descending"):
            raise CriterionSpecError("direction must be 'ascending' or 'descending'")

    @classmethod
    def from_json(cls, data: dict) -> "Criterion":
        known = {name: data.get(name) for name in ("kind", "path", "column", "count", "substring", "direction")}
        if known["kind"] is None:
            raise CriterionSpecError("criterion object has no 'kind'")
        return cls(**known)


@dataclass(frozen=True)
class Table:
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]
    source_format: str


def load_tabular(path: str | Path) -> Table:
    """Load a CSV or JSON file as a table.

    CSV: the first row is the header.  JSON: the top level must be an array
    of objects; columns are the union of keys in first-seen order and
    missing keys become null cells.  The format is chosen by file extension
    (.json means JSON, anything else CSV).
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise TabularLoadError(f"cannot read {path}: {exc}") from exc

    if path.suffix.lower() == ".json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise TabularLoadError(f"{path} is not valid JSON: {exc}") from exc
        if not isinstance(data, list) or any(not isinstance(row, dict) for row in data):
            raise TabularLoadError(f"{path}: top-level JSON must be an array of objects")
        columns: list[str] = []
        for row in data:
            for key in row:
                if key not in columns:
                    columns.append(key)
        rows = tuple(tuple(row.get(column) for column in columns) for row in data)
        return Table(columns=tuple(columns), rows=rows, source_format="JSON")

    records = list(csv.reader(text.splitlines()))
    if not records or not records[0]:
        raise TabularLoadError(f"{path}: empty CSV has no header row")
    header = tuple(records[0])
    width = len(header)
    rows_list = []
    for number, record in enumerate(records[1:], start=2):
        if not record:
            continue  # blank line, not a data row
        if len(record) > width:
            raise TabularLoadError(f"{path}: row {number} has more cells than the header")
        padded = tuple(record) + (None,) * (width - len(record))
        rows_list.append(padded)
    return Table(columns=header, rows=tuple(rows_list), source_format="CSV")


def _is_null(cell: Any) -> bool:
    if cell is None or cell == "":
        return True
    return isinstance(cell, float) and math.isnan(cell)


def _sort_values(table: Table, column: str) -> list:
    """Non-null cells of a column, as floats when every one parses as a
    number (parsed NaN counts as null), otherwise as text."""
    position = table.columns.index(column)
    cells = [row[position] for row in table.rows if not _is_null(row[position])]
    numeric = []
    for cell in cells:
        if isinstance(cell, bool):
            return [str(cell) for cell in cells]
        try:
            value = float(cell)
        except (TypeError, ValueError):
            return [str(cell) for cell in cells]
        if not math.isnan(value):
            numeric.append(value)
    return numeric


@dataclass(frozen=True)
class CriterionOutcome:
    criterion: Criterion
    passed: bool
    reason: str | None = None


@dataclass
class CriteriaReport:
    outcomes: list[CriterionOutcome]
    verdict: bool
    warnings: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "outcomes": [
                {"kind": o.criterion.kind, "passed": o.passed, "reason": o.reason}
                for o in self.outcomes
            ],
            "warnings": self.warnings,
        }


def _eval_criterion(
    criterion: Criterion, result: ExecutionResult | None, run_dir: Path
) -> CriterionOutcome:
    kind = criterion.kind

    if kind == "stdout_contains":
        stdout = result.stdout if result is not None else ""
        passed = criterion.substring in stdout
        return CriterionOutcome(criterion, passed, None if passed else "substring not in stdout")

    target = run_dir / criterion.path
    if kind == "file_exists":
        passed = target.exists()
        return CriterionOutcome(criterion, passed, None if passed else f"{criterion.path} missing")

    try:
        table = load_tabular(target)
    except TabularLoadError as exc:
        return CriterionOutcome(criterion, False, str(exc))

    if kind == "file_has_column":
        passed = criterion.column in table.columns
        return CriterionOutcome(
            criterion, passed, None if passed else f"column '{criterion.column}' absent"
        )

    if kind == "file_row_count":
        actual = len(table.rows)
        passed = actual == criterion.count
        return CriterionOutcome(
            criterion, passed, None if passed else f"expected {criterion.count} rows, got {actual}"
        )

    # file_column_sorted: non-strict monotone after excluding null cells.
    if criterion.column not in table.columns:
        return CriterionOutcome(criterion, False, f"column '{criterion.column}' absent")
    values = _sort_values(table, criterion.column)
    if criterion.direction == "ascending":
        passed = all(a <= b for a, b in zip(values, values[1:]))
    else:
        passed = all(a >= b for a, b in zip(values, values[1:]))
    return CriterionOutcome(
        criterion, passed, None if passed else f"column '{criterion.column}' not {criterion.direction}"
    )


def check_file_exists(run_dir: str | Path, criterion: Criterion) -> bool:
    return _eval_criterion(criterion, None, Path(run_dir)).passed


def check_file_has_column(run_dir: str | Path, criterion: Criterion) -> bool:
    return _eval_criterion(criterion, None, Path(run_dir)).passed


def check_file_row_count(run_dir: str | Path, criterion: Criterion) -> bool:
    return _eval_criterion(criterion, None, Path(run_dir)).passed


def check_stdout_contains(result: ExecutionResult, criterion: Criterion) -> bool:
    return _eval_criterion(criterion, result, Path(".")).passed


def check_file_column_sorted(run_dir: str | Path, criterion: Criterion) -> bool:
    return _eval_criterion(criterion, None, Path(run_dir)).passed


def evaluate_criteria(
    criteria: list[Criterion], result: ExecutionResult | None, run_dir: str | Path
) -> CriteriaReport:
    """Evaluate every criterion; the verdict is their conjunction.

    Zero criteria yield a vacuously true verdict, recorded as a
    task-authoring warning.
    """
    run_dir = Path(run_dir)
    outcomes = [_eval_criterion(criterion, result, run_dir) for criterion in criteria]
    warnings = [] if criteria else ["task declares no criteria; verdict is vacuously true"]
    return CriteriaReport(
        outcomes=outcomes,
        verdict=all(outcome.passed for outcome in outcomes),
        warnings=warnings,
    )
