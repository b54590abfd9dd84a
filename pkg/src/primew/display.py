"""
Text output for the primew commands.

Everything the CLI prints goes through `Display`, which writes plain lines to
a rich Console. Reals are printed with 15 significant digits and integers
unpadded, so two runs with the same flags produce the same bytes.
"""

import math
from pathlib import Path
from typing import IO, Iterable

from rich.console import Console

from .asymptotics import ConvergenceRow, MatchRow
from .bounds.spec import BoundSpec, ValidityReport
from .lambert.kernel import WResult

LISTED_VIOLATIONS = 20


def fmt(value: float) -> str:
    """15 significant digits; nan and inf spelled out."""
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.15g}"


class Display:
    """
    Renders command results as lines of text.

    Args:
        file: stream to write to (stdout when None)
    """

    def __init__(self, file: IO[str] | None = None):
        self.console = Console(file=file, highlight=False, markup=False, emoji=False, soft_wrap=True)

    def line(self, text: str = ""):
        self.console.print(text)

    def w_result(self, result: WResult, trace: list[float] | None = None):
        self.line(f"branch: {result.branch.label}")
        self.line(f"x: {fmt(result.x)}")
        self.line(f"value: {fmt(result.value)}")
        self.line(f"residual: {fmt(result.residual)}")
        self.line(f"iterations: {result.iterations}")
        if trace is not None:
            for step, w in enumerate(trace):
                self.line(f"  {step}  {fmt(w)}")

    def report(self, report: ValidityReport):
        """Summary line, the first violations, then threshold and skip count."""
        count = len(report.violations)
        noun = "violation" if count == 1 else "violations"
        self.line(f"{report.spec.label} on [{report.lo}, {report.hi}]: {count} {noun}")
        for v in report.violations[:LISTED_VIOLATIONS]:
            flag = "  marginal" if v.marginal else ""
            self.line(f"  {v.argument}  bound {fmt(v.bound)}  truth {v.truth}{flag}")
        if count > LISTED_VIOLATIONS:
            self.line(f"  ... {count - LISTED_VIOLATIONS} more")
        self.threshold(report.empirical_threshold)
        if report.skipped:
            self.line(f"skipped (outside the domain): {len(report.skipped)}, from {report.skipped[0]}")

    def threshold(self, value: int | None):
        self.line(f"empirical threshold: {'none' if value is None else value}")

    def crossover(self, spec_a: BoundSpec, spec_b: BoundSpec, x: float):
        self.line(f"crossover of {spec_a.label} and {spec_b.label}: x = {fmt(x)}")

    def convergence(self, rows: list[ConvergenceRow]):
        """One line per row: index, truth, then estimate/ratio/rel_error per estimator."""
        if not rows:
            return
        ids = list(rows[0].estimates)
        header = ["index", "truth"]
        for key in ids:
            header += [key, f"ratio_{key}", f"rel_error_{key}"]
        self.line("  ".join(header))
        for row in rows:
            cells = [str(row.index), str(row.truth)]
            for key in ids:
                cells += [fmt(row.estimates[key]), fmt(row.ratios[key]), fmt(row.rel_error[key])]
            self.line("  ".join(cells))

    def matches(self, rows: list[MatchRow]):
        self.line("index  two_term_gap  three_term_gap")
        for row in rows:
            self.line(f"{row.index}  {fmt(row.two_term_gap)}  {fmt(row.three_term_gap)}")

    def written(self, paths: Iterable[Path]):
        for path in paths:
            self.line(f"wrote {path}")
