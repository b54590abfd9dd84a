# src/primew/app.py

import argparse
import logging
import math
import sys
from pathlib import Path
from typing import IO, Sequence

from rich.console import Console
from rich.logging import RichHandler

from . import asymptotics
from .bounds import BoundFamily, BoundSpec, find_crossover, find_threshold, registry, verify_range
from .bounds.spec import Target
from .config import Settings
from .display import Display
from .errors import AmbiguityError, BracketError, ConvergenceError, DomainError, PrimewError
from .figures import write_figures
from .lambert import Branch, evaluate, halley_trace
from .primes import PrimeTable, build_table, limit_for_index, limit_for_value

log = logging.getLogger(__name__)

ASYM_KINDS = ("pi", "pn-basic", "pn-refined", "expansion", "match")


class UsageError(PrimewError):
    """Bad command line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def real(text: str) -> float:
    """A float, or e^k written as 'e^k' (so 'e^-3' is e to the minus 3)."""
    text = text.strip()
    try:
        if text.startswith("e^"):
            return math.exp(float(text[2:]))
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from None


def points(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _bound_options(parser: argparse.ArgumentParser):
    parser.add_argument("--bound", required=True, choices=[f.value for f in BoundFamily], metavar="ID")
    parser.add_argument("--eps", type=real, help="epsilon of the eps families")
    parser.add_argument("--coeff", type=real, help="coefficient c of the linear families")
    parser.add_argument("--shift", type=real, default=0.0, help="shift of pn-upper")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="primew", description="Lambert W and explicit bounds on pi(x) and p_n.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    parser.add_argument("--workers", type=int, help="threads for sharded sweeps")
    parser.add_argument("--shard-size", type=int, help="integers per sweep shard")
    commands = parser.add_subparsers(dest="command", required=True)

    w_eval = commands.add_parser("w-eval", help="evaluate one real branch of W")
    w_eval.add_argument("--branch", required=True, choices=["0", "-1"])
    w_eval.add_argument("--x", required=True, type=real)
    w_eval.add_argument("--trace", action="store_true", help="print the Halley iterates")

    verify = commands.add_parser("verify", help="check a bound at every integer of a range")
    _bound_options(verify)
    verify.add_argument("--from", dest="lo", required=True, type=int)
    verify.add_argument("--to", dest="hi", required=True, type=int)

    threshold = commands.add_parser("threshold", help="smallest start from which a bound holds")
    _bound_options(threshold)
    threshold.add_argument("--to", dest="hi", required=True, type=int)

    crossover = commands.add_parser("crossover", help="where two pi-lower-power bounds cross")
    crossover.add_argument("--eps-a", required=True, type=real)
    crossover.add_argument("--eps-b", required=True, type=real)
    crossover.add_argument("--lo", required=True, type=real)
    crossover.add_argument("--hi", required=True, type=real)

    figures = commands.add_parser("figures", help="write the plot data CSVs")
    figures.add_argument("--out", required=True, type=Path)
    figures.add_argument("--xmax", type=int, default=100)
    figures.add_argument("--nmax", type=int, default=100)

    asym = commands.add_parser("asym", help="asymptotic convergence tables")
    asym.add_argument("--kind", required=True, choices=ASYM_KINDS)
    asym.add_argument("--points", required=True, type=points)
    return parser


class PrimewApp:
    """
    The primew command line.

    One instance parses a command, runs it and reports an exit status:
    0 on success, 1 when a bound fails or a search comes back empty, 2 on
    usage and domain errors.

    Args:
        config: Settings overrides as a plain dict (see `Settings.from_dict`)
        stdout: where command output goes (sys.stdout when None)
        setup_logging: install the rich log handler on the root logger
    """

    def __init__(self, config: dict | None = None, stdout: IO[str] | None = None, setup_logging: bool = False):
        self.settings = Settings.from_dict(config)
        self.display = Display(stdout)
        self.stderr = Console(stderr=True, highlight=False, markup=False, emoji=False, soft_wrap=True)
        self.parser = build_parser()
        self.setup_logging = setup_logging
        self.handlers = {
            "w-eval": self._w_eval,
            "verify": self._verify,
            "threshold": self._threshold,
            "crossover": self._crossover,
            "figures": self._figures,
            "asym": self._asym,
        }

    def run(self, argv: Sequence[str] | None = None) -> int:
        try:
            args = self.parser.parse_args(argv)
        except UsageError as e:
            return self._fail(e, 2)
        except SystemExit as e:  # --help
            return int(e.code or 0)

        if self.setup_logging:
            self._configure_logging(args.verbose)
        try:
            settings = self.settings.with_overrides(workers=args.workers, shard_size=args.shard_size)
        except ValueError as e:
            return self._fail(e, 2)

        try:
            return self.handlers[args.command](args, settings)
        except (BracketError, AmbiguityError, ConvergenceError) as e:
            return self._fail(e, 1)
        except PrimewError as e:
            return self._fail(e, 2)

    def _fail(self, error: Exception, status: int) -> int:
        message = str(error).splitlines()[0] if str(error) else type(error).__name__
        self.stderr.print(f"error: {message}")
        return status

    def _configure_logging(self, verbose: bool):
        logging.basicConfig(
            level=logging.DEBUG if verbose else logging.WARNING,
            format="%(message)s",
            handlers=[RichHandler(console=Console(stderr=True), show_time=False, show_path=False)],
            force=True,
        )

    # --- commands ---------------------------------------------------------

    def _w_eval(self, args: argparse.Namespace, settings: Settings) -> int:
        branch = Branch.parse(args.branch)
        result = evaluate(args.x, branch)
        trace = halley_trace(args.x, branch) if args.trace else None
        self.display.w_result(result, trace)
        return 0

    def _spec(self, args: argparse.Namespace) -> BoundSpec:
        return BoundSpec(BoundFamily.parse(args.bound), epsilon=args.eps, linear_coeff=args.coeff, shift=args.shift)

    def _table_for(self, spec: BoundSpec, hi: int, settings: Settings) -> PrimeTable:
        # one prime past the range, so bounds that look at the next prime are covered
        if registry.get(spec.family).target is Target.PI:
            limit = limit_for_value(hi)
        else:
            limit = limit_for_index(hi)
        log.debug("sieving to %d for %s up to %d", limit, spec.label, hi)
        return build_table(limit, settings)

    def _verify(self, args: argparse.Namespace, settings: Settings) -> int:
        spec = self._spec(args)
        table = self._table_for(spec, args.hi, settings)
        report = verify_range(spec, table, args.lo, args.hi, settings)
        self.display.report(report)
        return 0 if report.holds else 1

    def _threshold(self, args: argparse.Namespace, settings: Settings) -> int:
        spec = self._spec(args)
        table = self._table_for(spec, args.hi, settings)
        value = find_threshold(spec, table, args.hi, settings)
        self.display.threshold(value)
        return 0 if value is not None else 1

    def _crossover(self, args: argparse.Namespace, settings: Settings) -> int:
        spec_a = BoundSpec(BoundFamily.PI_LOWER_POWER, epsilon=args.eps_a)
        spec_b = BoundSpec(BoundFamily.PI_LOWER_POWER, epsilon=args.eps_b)
        x = find_crossover(spec_a, spec_b, args.lo, args.hi)
        self.display.crossover(spec_a, spec_b, x)
        return 0

    def _figures(self, args: argparse.Namespace, settings: Settings) -> int:
        self.display.written(write_figures(args.out, args.xmax, args.nmax, settings))
        return 0

    def _asym(self, args: argparse.Namespace, settings: Settings) -> int:
        if not args.points:
            raise DomainError("--points is empty")
        if args.kind == "match":
            self.display.matches(asymptotics.expansion_match_table(args.points))
            return 0
        top = max(args.points)
        if args.kind == "pi":
            table = build_table(max(top, 2), settings)
            rows = asymptotics.pi_ratio_table(table, args.points)
        else:
            table = build_table(limit_for_index(top), settings)
            if args.kind == "expansion":
                rows = asymptotics.expansion_error_report(table, args.points)
            else:
                variant = asymptotics.Variant(args.kind.removeprefix("pn-"))
                rows = asymptotics.pn_ratio_table(table, args.points, variant)
        self.display.convergence(rows)
        return 0


def main():
    sys.exit(PrimewApp(setup_logging=True).run())


if __name__ == "__main__":
    main()
