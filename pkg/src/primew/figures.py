"""
Data behind the plots of pi(x), p_n and the two W branches, written as CSV.

Nothing is rendered here; each frame holds exactly the columns a plot needs.
Empty cells mark points where a bound is not claimed (or not defined), so
the files load into any plotting tool without filtering.
"""

import logging
import math
from pathlib import Path

import numpy as np
import pandas as pd

from .bounds import functions as fn
from .config import DEFAULTS, Settings
from .errors import DomainError
from .lambert.kernel import BRANCH_POINT, Branch, lambertw
from .primes.table import PrimeTable, build_table, limit_for_index

log = logging.getLogger(__name__)

X_STEP = 0.5
BRANCH_SAMPLES = 401
BRANCH_XMAX = 4.0
PN_UPPER_FROM = 4
PN_LOWER_FROM = 14

CSV_OPTIONS = {"index": False, "float_format": "%.15g", "na_rep": "", "lineterminator": "\n"}


def x_grid(xmax: int) -> np.ndarray:
    """0.5, 1.0, ..., xmax."""
    return X_STEP * np.arange(1, int(round(xmax / X_STEP)) + 1)


def _pi_column(table: PrimeTable, xs: np.ndarray) -> np.ndarray:
    # pi is a step function, so pi(x) = pi(floor x)
    counts = table.pi_range(0, int(math.floor(xs[-1])))
    return counts[np.floor(xs).astype(np.int64)]


def pi_upper_frame(table: PrimeTable, xmax: int) -> pd.DataFrame:
    xs = x_grid(xmax)
    return pd.DataFrame({"x": xs, "pi": _pi_column(table, xs), "upper": fn.pi_upper(xs)})


def pi_bounds_frame(table: PrimeTable, xmax: int) -> pd.DataFrame:
    frame = pi_upper_frame(table, xmax)
    xs = frame["x"].to_numpy()
    frame["lower_eps_inv_e"] = fn.pi_lower_power(xs, math.exp(-1.0))
    frame["lower_eps_inv_e3"] = fn.pi_lower_power(xs, math.exp(-3.0))
    return frame


def pn_upper_frame(table: PrimeTable, nmax: int) -> pd.DataFrame:
    ns = np.arange(1, nmax + 1)
    args = ns.astype(np.float64)
    upper = np.full(ns.shape, np.nan)
    claimed = ns >= PN_UPPER_FROM
    upper[claimed] = fn.pn_upper(args[claimed])
    return pd.DataFrame(
        {
            "n": ns,
            "p_n": table.primes_range(1, nmax),
            "upper_thm5": upper,
            "upper_cor3": fn.pn_upper(args, math.e),
        }
    )


def pn_lower_frame(table: PrimeTable, nmax: int) -> pd.DataFrame:
    ns = np.arange(1, nmax + 1)
    lower = np.full(ns.shape, np.nan)
    claimed = ns >= PN_LOWER_FROM
    lower[claimed] = fn.pn_lower(ns[claimed].astype(np.float64))
    return pd.DataFrame({"n": ns, "p_n": table.primes_range(1, nmax), "lower_thm8": lower})


def lambert_branches_frame() -> pd.DataFrame:
    xs = np.linspace(BRANCH_POINT, BRANCH_XMAX, BRANCH_SAMPLES)
    return pd.DataFrame(
        {
            "x": xs,
            "w0": lambertw(xs, Branch.PRINCIPAL),
            "wm1": lambertw(xs, Branch.MINUS_ONE, strict=False),
        }
    )


def write_figures(out: Path, xmax: int = 100, nmax: int = 100, settings: Settings = DEFAULTS) -> list[Path]:
    """
    Write the five figure CSVs into `out`, creating it if needed.

    Args:
        out: output directory
        xmax: last x of the pi(x) grids (step 0.5)
        nmax: last index of the p_n tables

    Returns:
        The written paths, in a fixed order.
    """
    if xmax < 1 or nmax < 1:
        raise DomainError(f"xmax and nmax must be at least 1, got {xmax} and {nmax}")
    table = build_table(max(int(xmax), limit_for_index(nmax)), settings)
    frames = {
        "figure1.csv": pi_upper_frame(table, xmax),
        "figure2.csv": pi_bounds_frame(table, xmax),
        "figure3.csv": pn_upper_frame(table, nmax),
        "figure4.csv": pn_lower_frame(table, nmax),
        "figureW.csv": lambert_branches_frame(),
    }
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, frame in frames.items():
        path = out / name
        frame.to_csv(path, encoding="utf-8", **CSV_OPTIONS)
        log.info("wrote %s (%d rows)", path, len(frame))
        written.append(path)
    return written
