# src/primew/bounds/spec.py
from dataclasses import dataclass, field
from enum import Enum

from ..errors import DomainError


class Target(Enum):
    """What a bound is compared against."""

    PI = "pi"  # pi(x), argument is x
    PN = "pn"  # p_n, argument is n


class Direction(Enum):
    UPPER = "upper"
    LOWER = "lower"


class BoundFamily(Enum):
    """
    Every bound family, keyed by the stable id used by the CLI and in reports.
    """

    PI_UPPER_W = "pi-upper-w"
    PI_LOWER_POWER = "pi-lower-power"
    PI_LOWER_LINEAR = "pi-lower-linear"
    PN_UPPER = "pn-upper"
    PN_LOWER = "pn-lower"
    PN_BAND_UPPER = "pn-band-upper"
    PN_BAND_LOWER = "pn-band-lower"
    U_INVERSE = "u-inverse"
    # the classical inequalities the W bounds are derived from
    PN_LOG_LOWER = "pn-log-lower"
    PN_LOGLOG_UPPER = "pn-loglog-upper"
    PN_POWER_UPPER = "pn-power-upper"
    PN_LINEAR_UPPER = "pn-linear-upper"
    PI_LOG_LOWER = "pi-log-lower"
    PI_LOG_UPPER = "pi-log-upper"

    @classmethod
    def parse(cls, value: "BoundFamily | str") -> "BoundFamily":
        if isinstance(value, BoundFamily):
            return value
        try:
            return cls(value)
        except ValueError:
            known = ", ".join(f.value for f in cls)
            raise DomainError(f"unknown bound id {value!r}; known ids: {known}") from None


# Which parameter each family reads. Families not listed take no parameters.
PARAMETERS: dict[BoundFamily, str] = {
    BoundFamily.PI_LOWER_POWER: "epsilon",
    BoundFamily.PN_BAND_UPPER: "epsilon",
    BoundFamily.PN_BAND_LOWER: "epsilon",
    BoundFamily.PN_POWER_UPPER: "epsilon",
    BoundFamily.PI_LOWER_LINEAR: "linear_coeff",
    BoundFamily.PN_LINEAR_UPPER: "linear_coeff",
    BoundFamily.PN_UPPER: "shift",
}


@dataclass(frozen=True)
class BoundSpec:
    """
    One member of a bound family: the family plus its real parameters.

    Only the parameter named in `PARAMETERS` for the family is read; the
    others are ignored. `claimed_from` is the validity start the bound is
    published with, where one is known.
    """

    family: BoundFamily
    epsilon: float | None = None
    linear_coeff: float | None = None
    shift: float = 0.0
    claimed_from: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", BoundFamily.parse(self.family))
        needed = PARAMETERS.get(self.family)
        if needed == "epsilon" and not (self.epsilon is not None and self.epsilon > 0):
            raise DomainError(f"{self.family.value} needs epsilon > 0, got {self.epsilon!r}", self.epsilon)
        if needed == "linear_coeff" and not (self.linear_coeff is not None and self.linear_coeff > 0):
            raise DomainError(
                f"{self.family.value} needs a coefficient > 0, got {self.linear_coeff!r}", self.linear_coeff
            )
        if needed == "shift" and not self.shift >= 0:
            raise DomainError(f"{self.family.value} needs shift >= 0, got {self.shift!r}", self.shift)

    @property
    def label(self) -> str:
        needed = PARAMETERS.get(self.family)
        if needed is None:
            return self.family.value
        name = {"epsilon": "eps", "linear_coeff": "coeff", "shift": "shift"}[needed]
        return f"{self.family.value} {name}={getattr(self, needed):.15g}"


@dataclass(frozen=True)
class Violation:
    """An argument where the bound fails, or sits within tolerance of the truth."""

    argument: int
    bound: float
    truth: int
    marginal: bool = False


@dataclass(frozen=True)
class ValidityReport:
    """
    Outcome of sweeping one bound over the integers in [lo, hi].

    `empirical_threshold` is the smallest t in [lo, hi] such that the bound
    holds at every in-domain integer of [t, hi], or None when it fails at hi.
    Out-of-domain arguments are listed in `skipped`, except for families
    registered with `undefined_fails` (pn-upper), where an undefined bound is
    a violation with a NaN bound value.
    """

    spec: BoundSpec
    lo: int
    hi: int
    violations: tuple[Violation, ...] = ()
    skipped: tuple[int, ...] = ()
    empirical_threshold: int | None = field(default=None)

    def __post_init__(self):
        if self.empirical_threshold is None and not self.violations:
            object.__setattr__(self, "empirical_threshold", self.lo)

    @property
    def holds(self) -> bool:
        return not self.violations

    @property
    def marginal(self) -> tuple[Violation, ...]:
        return tuple(v for v in self.violations if v.marginal)

    @classmethod
    def from_parts(
        cls,
        spec: BoundSpec,
        lo: int,
        hi: int,
        violations: list[Violation],
        skipped: list[int],
    ) -> "ValidityReport":
        violations = sorted(violations, key=lambda v: v.argument)
        skipped = sorted(skipped)
        if not violations:
            threshold = lo
        else:
            last = violations[-1].argument
            threshold = last + 1 if last < hi else None
        return cls(spec, lo, hi, tuple(violations), tuple(skipped), threshold)

    @classmethod
    def merge(cls, reports: list["ValidityReport"]) -> "ValidityReport":
        """Combine reports over adjacent shards of one range."""
        if not reports:
            raise ValueError("nothing to merge")
        spec = reports[0].spec
        return cls.from_parts(
            spec,
            min(r.lo for r in reports),
            max(r.hi for r in reports),
            [v for r in reports for v in r.violations],
            [s for r in reports for s in r.skipped],
        )
