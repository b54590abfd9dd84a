"""
Closed-form solution of ln(a + b x) + c x = ln d through W.

Substituting u = c (a + b x) / b turns the equation into u e^u = (c d / b) e^(a c / b),
so x = W((c d / b) e^(a c / b)) / c - a / b on whichever branch is asked for.
"""

import math
from dataclasses import dataclass

from ..errors import DomainError
from .kernel import Branch, lambertw


@dataclass(frozen=True)
class LogLinearProblem:
    a: float
    b: float
    c: float
    d: float
    branch: Branch = Branch.PRINCIPAL

    def __post_init__(self):
        if self.b == 0.0:
            raise DomainError("b must be nonzero", self.b)
        if self.c == 0.0:
            raise DomainError("c must be nonzero", self.c)
        if not self.d > 0.0:
            raise DomainError(f"d must be positive, got {self.d!r}", self.d)
        object.__setattr__(self, "branch", Branch.parse(self.branch))

    @property
    def w_argument(self) -> float:
        try:
            return (self.c * self.d / self.b) * math.exp(self.a * self.c / self.b)
        except OverflowError:
            raise DomainError(f"exp({self.a * self.c / self.b!r}) overflows") from None

    def residual(self, x: float) -> float:
        """ln(a + b x) + c x - ln d at `x`."""
        return math.log(self.a + self.b * x) + self.c * x - math.log(self.d)


def solve_log_linear(p: LogLinearProblem) -> float:
    """Return the root of ln(a + b x) + c x = ln d on the problem's branch."""
    try:
        w = lambertw(p.w_argument, p.branch)
    except DomainError as e:
        raise DomainError(
            f"W argument {p.w_argument!r} is outside the {p.branch.label} domain", p.w_argument
        ) from e
    x = w / p.c - p.a / p.b
    if not p.a + p.b * x > 0.0:
        raise DomainError(f"a + b x = {p.a + p.b * x!r} is not positive at the root", x)
    return x
