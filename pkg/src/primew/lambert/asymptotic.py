"""Leading logarithmic asymptotics of the two real branches."""

import math

from ..errors import DomainError
from .kernel import BRANCH_POINT, CLAMP_TOL, Branch


def asymptotic_estimate(branch: Branch | int | str, x: float) -> float:
    """
    Two-term logarithmic estimate of W.

    Principal: ln x - ln ln x, for x > 1 (accurate as x -> inf).
    Minus-one: ln(-x) - ln(-ln(-x)), for -1/e <= x < 0 (accurate as x -> 0-).
    """
    branch = Branch.parse(branch)
    if branch is Branch.PRINCIPAL:
        if not x > 1.0:
            raise DomainError(f"principal asymptotic needs x > 1, got x = {x!r}", x)
        lx = math.log(x)
        return lx - math.log(lx)
    if BRANCH_POINT - CLAMP_TOL <= x < BRANCH_POINT:
        x = BRANCH_POINT
    if not BRANCH_POINT <= x < 0.0:
        raise DomainError(f"minus-one asymptotic needs -1/e <= x < 0, got x = {x!r}", x)
    lx = math.log(-x)
    return lx - math.log(-lx)
