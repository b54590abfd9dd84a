import math

import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from primew.errors import DomainError
from primew.lambert import Branch, LogLinearProblem, solve_log_linear

OMEGA = 0.5671432904097838
BACK_SUBSTITUTION_TOL = 1e-10


def test_ln_x_plus_x_is_zero():
    assert solve_log_linear(LogLinearProblem(0, 1, 1, 1)) == pytest.approx(OMEGA, abs=1e-12)


def test_ln_x_plus_x_is_one():
    assert solve_log_linear(LogLinearProblem(0, 1, 1, math.e)) == pytest.approx(1.0, abs=1e-12)


def test_shifted_problem_back_substitutes():
    p = LogLinearProblem(1, 1, 1, math.e)
    x = solve_log_linear(p)
    assert 0 < x < 1
    assert math.log(1 + x) + x == pytest.approx(1.0, abs=BACK_SUBSTITUTION_TOL)


def test_lower_branch():
    # ln x - x = ln(1/4) has two roots; the lower branch gives the larger one
    p = LogLinearProblem(0, 1, -1, 0.25, Branch.MINUS_ONE)
    x = solve_log_linear(p)
    assert x > 1
    assert abs(p.residual(x)) <= BACK_SUBSTITUTION_TOL


@pytest.mark.parametrize(
    "a, b, c, d",
    [(0, 0, 1, 1), (0, 1, 0, 1), (0, 1, 1, 0), (0, 1, 1, -2)],
)
def test_invalid_problems(a, b, c, d):
    with pytest.raises(DomainError):
        LogLinearProblem(a, b, c, d)


def test_argument_outside_branch():
    # ln x - x = ln 1 has no real root: the W argument is -1 < -1/e
    with pytest.raises(DomainError):
        solve_log_linear(LogLinearProblem(0, 1, -1, 1))


@seed(3)
@settings(max_examples=1000)
@given(
    a=st.floats(min_value=-1.0, max_value=1.0),
    b=st.floats(min_value=0.5, max_value=2.0),
    c=st.floats(min_value=0.5, max_value=2.0),
    d=st.floats(min_value=0.5, max_value=5.0),
)
def test_randomized_back_substitution(a, b, c, d):
    p = LogLinearProblem(a, b, c, d)
    x = solve_log_linear(p)
    assert abs(p.residual(x)) <= BACK_SUBSTITUTION_TOL
