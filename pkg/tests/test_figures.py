import math

import numpy as np
import pandas as pd
import pytest

from primew.bounds import pi_lower_power, pi_upper, pn_lower, pn_upper
from primew.figures import write_figures
from primew.lambert import Branch, lambertw


@pytest.fixture(scope="module")
def frames(tmp_path_factory):
    out = tmp_path_factory.mktemp("figures")
    paths = write_figures(out)
    return {p.name: (p, pd.read_csv(p)) for p in paths}


@pytest.mark.parametrize(
    "name, header, rows",
    [
        ("figure1.csv", "x,pi,upper", 200),
        ("figure2.csv", "x,pi,upper,lower_eps_inv_e,lower_eps_inv_e3", 200),
        ("figure3.csv", "n,p_n,upper_thm5,upper_cor3", 100),
        ("figure4.csv", "n,p_n,lower_thm8", 100),
        ("figureW.csv", "x,w0,wm1", 401),
    ],
)
def test_headers_and_rows(frames, name, header, rows):
    path, frame = frames[name]
    text = path.read_text(encoding="utf-8")
    assert text.splitlines()[0] == header
    assert text.endswith("\n")
    assert len(frame) == rows


def test_pi_columns(frames, small_table):
    _, frame = frames["figure2.csv"]
    x = frame["x"].to_numpy()
    assert x[0] == 0.5 and x[-1] == 100.0
    assert frame["pi"].tolist() == [small_table.pi_of(v) for v in x]
    assert np.allclose(frame["upper"], pi_upper(x), rtol=1e-12, atol=0)
    assert np.allclose(frame["lower_eps_inv_e"], pi_lower_power(x, math.exp(-1)), rtol=1e-12, atol=0)
    assert np.allclose(frame["lower_eps_inv_e3"], pi_lower_power(x, math.exp(-3)), rtol=1e-12, atol=0)


def test_pn_columns(frames, small_table):
    _, upper = frames["figure3.csv"]
    assert upper["p_n"].tolist() == small_table.primes_range(1, 100).tolist()
    assert upper["upper_thm5"][:3].isna().all()
    n = upper["n"].to_numpy(dtype=np.float64)
    assert np.allclose(upper["upper_thm5"][3:], pn_upper(n[3:]), rtol=1e-12, atol=0)
    assert np.allclose(upper["upper_cor3"], pn_upper(n, math.e), rtol=1e-12, atol=0)

    _, lower = frames["figure4.csv"]
    assert lower["lower_thm8"][:13].isna().all()
    assert np.allclose(lower["lower_thm8"][13:], pn_lower(n[13:]), rtol=1e-12, atol=0)


def test_branch_columns(frames):
    _, frame = frames["figureW.csv"]
    x = frame["x"].to_numpy()
    assert x[0] == pytest.approx(-math.exp(-1)) and x[-1] == 4.0
    assert frame["wm1"][x >= 0].isna().all()
    assert frame["wm1"][x < 0].notna().all()
    assert np.allclose(frame["w0"], lambertw(x, Branch.PRINCIPAL), rtol=1e-12, atol=1e-15)


def test_rewrites_are_byte_identical(tmp_path):
    first = [p.read_bytes() for p in write_figures(tmp_path / "a", xmax=20, nmax=30)]
    second = [p.read_bytes() for p in write_figures(tmp_path / "b", xmax=20, nmax=30)]
    assert first == second
