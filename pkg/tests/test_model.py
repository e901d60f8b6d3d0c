import math

import pytest
from hypothesis import given, strategies as st

from gupent.model import (NormalModes, OscillatorConfig, ground_energy, minimal_length,
                          normal_modes, single_mode_energy)


@pytest.mark.parametrize("kwargs", [
    dict(m=0), dict(k0=-1), dict(hbar=0), dict(J=-0.1), dict(alpha=-1e-3),
])
def test_config_rejects_invalid(kwargs):
    with pytest.raises(ValueError):
        OscillatorConfig(**kwargs)


def test_normal_modes_examples():
    md = normal_modes(OscillatorConfig(J=0))
    assert (md.omega1, md.omega2, md.xi) == (1.0, 1.0, 0.0)
    md = normal_modes(OscillatorConfig(J=1))
    assert md.omega1 == 1.0
    assert md.omega2 == pytest.approx(1.7320508075688772, rel=1e-15)
    # mpmath, 40 digits: ((3**0.25 - 1)/(3**0.25 + 1))**2
    assert md.xi == pytest.approx(0.018623989297427888066, rel=1e-13)
    md = normal_modes(OscillatorConfig(m=2, k0=8, J=0))
    assert (md.omega1, md.omega2, md.xi) == (2.0, 2.0, 0.0)


@given(st.floats(0.1, 10), st.floats(0.1, 10), st.floats(0, 100))
def test_mode_ordering(m, k0, J):
    md = normal_modes(OscillatorConfig(m=m, k0=k0, J=J))
    assert md.omega2 >= md.omega1 > 0
    assert 0 <= md.xi < 1
    assert (md.xi == 0) == (md.w == 0)
    if J == 0:
        assert md.xi == 0


def test_normal_modes_reject_nonpositive():
    with pytest.raises(ValueError):
        NormalModes(0.0, 1.0)


@pytest.mark.parametrize("alpha, hbar, expected", [(0, 1, 0.0), (3, 1, 3.0), (0.12, 1, 0.6)])
def test_minimal_length(alpha, hbar, expected):
    assert minimal_length(alpha, hbar) == pytest.approx(expected, rel=1e-15)


def test_minimal_length_rejects_negative():
    with pytest.raises(ValueError):
        minimal_length(-1.0)


def test_single_mode_energy():
    assert single_mode_energy(0, 0.0, 1.0) == 0.5
    assert single_mode_energy(0, 0.1, 1.0) == pytest.approx(0.575, rel=1e-15)
    assert single_mode_energy(1, 0.0, 2.0) == 3.0
    with pytest.raises(ValueError):
        single_mode_energy(-1, 0.0, 1.0)


def test_ground_energy_examples():
    e = ground_energy(OscillatorConfig())
    assert (e.c0, e.c1) == (1.0, 1.5)
    e = ground_energy(OscillatorConfig(J=1))
    assert e.c0 == pytest.approx((1 + math.sqrt(3)) / 2, rel=1e-15)
    assert e.c1 == pytest.approx(2.7990381056766580, rel=1e-14)
    # c0 is the same whatever alpha the config carries
    assert ground_energy(OscillatorConfig(J=1, alpha=0.3)).c0 == e.c0


@given(st.floats(0.2, 5), st.floats(0.2, 5), st.floats(0, 20), st.floats(0.2, 3))
def test_ground_energy_regrouping(m, k0, J, hbar):
    cfg = OscillatorConfig(m=m, k0=k0, J=J, hbar=hbar)
    md = normal_modes(cfg)
    w1, w2 = md.omega1, md.omega2
    regrouped = 3 / 8 * m * hbar ** 2 * (w1 ** 2 + w2 ** 2) + 3 / 4 * m * hbar ** 2 * w1 * w2
    assert ground_energy(cfg).c1 == pytest.approx(regrouped, rel=1e-13)
