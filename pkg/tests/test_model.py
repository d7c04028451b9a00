import dataclasses
import math

import numpy as np
import pytest

from onedatom import (BlochState, DriveField, NonFiniteInput, NonPositiveRate,
                      make_params, outcome_from_amplitudes, params_from_ratios)


def test_ideal_bad_cavity_point():
    p = make_params(gamma=1.0, kappa=500.0)
    assert p.q_ratio == 1.0
    assert p.f_is_infinite
    assert math.isinf(p.f_ratio)
    assert p.beta == 1.0
    assert p.is_bad_cavity
    assert p.is_ideal


def test_unit_f_point():
    p = make_params(gamma=1.0, kappa=500.0, gamma_at=1.0)
    assert p.q_ratio == 1.0
    assert p.f_ratio == pytest.approx(1.0, rel=1e-15)
    assert p.beta == pytest.approx(0.5, rel=1e-15)
    assert not p.is_ideal


def test_q_ratio_direct_substitution():
    p = make_params(gamma=1.0, kappa=10.0, gamma_cav=20.0)
    assert p.q_ratio == pytest.approx(0.5, rel=1e-15)


def test_bad_cavity_flag_is_warning_not_error():
    # gamma/kappa above the threshold still constructs.
    p = make_params(gamma=1.0, kappa=2.0)
    assert not p.is_bad_cavity


@pytest.mark.parametrize("kwargs", [
    dict(gamma=0.0, kappa=1.0),
    dict(gamma=-1.0, kappa=1.0),
    dict(gamma=1.0, kappa=0.0),
    dict(gamma=1.0, kappa=1.0, gamma_at=-0.1),
    dict(gamma=1.0, kappa=1.0, gamma_cav=-0.1),
    dict(gamma=1.0, kappa=1.0, gamma_star=-0.1),
])
def test_rate_validation(kwargs):
    with pytest.raises(NonPositiveRate):
        make_params(**kwargs)


@pytest.mark.parametrize("kwargs", [
    dict(gamma=math.nan, kappa=1.0),
    dict(gamma=1.0, kappa=math.inf),
    dict(gamma=1.0, kappa=1.0, delta=math.nan),
])
def test_nonfinite_validation(kwargs):
    with pytest.raises(NonFiniteInput):
        make_params(**kwargs)


def test_q_ratio_strictly_decreasing_in_gamma_cav():
    values = [make_params(1.0, 500.0, gamma_cav=g).q_ratio
              for g in (0.0, 1.0, 10.0, 100.0, 1000.0)]
    assert values[0] == 1.0
    assert all(b < a for a, b in zip(values, values[1:]))


def test_f_identity_and_beta_monotone():
    rng = np.random.default_rng(7)
    prev_beta = 0.0
    for f in sorted(rng.uniform(0.1, 50.0, size=12)):
        p = params_from_ratios(2.0, 800.0, q_ratio=0.7, f=f)
        assert p.f_ratio * p.loss_rate == pytest.approx(
            p.q_ratio * p.gamma, rel=1e-12)
        assert p.beta > prev_beta
        prev_beta = p.beta
    assert params_from_ratios(1.0, 500.0, f=1.0).beta == pytest.approx(0.5)


def test_params_from_ratios_roundtrip():
    p = params_from_ratios(1.0, 500.0, q_ratio=0.96, f=2.6)
    assert p.q_ratio == pytest.approx(0.96, rel=1e-14)
    assert p.f_ratio == pytest.approx(2.6, rel=1e-14)
    assert p.gamma_star == 0.0


def test_types_are_frozen():
    p = make_params(1.0, 500.0)
    with pytest.raises(dataclasses.FrozenInstanceError):
        p.gamma = 2.0
    d = DriveField(0.0, 1.0)
    with pytest.raises(dataclasses.FrozenInstanceError):
        d.b_in = 2.0


def test_drive_field_power():
    d = DriveField(0.5, 3.0 + 4.0j)
    assert d.p_in == pytest.approx(25.0)
    d2 = DriveField.from_power(0.0, 0.25)
    assert d2.b_in == pytest.approx(0.5)
    with pytest.raises(NonPositiveRate):
        DriveField.from_power(0.0, -1.0)
    with pytest.raises(NonFiniteInput):
        DriveField(0.0, complex(math.nan, 0.0))


def test_bloch_state_invariants():
    assert BlochState.ground().is_physical()
    assert BlochState(0.5j, 0.0).is_physical()
    assert not BlochState(0.0j, 0.7).is_physical()
    assert not BlochState(0.6 + 0.0j, -0.5).is_physical()
    assert not BlochState(complex(math.nan), 0.0).is_physical()


def test_outcome_bookkeeping():
    out = outcome_from_amplitudes(-0.5, 0.5, 2.0)
    assert out.cap_t == pytest.approx(0.25)
    assert out.cap_r == pytest.approx(0.25)
    assert out.p_t == pytest.approx(0.5)
    assert out.p_noise == pytest.approx(1.0)
    assert out.p_in == pytest.approx(2.0)
