import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from onedatom import (DephasingUnsupported, NonPositiveRate,
                      UnsupportedRegime, bistability_scan,
                      contrast_enhancement, critical_power_watts,
                      kerr_equivalent, make_params, params_from_ratios,
                      slow_light, switching_intensity)

IDEAL = make_params(gamma=1.0, kappa=500.0)


def leaky(f):
    return params_from_ratios(1.0, 500.0, q_ratio=1.0, f=f)


def test_slow_light_f10_values():
    r = slow_light(leaky(10.0))
    assert r.delay_analytic == pytest.approx(2.0 * (10.0 / 11.0), rel=1e-14)
    assert r.t_per_stage == pytest.approx((10.0 / 11.0) ** 2, rel=1e-12)
    assert r.n_half == pytest.approx(0.5 * math.log(2.0) / math.log(1.1),
                                     abs=1e-12)
    assert r.total_delay_at_n_half == pytest.approx(r.n_half * r.delay_analytic,
                                                    rel=1e-14)


@pytest.mark.parametrize("f", [5.0, 10.0, 100.0])
def test_slow_light_numeric_group_delay(f):
    r = slow_light(leaky(f))
    assert abs(r.delay_numeric - r.delay_analytic) / r.delay_analytic < 0.02
    assert r.delay_numeric > 0.0


def test_slow_light_chain_bookkeeping():
    r = slow_light(leaky(10.0), n_stages=3)
    assert r.delay_after_stages == pytest.approx(3 * r.delay_analytic)
    assert r.t_after_stages == pytest.approx(r.t_per_stage ** 3)


def test_slow_light_perfect_emitter():
    r = slow_light(IDEAL)
    assert r.beta == 1.0
    assert r.delay_analytic == pytest.approx(2.0, rel=1e-14)
    assert math.isinf(r.n_half)


def test_slow_light_preconditions():
    with pytest.raises(UnsupportedRegime):
        slow_light(params_from_ratios(1.0, 500.0, q_ratio=0.9, f=10.0))
    with pytest.raises(DephasingUnsupported):
        slow_light(make_params(1.0, 500.0, gamma_star=0.1))
    with pytest.raises(NonPositiveRate):
        slow_light(leaky(10.0), n_stages=0)


def test_bistability_low_drive_slope_vanishes():
    scan = bistability_scan(IDEAL, 0.5, np.logspace(-3, 0, 50))
    assert scan.slope_analytic[0] < 1e-5


def test_bistability_always_single_valued():
    grid = np.logspace(-3, 4, 7001)
    for a in (0.1, 0.5, 0.9, 0.99):
        scan = bistability_scan(IDEAL, a, grid)
        assert scan.unique_solution
        assert scan.max_slope < 1.0


def test_bistability_slope_formula_vs_numeric():
    grid = np.logspace(-3, 4, 2001)
    scan = bistability_scan(IDEAL, 0.5, grid)
    assert np.max(np.abs(scan.slope_analytic - scan.slope_numeric)) < 1e-8
    # slope approaches 1 from below at large x
    assert scan.slope_analytic[-1] > 0.999
    assert np.all(scan.slope_analytic < 1.0)


def test_bistability_preconditions():
    with pytest.raises(UnsupportedRegime):
        bistability_scan(make_params(1.0, 500.0, gamma_at=0.1), 0.5, [1.0, 2.0])
    with pytest.raises(NonPositiveRate):
        bistability_scan(IDEAL, 1.0, [1.0, 2.0])
    with pytest.raises(NonPositiveRate):
        bistability_scan(IDEAL, 0.5, [2.0, 1.0])


def test_reshape_low_power_limit_is_extinction_ratio():
    r0 = contrast_enhancement(0.0, 4.0, IDEAL)
    assert r0.c_ideal == 4.0
    assert r0.c_leaky == 4.0
    tiny = contrast_enhancement(1e-12, 4.0, IDEAL)
    assert abs(tiny.c_ideal - 4.0) < 1e-9


def test_reshape_ideal_closed_form_large_x():
    d = 4.0
    x = 1e9 * d
    r = contrast_enhancement(x, d, IDEAL)
    assert r.c_ideal == pytest.approx(d ** 3, rel=1e-6)


def test_reshape_ideal_exceeds_unity():
    for x in np.logspace(-3, 3, 20):
        assert contrast_enhancement(x, 10.0, IDEAL).c_ideal > 1.0


def test_reshape_leaky_bounded_by_ideal():
    p = params_from_ratios(1.0, 500.0, q_ratio=0.96, f=100.0)
    for d in (4.0, 20.0, 100.0):
        base = contrast_enhancement(0.0, d, p)
        assert base.c_leaky == pytest.approx(1.0 / d)
        for x in np.logspace(-3, 2, 40):
            r = contrast_enhancement(x, d, p)
            assert r.c_leaky <= r.c_ideal


def test_reshape_six_db_enhancement_at_f100():
    p = params_from_ratios(1.0, 500.0, q_ratio=0.96, f=100.0)
    best = max(contrast_enhancement(x, 100.0, p).c_leaky
               for x in np.logspace(-3, 2, 301))
    assert best >= 4.0


def test_reshape_small_f_gives_no_enhancement():
    p = params_from_ratios(1.0, 500.0, q_ratio=0.96, f=2.6)
    best = max(contrast_enhancement(x, 100.0, p).c_leaky
               for x in np.logspace(-3, 2, 101))
    assert best < 1.0


def test_reshape_preconditions():
    with pytest.raises(NonPositiveRate):
        contrast_enhancement(-1.0, 4.0, IDEAL)
    with pytest.raises(NonPositiveRate):
        contrast_enhancement(1.0, 1.0, IDEAL)


def test_kerr_semiconductor_length():
    length = kerr_equivalent(1.0, 1e-13, 1.0)
    assert length == pytest.approx(5e6, rel=1e-12)          # 5e3 km


def test_kerr_vapor_and_eit_lengths():
    assert kerr_equivalent(1.0, 1e-7, 1.0) == pytest.approx(5.0, rel=1e-12)
    # The closed form gives lambda/(2 n2 I) regardless of medium.
    assert kerr_equivalent(1.0, 0.18, 1.0) == pytest.approx(1e-6 / 0.36,
                                                            rel=1e-12)


def test_switching_intensity_from_quoted_critical_power():
    assert switching_intensity(1e-9, 1e-8) == pytest.approx(1.0, rel=1e-14)


def test_switching_intensity_from_physics():
    # 100 ps lifetime at 1 um gives P_c = gamma/4 photons/s ~ 0.5 nW, an
    # order-of-magnitude consistency check of the quoted ~1 nW, ~1 W/cm^2.
    p_c = critical_power_watts(1e10, 1.0)
    assert_allclose(p_c, 4.966e-10, rtol=1e-3)
    i_pi = switching_intensity(p_c, 1e-8)
    assert 0.4 <= i_pi <= 2.5


def test_kerr_preconditions():
    with pytest.raises(NonPositiveRate):
        kerr_equivalent(0.0, 1e-13, 1.0)
    with pytest.raises(NonPositiveRate):
        switching_intensity(1e-9, 0.0)
    with pytest.raises(NonPositiveRate):
        critical_power_watts(-1.0, 1.0)
