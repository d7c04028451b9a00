import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from onedatom import (LeakyNotSupported, UnsupportedRegime, empty_cavity_t0,
                      linewidths_ideal, make_params, params_from_ratios,
                      resonance_extrema, scattering_matrix_ideal,
                      transmission_leaky)

IDEAL = make_params(gamma=1.0, kappa=500.0)


def test_empty_cavity_resonant():
    t0 = empty_cavity_t0(0.0, IDEAL)
    assert t0 == 1.0
    assert abs(-t0) ** 2 == 1.0


def test_empty_cavity_half_width_point():
    p = make_params(1.0, 500.0, delta=100.0)
    t0 = empty_cavity_t0(400.0, p)   # dw + delta = kappa
    assert t0 == pytest.approx(1.0 / (1.0 + 1j), rel=1e-15)
    assert abs(t0) ** 2 == pytest.approx(0.5, rel=1e-14)


def test_empty_cavity_far_detuned():
    assert abs(empty_cavity_t0(1e9, IDEAL)) < 1e-5


def test_smatrix_resonant_limit_total_reflection():
    S = scattering_matrix_ideal(0.0, IDEAL)
    assert S[0, 0] == 1.0 and S[1, 1] == 1.0
    assert S[0, 1] == 0.0 and S[1, 0] == 0.0


def test_smatrix_empty_cavity_point():
    # At zeta = 0 the system transmits fully (t = -1, r = 0), same as the
    # atom-free resonant cavity whose amplitude is -t0(0) = -1.
    dw = math.sqrt(0.5 * IDEAL.gamma * IDEAL.kappa)
    S = scattering_matrix_ideal(dw, IDEAL)
    assert abs(S[1, 0] + 1.0) < 1e-12
    assert abs(S[0, 0]) < 1e-12
    assert -empty_cavity_t0(0.0, IDEAL) == -1.0


def test_smatrix_unitarity_at_arbitrary_point():
    p = make_params(gamma=1.0, kappa=500.0, delta=-250.0)
    S = scattering_matrix_ideal(50.0, p)
    assert np.max(np.abs(S.conj().T @ S - np.eye(2))) < 1e-12
    assert abs(abs(np.linalg.det(S)) - 1.0) < 1e-12


def test_smatrix_reciprocity_exact():
    S = scattering_matrix_ideal(3.7, IDEAL)
    assert S[0, 1] == S[1, 0]


def test_smatrix_rejects_leaky():
    with pytest.raises(LeakyNotSupported):
        scattering_matrix_ideal(1.0, make_params(1.0, 500.0, gamma_at=0.1))


def test_leaky_resonance_with_atom():
    p = params_from_ratios(1.0, 500.0, q_ratio=0.96, f=2.6)
    pt = transmission_leaky(0.0, p)
    q, f = 0.96, 2.6
    assert pt.cap_t == pytest.approx(q ** 2 / (1.0 + f) ** 2, rel=1e-12)
    assert pt.cap_r == pytest.approx((1.0 - q / (1.0 + f)) ** 2, rel=1e-12)


def test_leaky_resonance_empty_cavity():
    p = params_from_ratios(1.0, 500.0, q_ratio=0.96, f=2.6)
    pt = transmission_leaky(0.0, p, empty_cavity=True)
    assert pt.cap_t == pytest.approx(0.96 ** 2, rel=1e-14)
    assert pt.cap_r == pytest.approx(0.04 ** 2, rel=1e-10)


def test_ideal_reduction_matches_smatrix():
    kappa, gamma = 500.0, 1.0
    detunings = [2 * kappa, -2 * kappa, kappa, -kappa, kappa / 10,
                 -kappa / 10, gamma, -gamma, gamma / 10, -gamma / 10]
    for dw in detunings:
        S = scattering_matrix_ideal(dw, IDEAL)
        pt = transmission_leaky(dw, IDEAL)
        assert abs(pt.t - S[1, 0]) < 1e-10
        assert abs(pt.r - S[0, 0]) < 1e-10


def test_ideal_energy_conservation():
    for dw in np.linspace(-1000.0, 1000.0, 201):
        pt = transmission_leaky(dw, IDEAL)
        assert abs(pt.cap_t + pt.cap_r - 1.0) < 1e-12
        assert pt.leaks > -1e-12


def test_leaky_resonance_identity():
    for q, f in [(0.96, 2.6), (0.5, 3.0), (0.8, 10.0), (1.0, 1.0)]:
        ext = resonance_extrema(params_from_ratios(1.0, 500.0, q, f))
        assert abs(math.sqrt(ext.r_max) + math.sqrt(ext.t_min) - 1.0) < 1e-12


def test_fano_asymmetry_and_resonant_symmetry():
    fano = make_params(1.0, 500.0, delta=-250.0)
    a = transmission_leaky(+1.0, fano).cap_t
    b = transmission_leaky(-1.0, fano).cap_t
    assert abs(a - b) > 0.01
    for dw in (0.3, 1.0, 40.0):
        sym_p = transmission_leaky(+dw, IDEAL).cap_t
        sym_m = transmission_leaky(-dw, IDEAL).cap_t
        assert abs(sym_p - sym_m) < 1e-12


def test_contrast_monotone_in_f():
    prev = -1.0
    for f in (0.5, 1.0, 2.0, 5.0, 20.0, 100.0):
        ext = resonance_extrema(params_from_ratios(1.0, 500.0, 0.9, f))
        contrast = ext.t_max - ext.t_min
        assert contrast > prev
        prev = contrast


def test_evanescent_geometry_swaps_ports():
    p = params_from_ratios(1.0, 500.0, 0.9, 5.0)
    fp = transmission_leaky(2.0, p)
    ev = transmission_leaky(2.0, p, evanescent=True)
    assert ev.t == fp.r and ev.r == fp.t


@pytest.mark.parametrize("ratio,tol", [(1 / 500, 0.02), (1 / 100, 0.02)])
def test_linewidths_near_analytic(ratio, tol):
    p = make_params(gamma=ratio * 500.0, kappa=500.0)
    lw = linewidths_ideal(p)
    assert abs(lw.broad_numeric - lw.broad_analytic) / lw.broad_analytic < tol
    assert abs(lw.dip_numeric - lw.dip_analytic) / lw.dip_analytic < tol


def test_linewidths_reject_detuned_or_leaky():
    with pytest.raises(UnsupportedRegime):
        linewidths_ideal(make_params(1.0, 500.0, delta=1.0))
    with pytest.raises(UnsupportedRegime):
        linewidths_ideal(make_params(1.0, 500.0, gamma_at=0.5))


def test_resonance_extrema_ideal():
    ext = resonance_extrema(IDEAL)
    assert (ext.t_max, ext.t_min) == (1.0, 0.0)
    assert (ext.r_max, ext.r_min) == (1.0, 0.0)
    assert ext.leaks_resonant == 0.0


def test_resonance_extrema_experimental_point():
    ext = resonance_extrema(params_from_ratios(1.0, 500.0, 0.96, 2.6))
    assert_allclose(ext.t_max, 0.9216, rtol=1e-12)
    assert_allclose(ext.t_min, 0.0711, atol=5e-5)
    assert_allclose(ext.t_max - ext.t_min, 0.8505, atol=5e-4)


def test_resonance_extrema_baseline_point():
    ext = resonance_extrema(params_from_ratios(1.0, 500.0, 0.5, 3.0))
    assert_allclose(ext.t_max, 0.25, rtol=1e-14)
    assert_allclose(ext.t_min, 0.25 / 16.0, rtol=1e-12)


def test_leaks_approximation_for_large_f():
    p = params_from_ratios(1.0, 500.0, 0.9, 200.0)
    ext = resonance_extrema(p)
    assert ext.leaks_approx == pytest.approx(ext.leaks_resonant, rel=0.02)
    # exact identity L = 1 - R - T at resonance
    pt = transmission_leaky(0.0, p)
    assert ext.leaks_resonant == pytest.approx(pt.leaks, abs=1e-12)
