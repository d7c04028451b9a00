"""Linear (unsaturated) response: spectra, scattering matrix, linewidths.

All closed forms here are exact consequences of the coupled-mode equations
with the population pinned to the ground state (s_z = -1/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import LeakyNotSupported, ScanFailed, UnsupportedRegime
from .model import SystemParams


def empty_cavity_t0(delta_omega, params: SystemParams) -> complex:
    """Cavity response factor t0 = 1/(1 + i (dw + delta)/kappa).

    The physical transmission amplitude of the empty ideal cavity is
    ``-t0``; on double resonance |t0| = 1 and the field is entirely
    transmitted.
    """
    return 1.0 / (1.0 + 1j * (delta_omega + params.delta) / params.kappa)


def t0_prime(delta_omega, params: SystemParams) -> complex:
    """Leaky-cavity response factor 1/(1 + i (Q/Q0)(dw + delta)/kappa)."""
    return 1.0 / (1.0 + 1j * params.q_ratio * (delta_omega + params.delta)
                  / params.kappa)


def scattering_matrix_ideal(delta_omega, params: SystemParams) -> np.ndarray:
    """2x2 scattering matrix of the ideal system, (b_r, b_t) = S (b_in, b_in').

    S = [[i z, -1], [-1, i z]] / (1 + i z) with
    z = (dw + delta)/kappa - gamma/(2 dw).  The pole at dw = 0 is replaced
    by its analytic limit, the identity matrix (total reflection).

    Raises
    ------
    LeakyNotSupported
        If params carry any leak or dephasing.
    """
    if not params.is_ideal:
        raise LeakyNotSupported(
            "scattering_matrix_ideal requires gamma_at = gamma_cav = gamma_star = 0")
    if delta_omega == 0.0:
        return np.eye(2, dtype=complex)
    zeta = ((delta_omega + params.delta) / params.kappa
            - params.gamma / (2.0 * delta_omega))
    izeta = 1j * zeta
    return np.array([[izeta, -1.0], [-1.0, izeta]], dtype=complex) / (1.0 + izeta)


@dataclass(frozen=True)
class LinearSpectrumPoint:
    """One point of a linear spectrum with its energy bookkeeping."""

    delta_omega: float
    t: complex
    r: complex
    cap_t: float
    cap_r: float
    leaks: float


def transmission_leaky(delta_omega, params: SystemParams, *,
                       empty_cavity=False, evanescent=False) -> LinearSpectrumPoint:
    """Linear transmission/reflection of the (possibly leaky) system.

    Covers the ideal system as the special case f = inf, Q = Q0.  The atom
    term is evaluated through the 1/f parametrization

        t = (Q/Q0) t0' [-1 + t0' / (t0' + 1/f + (2i dw/gamma)(Q0/Q))]

    which is exact for all f including f = inf and is algebraically
    equivalent to the saturated-free steady state of the coupled-mode
    equations.  ``empty_cavity=True`` drops the atom term, giving
    t = -(Q/Q0) t0'.  ``evanescent=True`` swaps t and r, describing the
    geometry where the uncoupled cavity transmits instead of reflecting.
    """
    q = params.q_ratio
    t0p = t0_prime(delta_omega, params)
    if empty_cavity:
        t = -q * t0p
    else:
        denom = t0p + params.inv_f + 2j * delta_omega / (q * params.gamma)
        t = q * t0p * (-1.0 + t0p / denom)
    r = 1.0 + t
    if evanescent:
        t, r = r, t
    cap_t = abs(t) ** 2
    cap_r = abs(r) ** 2
    return LinearSpectrumPoint(float(delta_omega), t, r, cap_t, cap_r,
                               1.0 - cap_t - cap_r)


@dataclass(frozen=True)
class Linewidths:
    """Analytic and numerically scanned FWHM of the transmission curve."""

    broad_analytic: float
    dip_analytic: float
    broad_numeric: float
    dip_numeric: float


def _transmission_ideal_resonant_atom(delta_omega, params):
    # T(dw) = 1/(1 + zeta^2) for delta = 0; avoids the matrix construction.
    zeta = delta_omega / params.kappa - params.gamma / (2.0 * delta_omega)
    return 1.0 / (1.0 + zeta * zeta)


def _bisect(fun, lo, hi, tol):
    flo = fun(lo)
    fhi = fun(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise ScanFailed(f"no sign change on bracket [{lo}, {hi}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fmid = fun(mid)
        if fmid == 0.0:
            return mid
        if flo * fmid < 0.0:
            hi = mid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi)


def linewidths_ideal(params: SystemParams) -> Linewidths:
    """FWHM of the broad transmission peak and of the narrow dip (delta = 0).

    Returns the analytic pair (kappa, gamma) together with values scanned
    numerically from the closed-form T(dw) by bisection on T = 1/2.  The
    scan is independent of the analytic widths: it only uses the analytic
    values as starting guesses for the brackets.

    Raises
    ------
    UnsupportedRegime
        If delta != 0 or params are not ideal (the quoted widths are derived
        for the resonant lossless system).
    ScanFailed
        If a bisection bracket cannot be established.
    """
    if params.delta != 0.0:
        raise UnsupportedRegime("linewidths_ideal is derived for delta = 0")
    if not params.is_ideal:
        raise UnsupportedRegime("linewidths_ideal requires an ideal system")
    gamma, kappa = params.gamma, params.kappa
    half = lambda dw: _transmission_ideal_resonant_atom(dw, params) - 0.5
    tol = 1e-10 * kappa
    # T rises from 0 to 1 on (0, dw_peak) and falls back to 0 beyond it.
    dw_peak = math.sqrt(0.5 * gamma * kappa)
    # Inner crossing: start from the analytic guess gamma/2, expand down/up.
    lo, hi = 0.25 * gamma, min(gamma, 0.999 * dw_peak)
    for _ in range(60):
        if half(lo) < 0.0:
            break
        lo *= 0.5
    else:
        raise ScanFailed("inner bracket: no point below half maximum")
    for _ in range(60):
        if half(hi) > 0.0:
            break
        hi = min(2.0 * hi, 0.999 * dw_peak)
    inner = _bisect(half, lo, hi, tol)
    # Outer crossing: between the peak and far detuning, guess kappa.
    lo, hi = dw_peak, 2.0 * kappa
    for _ in range(60):
        if half(hi) < 0.0:
            break
        hi *= 2.0
    else:
        raise ScanFailed("outer bracket: no point below half maximum")
    outer = _bisect(half, lo, hi, tol)
    return Linewidths(broad_analytic=kappa, dip_analytic=gamma,
                      broad_numeric=outer - inner, dip_numeric=2.0 * inner)


@dataclass(frozen=True)
class ResonanceExtrema:
    """Resonant energy coefficients of the leaky system (delta = 0).

    ``t_max``/``r_min`` belong to the saturated (or empty-cavity) limit,
    ``t_min``/``r_max`` to the unsaturated system with one resonant emitter.
    ``leaks_resonant`` is the exact normalized resonant leak
    L = 1 - R - T = 2 sqrt(R) sqrt(T); ``leaks_approx`` is its f >> 1
    approximation 2 (Q/Q0)/f.
    """

    t_max: float
    t_min: float
    r_max: float
    r_min: float
    leaks_resonant: float
    leaks_approx: float


def resonance_extrema(params: SystemParams) -> ResonanceExtrema:
    """Closed-form resonant extrema T_max, T_min, R_max, R_min and leaks."""
    if params.delta != 0.0:
        raise UnsupportedRegime("resonance_extrema is derived for delta = 0")
    q = params.q_ratio
    inv_f = params.inv_f
    one_over_1pf = inv_f / (1.0 + inv_f)     # 1/(1+f), exact 0 for f = inf
    u = q * one_over_1pf                     # sqrt(T_min)
    return ResonanceExtrema(
        t_max=q * q,
        t_min=u * u,
        r_max=(1.0 - u) ** 2,
        r_min=(1.0 - q) ** 2,
        leaks_resonant=2.0 * u * (1.0 - u),
        leaks_approx=2.0 * q * inv_f,
    )
