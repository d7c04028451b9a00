"""Semiclassical steady state at arbitrary drive power.

Saturation parameter, critical power (ideal and leaky), dipole
susceptibility, nonlinear scattering at resonance, and saturation curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (DephasingUnsupported, LeakyNotSupported,
                     OffResonanceUnsupported, UnsupportedRegime)
from .linear import empty_cavity_t0, t0_prime
from .model import (BlochState, DriveField, ScatteringOutcome, SystemParams,
                    outcome_from_amplitudes)

#: Saturation range where the semiclassical factorization is qualitative
#: only (the incoherent noise power is comparable to the coherent signal).
CAUTION_RANGE = (0.1, 10.0)


def phi_ideal(delta_omega, params: SystemParams) -> float:
    """Inverse adimensional absorption cross-section of the ideal system.

    phi = (2 dw/gamma)^2 + ((2 dw/gamma)(dw + delta)/kappa - 1)^2, equal to
    1 at resonance.
    """
    a = 2.0 * delta_omega / params.gamma
    b = (delta_omega + params.delta) / params.kappa
    return a * a + (a * b - 1.0) ** 2


def phi_leaky(delta_omega, params: SystemParams) -> float:
    """Leaky-system generalization of :func:`phi_ideal` (zero dephasing).

    Reduces exactly to phi_ideal when f = inf and Q = Q0.
    """
    if params.gamma_star != 0.0:
        raise DephasingUnsupported(
            "phi_leaky is derived for gamma_star = 0")
    q = params.q_ratio
    inv_f = params.inv_f
    a = 2.0 * delta_omega / params.gamma
    b = (delta_omega + params.delta) / params.kappa
    return ((1.0 + inv_f) ** 2 + (q * inv_f * b) ** 2 + (a / q) ** 2
            + (a * b) ** 2 - 2.0 * a * b)


def critical_power(delta_omega, params: SystemParams) -> float:
    """Drive power (photons/s) at which the population reaches s_z = -1/4.

    Ideal system: P_c = (gamma/4) phi(dw), equal to gamma/4 on resonance
    (one fourth of a photon per lifetime).  Leaky system (requires
    gamma_star = 0): P_c' = (gamma/4) phi'(dw), equal to
    (gamma/4)(1 + 1/f)^2 on full resonance.
    """
    phi = phi_ideal(delta_omega, params) if params.is_ideal \
        else phi_leaky(delta_omega, params)
    return 0.25 * params.gamma * phi


@dataclass(frozen=True)
class SaturationPoint:
    """Saturation bookkeeping for one drive.

    ``x`` is the resonant-ideal normalization 4 P_in / gamma (the figure
    axis); ``x_eff`` is the regime-appropriate parameter P_in / P_c and
    equals ``x`` only for the ideal resonant system.
    """

    x: float
    x_eff: float
    p_c: float


def saturation_point(drive: DriveField, params: SystemParams) -> SaturationPoint:
    p_c = critical_power(drive.delta_omega, params)
    return SaturationPoint(x=4.0 * drive.p_in / params.gamma,
                           x_eff=drive.p_in / p_c, p_c=p_c)


def steady_state(drive: DriveField, params: SystemParams) -> BlochState:
    """Closed-form semiclassical steady state of the driven dipole.

    Ideal branch (no leaks, no dephasing), any detuning:

        s_z = -(1/2)/(1+x),  s = sqrt(2/gamma) (1/(1+x)) i b_in
                                 / (1 + 2i dw/(gamma t0(dw)))

    with x = P_in/P_c(dw).  Leaky branch: closed form exists on full
    resonance (dw = 0, delta = 0) with gamma_star = 0,

        s_z = -(1/2)/(1+x'),  s = sqrt(2/gamma) i b_in beta / (1+x')

    with x' = P_in/P_c' and beta = f/(1+f).

    Raises
    ------
    DephasingUnsupported
        Leaky branch with gamma_star > 0.
    UnsupportedRegime
        Leaky branch off resonance (use the dynamics module instead).
    """
    if params.is_ideal:
        x = drive.p_in / critical_power(drive.delta_omega, params)
        s_z = -0.5 / (1.0 + x)
        t0 = empty_cavity_t0(drive.delta_omega, params)
        s = (math.sqrt(2.0 / params.gamma) / (1.0 + x) * 1j * drive.b_in
             / (1.0 + 2j * drive.delta_omega / (params.gamma * t0)))
        return BlochState(s, s_z)
    if params.gamma_star != 0.0:
        raise DephasingUnsupported(
            "leaky steady state is derived for gamma_star = 0")
    if drive.delta_omega != 0.0 or params.delta != 0.0:
        raise UnsupportedRegime(
            "leaky steady state in closed form requires full resonance "
            "(delta_omega = 0 and delta = 0); integrate the dynamics instead")
    beta = params.beta
    x_eff = 4.0 * beta * beta * drive.p_in / params.gamma
    s_z = -0.5 / (1.0 + x_eff)
    s = math.sqrt(2.0 / params.gamma) * 1j * drive.b_in * beta / (1.0 + x_eff)
    return BlochState(s, s_z)


def susceptibility(delta_omega, x, params: SystemParams) -> complex:
    """Adimensional dipole susceptibility alpha, with s = sqrt(2/gamma) alpha b_in.

    alpha = (1/(1+x)) i / (1 + 2i dw/(gamma t0(dw))); purely imaginary at
    resonance, where the drive is entirely absorbed.
    """
    if not params.is_ideal:
        raise LeakyNotSupported("susceptibility is defined for the ideal system")
    t0 = empty_cavity_t0(delta_omega, params)
    return (1.0 / (1.0 + x)) * 1j / (1.0 + 2j * delta_omega / (params.gamma * t0))


def output_amplitudes(s, drive: DriveField, params: SystemParams):
    """Port amplitudes (b_t, b_r) radiated by a dipole state s under drive.

    b_t = -(Q/Q0) t0' (b_in + i sqrt(gamma/2) s),  b_r = b_in + b_t.
    """
    q = params.q_ratio
    t0p = t0_prime(drive.delta_omega, params)
    b_t = -q * t0p * (drive.b_in + 1j * math.sqrt(params.gamma / 2.0) * s)
    return b_t, drive.b_in + b_t


def scatter_nonlinear(drive: DriveField, params: SystemParams) -> ScatteringOutcome:
    """Resonant scattering at arbitrary power (closed form).

    Ideal: t = -x/(1+x), r = 1/(1+x) with x = 4 P_in/gamma, so
    P_t = x^2/(1+x)^2 P_in, P_r = P_in/(1+x)^2 and the incoherent noise
    carries the remainder 2x/(1+x)^2 P_in (maximal at x = 1).  Leaky
    (gamma_star = 0): t = (Q/Q0)(beta/(1 + beta^2 x) - 1), r = 1 + t.

    Raises
    ------
    OffResonanceUnsupported
        If delta_omega != 0 or delta != 0.
    DephasingUnsupported
        Leaky system with gamma_star > 0.
    """
    if drive.delta_omega != 0.0 or params.delta != 0.0:
        raise OffResonanceUnsupported(
            "scatter_nonlinear uses the resonant closed forms "
            "(delta_omega = 0, delta = 0); see scatter_steady for the "
            "ideal off-resonant case")
    x = 4.0 * drive.p_in / params.gamma
    if params.is_ideal:
        t = -x / (1.0 + x)
        r = 1.0 / (1.0 + x)
    else:
        if params.gamma_star != 0.0:
            raise DephasingUnsupported(
                "leaky nonlinear scattering is derived for gamma_star = 0")
        # t = (Q/Q0) (beta/(1 + beta^2 x) - 1), written without the
        # small-x cancellation: 1 - beta computed from 1/f directly.
        beta = params.beta
        one_minus_beta = params.inv_f / (1.0 + params.inv_f)
        xb = beta * beta * x
        t = -params.q_ratio * (one_minus_beta + xb) / (1.0 + xb)
        r = 1.0 + t
    return outcome_from_amplitudes(t, r, drive.p_in)


def scatter_steady(drive: DriveField, params: SystemParams) -> ScatteringOutcome:
    """Steady-state scattering of the ideal system at arbitrary detuning.

    Evaluates the closed-form steady state and the output relations; this is
    what the detuned nonlinear transmission spectra are made of.  Requires
    P_in > 0 (the linear module covers the zero-power limit).
    """
    if not params.is_ideal:
        raise LeakyNotSupported(
            "off-resonant nonlinear scattering requires an ideal system")
    if drive.p_in == 0.0:
        raise OffResonanceUnsupported(
            "scatter_steady requires p_in > 0; use transmission_leaky for "
            "the linear limit")
    state = steady_state(drive, params)
    b_t, b_r = output_amplitudes(state.s, drive, params)
    return outcome_from_amplitudes(b_t / drive.b_in, b_r / drive.b_in, drive.p_in)


@dataclass(frozen=True)
class SaturationCurvePoint:
    """One row of a resonant saturation sweep."""

    x: float
    x_eff: float
    cap_t: float
    cap_r: float
    noise_frac: float
    p_t_over_p_c: float
    p_r_over_p_c: float
    caution: bool


def saturation_curve(params: SystemParams, x_grid) -> list[SaturationCurvePoint]:
    """Evaluate the resonant scattering on a grid of saturation parameters.

    ``x_grid`` must be nonnegative and sorted; each x is the resonant-ideal
    normalization 4 P_in/gamma.  Points with 0.1 < x_eff < 10 are flagged
    as semiclassical-caution (the factorization is qualitative across the
    nonlinear jump).
    """
    xs = [float(x) for x in x_grid]
    if any(x < 0.0 for x in xs):
        raise UnsupportedRegime("x_grid values must be >= 0")
    if any(b < a for a, b in zip(xs, xs[1:])):
        raise UnsupportedRegime("x_grid must be sorted ascending")
    p_c = critical_power(0.0, params)
    rows = []
    for x in xs:
        drive = DriveField.from_power(0.0, 0.25 * x * params.gamma)
        out = scatter_nonlinear(drive, params)
        x_eff = drive.p_in / p_c
        noise = out.p_noise / drive.p_in if drive.p_in > 0.0 else 0.0
        rows.append(SaturationCurvePoint(
            x=x, x_eff=x_eff, cap_t=out.cap_t, cap_r=out.cap_r,
            noise_frac=noise,
            p_t_over_p_c=out.p_t / p_c, p_r_over_p_c=out.p_r / p_c,
            caution=CAUTION_RANGE[0] < x_eff < CAUTION_RANGE[1]))
    return rows
