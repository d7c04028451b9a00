"""Time-domain integration of the semiclassical Bloch equations.

This module is the independent oracle for every closed-form steady state in
the package: it integrates the mean-value equations of motion with an
adaptive embedded Runge-Kutta 4(5) scheme and reconstructs the port
amplitudes from the algebraic output relations at every sample.

Two levels of description are available.  The default integrates the
cavity-eliminated dipole equations (valid in the bad-cavity regime, where
gamma << kappa); their damping terms carry the exact atomic operator
algebra, so their steady states are the package's closed forms at any
drive power.  With ``full_system=True`` the cavity amplitude is kept as a
dynamical variable under the mean-field closure <S_z a> -> s_z a, which is
quantitatively meaningful in the weak-drive regime; comparing the two
there measures the elimination error, which empirically scales like
gamma/(2 kappa) in the dipole decay rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .csvio import write_csv
from .errors import NoConvergence, NonPositiveRate, StepCollapse
from .linear import t0_prime
from .model import BlochState, DriveField, SystemParams
from .nonlinear import output_amplitudes

TRAJECTORY_COLUMNS = ("t", "re_s", "im_s", "s_z",
                      "re_bt", "im_bt", "re_br", "im_br")


@dataclass(frozen=True)
class Trajectory:
    """Sampled solution of one integration, with per-sample port amplitudes."""

    times: np.ndarray
    s: np.ndarray
    s_z: np.ndarray
    b_t: np.ndarray
    b_r: np.ndarray
    a: np.ndarray | None = None

    def state_at(self, i) -> BlochState:
        return BlochState(complex(self.s[i]), float(self.s_z[i]))

    @property
    def final_state(self) -> BlochState:
        return self.state_at(-1)

    def write_csv(self, fh) -> int:
        rows = ((float(t), float(s.real), float(s.imag), float(sz),
                 float(bt.real), float(bt.imag), float(br.real), float(br.imag))
                for t, s, sz, bt, br in zip(self.times, self.s, self.s_z,
                                            self.b_t, self.b_r))
        return write_csv(fh, TRAJECTORY_COLUMNS, rows)


def _eliminated_rhs(drive: DriveField, params: SystemParams):
    t0p = t0_prime(drive.delta_omega, params)
    q = params.q_ratio
    c_damp = (0.5 * params.gamma * q * t0p
              + 0.5 * params.gamma_at + params.gamma_star)
    c_drive = math.sqrt(0.5 * params.gamma) * q * drive.b_in * t0p
    relax_z = params.gamma * q * t0p.real + params.gamma_at
    i_dw = 1j * drive.delta_omega

    def rhs(t, y):
        s = complex(y[0], y[1])
        ds = -(i_dw + c_damp) * s - 2.0 * y[2] * (1j * c_drive)
        dsz = (-relax_z * (y[2] + 0.5)
               + 2.0 * (1j * s.conjugate() * c_drive).real)
        return (ds.real, ds.imag, dsz)

    return rhs


def _full_rhs(drive: DriveField, params: SystemParams):
    omega_c = math.sqrt(0.5 * params.gamma * params.kappa)
    decay_a = (1j * (drive.delta_omega + params.delta)
               + params.kappa + 0.5 * params.gamma_cav)
    pump_a = 1j * math.sqrt(params.kappa) * drive.b_in
    decay_s = 1j * drive.delta_omega + 0.5 * params.gamma_at + params.gamma_star
    gamma_at = params.gamma_at

    def rhs(t, y):
        s = complex(y[0], y[1])
        a = complex(y[3], y[4])
        ds = -decay_s * s - 2.0 * omega_c * y[2] * a
        dsz = (-gamma_at * (y[2] + 0.5)
               + 2.0 * omega_c * (s.conjugate() * a).real)
        da = -decay_a * a - omega_c * s + pump_a
        return (ds.real, ds.imag, dsz, da.real, da.imag)

    return rhs


def _adiabatic_cavity(s, drive: DriveField, params: SystemParams) -> complex:
    omega_c = math.sqrt(0.5 * params.gamma * params.kappa)
    return (params.q_ratio * t0_prime(drive.delta_omega, params)
            * (-omega_c * s + 1j * math.sqrt(params.kappa) * drive.b_in)
            / params.kappa)


def integrate(drive: DriveField, params: SystemParams, initial: BlochState,
              duration, *, rtol=1e-10, atol=1e-12, samples=None,
              full_system=False, max_step=np.inf) -> Trajectory:
    """Integrate the driven Bloch equations for ``duration``.

    Parameters
    ----------
    initial : BlochState
        Must satisfy the state invariants (|s_z| <= 1/2, |s|^2 <= 1/4).
    samples : int or array of floats, optional
        Number of equally spaced output samples, or explicit sample times.
        Default: the solver's own accepted steps.
    full_system : bool
        Keep the cavity amplitude dynamical instead of eliminating it.  The
        cavity starts at its adiabatic value for the initial dipole state.

    Raises
    ------
    InvalidInitial, NonPositiveRate, StepCollapse
    """
    initial.require_physical()
    if not duration > 0.0:
        raise NonPositiveRate(f"duration must be > 0, got {duration}")
    if samples is None:
        t_eval = None
    elif np.isscalar(samples):
        t_eval = np.linspace(0.0, duration, int(samples))
    else:
        t_eval = np.asarray(samples, dtype=float)
    if full_system:
        a0 = _adiabatic_cavity(initial.s, drive, params)
        y0 = (initial.s.real, initial.s.imag, initial.s_z, a0.real, a0.imag)
        rhs = _full_rhs(drive, params)
    else:
        y0 = (initial.s.real, initial.s.imag, initial.s_z)
        rhs = _eliminated_rhs(drive, params)
    sol = solve_ivp(rhs, (0.0, float(duration)), y0, method="RK45",
                    rtol=rtol, atol=atol, t_eval=t_eval, max_step=max_step)
    if not sol.success:
        raise StepCollapse(f"integrator failed: {sol.message}")
    s = sol.y[0] + 1j * sol.y[1]
    s_z = sol.y[2]
    if full_system:
        a = sol.y[3] + 1j * sol.y[4]
        b_r = drive.b_in + 1j * math.sqrt(params.kappa) * a
        b_t = 1j * math.sqrt(params.kappa) * a
    else:
        a = None
        b_t, b_r = output_amplitudes(s, drive, params)
    return Trajectory(times=sol.t, s=s, s_z=s_z,
                      b_t=np.asarray(b_t), b_r=np.asarray(b_r), a=a)


#: Window (in units of 1/gamma) over which settle compares successive states.
SETTLE_WINDOW = 5.0
#: Time budget (in units of 1/gamma) before settle gives up.
SETTLE_MAX_TIME = 1e3


@dataclass(frozen=True)
class SettleResult:
    state: BlochState
    time: float
    windows: int


def settle(drive: DriveField, params: SystemParams, tol=1e-9, *,
           rtol=1e-10, atol=1e-13, full_system=False) -> SettleResult:
    """Relax from the ground state until the state stops changing.

    Integrates window by window (window = 5/gamma) and returns once the
    componentwise change of (Re s, Im s, s_z) over one window drops below
    ``tol``.

    Raises
    ------
    NoConvergence
        If the change is still above ``tol`` at t = 1000/gamma.
    """
    if not tol > 0.0:
        raise NonPositiveRate(f"tol must be > 0, got {tol}")
    window = SETTLE_WINDOW / params.gamma
    max_windows = int(round(SETTLE_MAX_TIME / SETTLE_WINDOW))
    state = BlochState.ground()
    for k in range(1, max_windows + 1):
        traj = integrate(drive, params, state, window, rtol=rtol, atol=atol,
                         samples=(0.0, window), full_system=full_system)
        new = traj.final_state
        diff = max(abs(new.s.real - state.s.real),
                   abs(new.s.imag - state.s.imag),
                   abs(new.s_z - state.s_z))
        state = new
        if diff < tol:
            return SettleResult(state=state, time=k * window, windows=k)
    raise NoConvergence(
        f"state still changing by more than tol={tol} after "
        f"{SETTLE_MAX_TIME:g}/gamma")
