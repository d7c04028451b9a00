"""Shared parameter and state types for the emitter-cavity-port system.

Unit convention: every rate (gamma, kappa, detunings, leak rates) is an
angular frequency expressed in one common unit chosen by the caller.  The
physics is scale free; the CLI defaults normalize ``kappa = 1``.  Input
amplitudes are in sqrt(photons/s), powers in photons/s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInitial, NonFiniteInput, NonPositiveRate

#: gamma/kappa threshold under which the adiabatic elimination of the cavity
#: is considered safe (bad-cavity regime).
BAD_CAVITY_RATIO = 0.1


def _require_finite(name, value):
    if not math.isfinite(value):
        raise NonFiniteInput(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class SystemParams:
    """Rates and detunings of the coupled emitter-cavity-port system.

    Attributes
    ----------
    gamma : float
        Purcell-enhanced emission rate of the dipole into the cavity mode.
    kappa : float
        Cavity-port coupling rate (per port pair, as used by the coupled-mode
        equations).
    delta : float
        Cavity-emitter detuning; the cavity sits at ``omega_0 + delta``.
    gamma_at : float
        Emitter leak rate into non-cavity modes.
    gamma_cav : float
        Cavity leak rate.
    gamma_star : float
        Pure dephasing rate of the emitter.
    """

    gamma: float
    kappa: float
    delta: float = 0.0
    gamma_at: float = 0.0
    gamma_cav: float = 0.0
    gamma_star: float = 0.0

    @property
    def q_ratio(self) -> float:
        """Q/Q0, the fraction of cavity decay that goes into the ports."""
        return 1.0 / (1.0 + self.gamma_cav / (2.0 * self.kappa))

    @property
    def loss_rate(self) -> float:
        """Total emitter coherence leak rate, ``gamma_at + 2 gamma_star``."""
        return self.gamma_at + 2.0 * self.gamma_star

    @property
    def inv_f(self) -> float:
        """1/f, exactly zero for the leak-free emitter."""
        return self.loss_rate / (self.q_ratio * self.gamma)

    @property
    def f_ratio(self) -> float:
        """f = (Q/Q0) gamma / (gamma_at + 2 gamma_star); inf when leak free."""
        inv = self.inv_f
        return math.inf if inv == 0.0 else 1.0 / inv

    @property
    def f_is_infinite(self) -> bool:
        return self.inv_f == 0.0

    @property
    def beta(self) -> float:
        """f/(1+f), the fraction of emission funneled into the cavity mode."""
        return 1.0 / (1.0 + self.inv_f)

    @property
    def is_bad_cavity(self) -> bool:
        return self.gamma / self.kappa <= BAD_CAVITY_RATIO

    @property
    def is_ideal(self) -> bool:
        """True when there are no leaks and no dephasing."""
        return self.gamma_at == 0.0 and self.gamma_cav == 0.0 and self.gamma_star == 0.0


def make_params(gamma, kappa, delta=0.0, gamma_at=0.0, gamma_cav=0.0,
                gamma_star=0.0) -> SystemParams:
    """Validate rates and build a :class:`SystemParams`.

    Raises
    ------
    NonPositiveRate
        If ``gamma <= 0`` or ``kappa <= 0``, or a leak rate is negative.
    NonFiniteInput
        On NaN or infinite inputs.
    """
    for name, value in (("gamma", gamma), ("kappa", kappa), ("delta", delta),
                        ("gamma_at", gamma_at), ("gamma_cav", gamma_cav),
                        ("gamma_star", gamma_star)):
        _require_finite(name, value)
    if gamma <= 0.0:
        raise NonPositiveRate(f"gamma must be > 0, got {gamma}")
    if kappa <= 0.0:
        raise NonPositiveRate(f"kappa must be > 0, got {kappa}")
    for name, value in (("gamma_at", gamma_at), ("gamma_cav", gamma_cav),
                        ("gamma_star", gamma_star)):
        if value < 0.0:
            raise NonPositiveRate(f"{name} must be >= 0, got {value}")
    return SystemParams(float(gamma), float(kappa), float(delta),
                        float(gamma_at), float(gamma_cav), float(gamma_star))


def params_from_ratios(gamma, kappa, q_ratio=1.0, f=math.inf, delta=0.0) -> SystemParams:
    """Build params from the (Q/Q0, f) parametrization, with zero dephasing.

    ``gamma_cav`` is solved from Q0/Q = 1 + gamma_cav/(2 kappa) and
    ``gamma_at`` from f = (Q/Q0) gamma / gamma_at.  ``f=inf`` gives a
    leak-free emitter.
    """
    _require_finite("q_ratio", q_ratio)
    if not 0.0 < q_ratio <= 1.0:
        raise NonPositiveRate(f"q_ratio must be in (0, 1], got {q_ratio}")
    if f != math.inf:
        _require_finite("f", f)
        if f <= 0.0:
            raise NonPositiveRate(f"f must be > 0, got {f}")
    gamma_cav = 2.0 * kappa * (1.0 / q_ratio - 1.0)
    gamma_at = 0.0 if f == math.inf else q_ratio * gamma / f
    return make_params(gamma, kappa, delta=delta, gamma_at=gamma_at,
                       gamma_cav=gamma_cav, gamma_star=0.0)


@dataclass(frozen=True)
class DriveField:
    """Monochromatic drive in port 1.

    ``delta_omega = omega_0 - omega`` is the emitter-drive detuning.  The
    second-port input is zero everywhere in this package; the linear
    scattering matrix is the one place where both ports enter, and it does so
    explicitly as a matrix.
    """

    delta_omega: float
    b_in: complex = 0.0 + 0.0j

    def __post_init__(self):
        _require_finite("delta_omega", self.delta_omega)
        if not (math.isfinite(self.b_in.real) and math.isfinite(self.b_in.imag)):
            raise NonFiniteInput(f"b_in must be finite, got {self.b_in!r}")

    @property
    def p_in(self) -> float:
        """Incoming power |b_in|^2 in photons/s."""
        return abs(self.b_in) ** 2

    @classmethod
    def from_power(cls, delta_omega, p_in) -> "DriveField":
        if p_in < 0.0:
            raise NonPositiveRate(f"p_in must be >= 0, got {p_in}")
        return cls(float(delta_omega), complex(math.sqrt(p_in)))


@dataclass(frozen=True)
class BlochState:
    """Semiclassical dipole state: s = <S_-> (complex), s_z = <S_z> (real)."""

    s: complex
    s_z: float

    def is_physical(self, tol=1e-9) -> bool:
        if not (math.isfinite(self.s.real) and math.isfinite(self.s.imag)
                and math.isfinite(self.s_z)):
            return False
        return (abs(self.s_z) <= 0.5 + tol) and (abs(self.s) ** 2 <= 0.25 + tol)

    def require_physical(self, tol=1e-9):
        if not self.is_physical(tol):
            raise InvalidInitial(
                f"state violates |s_z| <= 1/2 or |s|^2 <= 1/4: {self!r}")

    @classmethod
    def ground(cls) -> "BlochState":
        return cls(0.0 + 0.0j, -0.5)


@dataclass(frozen=True)
class ScatteringOutcome:
    """Amplitudes, energy coefficients and the power budget of one scattering.

    ``p_noise`` is the incoherent remainder ``p_in - p_t - p_r``; for the
    leaky system it is a single unresolved number (not split between ports
    and true loss).
    """

    t: complex
    r: complex
    cap_t: float
    cap_r: float
    p_t: float
    p_r: float
    p_noise: float

    @property
    def p_in(self) -> float:
        return self.p_t + self.p_r + self.p_noise


def outcome_from_amplitudes(t, r, p_in) -> ScatteringOutcome:
    """Build a :class:`ScatteringOutcome` from amplitude coefficients."""
    t = complex(t)
    r = complex(r)
    cap_t = abs(t) ** 2
    cap_r = abs(r) ** 2
    p_t = cap_t * p_in
    p_r = cap_r * p_in
    return ScatteringOutcome(t, r, cap_t, cap_r, p_t, p_r, p_in - p_t - p_r)
