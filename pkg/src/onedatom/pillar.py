"""Micropillar design: quality factor vs diameter, Purcell factor, figures
of merit, and single-variable diameter optimization.

Lengths are in micrometers.  The sidewall-field model that feeds the
etching-loss formula 1/Q_leak = 2 |E(d)|^2 eps / d is pluggable: the default
is a power law |E(d)|^2 = (c_E/d)^2 calibrated so that a Q0 = 1000 pillar
with eps = 0.007 and d = 2.4 um has Q = 960; tabulated profiles can be
supplied instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NonPositiveRate
from .linear import resonance_extrema
from .model import params_from_ratios

DEFAULT_EPSILON = 0.007        # etching-quality parameter, um
DEFAULT_WAVELENGTH = 1.0       # vacuum wavelength, um
DEFAULT_N_INDEX = 3.5          # semiconductor refractive index

# Power-law coefficient solved from the calibration point
# (Q0=1000, d=2.4 um, eps=0.007) -> Q=960, i.e. 2 c^2 eps / d^3 = 1/960 - 1/1000.
_CAL_Q0, _CAL_Q, _CAL_D = 1000.0, 960.0, 2.4
DEFAULT_C_E = math.sqrt(
    (1.0 / _CAL_Q - 1.0 / _CAL_Q0) * _CAL_D ** 3 / (2.0 * DEFAULT_EPSILON))


@dataclass(frozen=True)
class FieldProfileModel:
    """Normalized sidewall field intensity |E(d)|^2 of the fundamental mode.

    ``power_law`` uses |E(d)|^2 = min(1, (c_e/d)^p_exp); ``tabulated``
    interpolates linearly between (d, |E(d)|^2) samples (clamped at the
    table ends).
    """

    kind: str = "power_law"
    c_e: float = DEFAULT_C_E
    p_exp: float = 2.0
    table: tuple = field(default=None, repr=False)

    def __post_init__(self):
        if self.kind == "power_law":
            if self.c_e <= 0.0 or self.p_exp <= 0.0:
                raise NonPositiveRate("power-law c_e and p_exp must be > 0")
        elif self.kind == "tabulated":
            pts = tuple((float(d), float(e2)) for d, e2 in self.table)
            ds = [d for d, _ in pts]
            if len(pts) < 2 or any(b <= a for a, b in zip(ds, ds[1:])):
                raise NonPositiveRate(
                    "tabulated profile needs >= 2 strictly increasing diameters")
            if any(not 0.0 <= e2 <= 1.0 for _, e2 in pts):
                raise NonPositiveRate("tabulated |E(d)|^2 must lie in [0, 1]")
            object.__setattr__(self, "table", pts)
        else:
            raise NonPositiveRate(f"unknown field model kind {self.kind!r}")

    def field_sq(self, d) -> float:
        if self.kind == "power_law":
            return min(1.0, (self.c_e / d) ** self.p_exp)
        ds = [p[0] for p in self.table]
        es = [p[1] for p in self.table]
        return float(np.interp(d, ds, es))


def default_field_model() -> FieldProfileModel:
    return FieldProfileModel()


@dataclass(frozen=True)
class PillarDesign:
    """Geometric and material parameters of one micropillar design.

    ``loss_ratio`` is gamma_at/gamma_free (1 for a bare pillar, about 0.1
    after sidewall metallization); ``gamma_star_ratio`` is
    gamma_star/gamma_free (0 under resonant excitation at low temperature).
    """

    q0: float
    d: float
    epsilon: float = DEFAULT_EPSILON
    lambda_0: float = DEFAULT_WAVELENGTH
    n_index: float = DEFAULT_N_INDEX
    loss_ratio: float = 1.0
    gamma_star_ratio: float = 0.0

    def __post_init__(self):
        if self.q0 <= 0.0 or self.d <= 0.0 or self.lambda_0 <= 0.0:
            raise NonPositiveRate("q0, d and lambda_0 must be > 0")
        if self.epsilon < 0.0 or self.gamma_star_ratio < 0.0:
            raise NonPositiveRate("epsilon and gamma_star_ratio must be >= 0")
        if self.n_index <= 1.0:
            raise NonPositiveRate("n_index must be > 1")
        if self.loss_ratio <= 0.0:
            raise NonPositiveRate("loss_ratio must be > 0")


def mode_volume(design: PillarDesign) -> float:
    """Effective mode volume V = (lambda/n) pi d^2 / 8, in um^3."""
    return (design.lambda_0 / design.n_index) * math.pi * design.d ** 2 / 8.0


def q_total(design: PillarDesign, field_model: FieldProfileModel = None) -> float:
    """Total quality factor 1/Q = 1/Q0 + 2 |E(d)|^2 eps / d."""
    fm = field_model or default_field_model()
    return 1.0 / (1.0 / design.q0 + 2.0 * fm.field_sq(design.d)
                  * design.epsilon / design.d)


def purcell_factor(design: PillarDesign, field_model: FieldProfileModel = None) -> float:
    """Purcell factor F_p = (3 Q / (4 pi^2 V)) (lambda/n)^3."""
    q = q_total(design, field_model)
    v = mode_volume(design)
    return 3.0 * q * (design.lambda_0 / design.n_index) ** 3 / (4.0 * math.pi ** 2 * v)


@dataclass(frozen=True)
class FiguresOfMerit:
    """Derived quantities of one design point."""

    d: float
    q: float
    v: float
    fp: float
    f: float
    q_ratio: float
    t_max: float
    t_min: float
    contrast: float
    eta: float
    beta_sq: float


def figures_of_merit(design: PillarDesign,
                     field_model: FieldProfileModel = None) -> FiguresOfMerit:
    """Contrast, quantum efficiency, absorption probability of one design.

    f follows from the Purcell factor through
    f = F_p / (loss_ratio + 2 gamma_star_ratio); the resonant extrema come
    from the linear module for the induced (Q/Q0, f), so the two modules
    agree exactly.
    """
    fm = field_model or default_field_model()
    q = q_total(design, fm)
    fp = purcell_factor(design, fm)
    f = fp / (design.loss_ratio + 2.0 * design.gamma_star_ratio)
    q_ratio = q / design.q0
    # gamma/kappa values are arbitrary here: the resonant extrema depend on
    # (Q/Q0, f) only.
    ext = resonance_extrema(params_from_ratios(1.0, 500.0, q_ratio, f))
    beta = f / (1.0 + f)
    return FiguresOfMerit(
        d=design.d, q=q, v=mode_volume(design), fp=fp, f=f, q_ratio=q_ratio,
        t_max=ext.t_max, t_min=ext.t_min, contrast=ext.t_max - ext.t_min,
        eta=beta * q_ratio, beta_sq=beta * beta)


OBJECTIVES = ("contrast", "purcell", "efficiency", "beta_sq")

_GETTERS = {
    "contrast": lambda m: m.contrast,
    "purcell": lambda m: m.fp,
    "efficiency": lambda m: m.eta,
    "beta_sq": lambda m: m.beta_sq,
}

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class OptimizeResult:
    d_opt: float
    value: float
    objective: str
    merit: FiguresOfMerit
    sweep: list
    at_boundary: bool


def sweep_diameter(q0, d_grid, field_model=None, **design_kwargs):
    """Figures of merit for every diameter of ``d_grid``."""
    fm = field_model or default_field_model()
    return [figures_of_merit(PillarDesign(q0=q0, d=float(d), **design_kwargs), fm)
            for d in d_grid]


def optimize_diameter(q0, objective="contrast", d_range=(0.5, 8.0),
                      field_model=None, grid_step=0.02, **design_kwargs) -> OptimizeResult:
    """Maximize one figure of merit over the pillar diameter.

    Coarse grid scan (step <= 0.05 um) followed by golden-section
    refinement between the neighbours of the best grid point.  A maximum on
    the range boundary is reported through ``at_boundary`` (objective
    monotone over the range), not raised.
    """
    if objective not in _GETTERS:
        raise NonPositiveRate(
            f"objective must be one of {OBJECTIVES}, got {objective!r}")
    lo, hi = float(d_range[0]), float(d_range[1])
    if not 0.0 < lo < hi:
        raise NonPositiveRate(f"invalid d_range {d_range!r}")
    step = min(float(grid_step), 0.05)
    fm = field_model or default_field_model()
    n = max(2, int(math.ceil((hi - lo) / step)) + 1)
    grid = np.linspace(lo, hi, n)
    getter = _GETTERS[objective]
    sweep = sweep_diameter(q0, grid, fm, **design_kwargs)
    values = [getter(m) for m in sweep]
    i_best = int(np.argmax(values))
    at_boundary = i_best in (0, len(grid) - 1)

    def value_at(d):
        return getter(figures_of_merit(
            PillarDesign(q0=q0, d=float(d), **design_kwargs), fm))

    if at_boundary:
        d_opt = float(grid[i_best])
    else:
        a, b = float(grid[i_best - 1]), float(grid[i_best + 1])
        c = b - _GOLDEN * (b - a)
        d = a + _GOLDEN * (b - a)
        fc, fd = value_at(c), value_at(d)
        while b - a > 1e-7:
            if fc > fd:
                b, d, fd = d, c, fc
                c = b - _GOLDEN * (b - a)
                fc = value_at(c)
            else:
                a, c, fc = c, d, fd
                d = a + _GOLDEN * (b - a)
                fd = value_at(d)
        d_opt = 0.5 * (a + b)
    merit = figures_of_merit(PillarDesign(q0=q0, d=d_opt, **design_kwargs), fm)
    return OptimizeResult(d_opt=d_opt, value=getter(merit), objective=objective,
                          merit=merit, sweep=sweep, at_boundary=at_boundary)
