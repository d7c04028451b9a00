"""Command-line interface.

Eight subcommands (spectrum, saturation, dynamics, pillar, slowlight,
bistability, reshape, kerr) produce deterministic CSV data on --out or
stdout plus a JSON run manifest (inputs, derived parameters, results,
versions).  The manifest is written next to --out as
``<out>.manifest.json``; when the CSV goes to stdout the manifest goes to
stderr.  Every option can also be supplied through ``--config file.json``
(keys mirror the flag names); explicit flags win over the config file.

Rates are in the caller's angular-frequency unit with kappa defaulting
to 1, so detunings and rates passed on the command line are effectively in
units of kappa.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import scipy

from . import __version__, applications, dynamics, nonlinear, pillar
from .csvio import open_out, write_csv
from .errors import DomainError
from .linear import transmission_leaky
from .model import BlochState, DriveField, make_params
from .nonlinear import scatter_steady


def parse_grid(text: str) -> np.ndarray:
    """Parse "a:b:n" (linear, inclusive) or "log:a:b:n" (decades)."""
    log = text.startswith("log:")
    body = text[4:] if log else text
    parts = body.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must be a:b:n or log:a:b:n, got {text!r}")
    a, b = float(parts[0]), float(parts[1])
    n = int(parts[2])
    if n < 2:
        raise ValueError(f"grid needs n >= 2 points, got {n}")
    lin = np.linspace(a, b, n)
    return 10.0 ** lin if log else lin


def _parse_list(spec: str) -> list[float]:
    return [float(tok) for tok in spec.split(",") if tok.strip()]


def _pmap(threads, fn, items):
    items = list(items)
    if threads <= 1 or len(items) < 2:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _json_safe(v):
    if isinstance(v, float) and not math.isfinite(v):
        return str(v)
    if isinstance(v, dict):
        return {k: _json_safe(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_json_safe(x) for x in v]
    return v


def _write_manifest(ns, manifest):
    manifest = _json_safe(manifest)
    text = json.dumps(manifest, indent=2, sort_keys=True) + "\n"
    path = ns.manifest
    if path is None and ns.out not in (None, "-"):
        path = ns.out + ".manifest.json"
    if path is None:
        sys.stderr.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _params_view(params):
    return {
        "gamma": params.gamma, "kappa": params.kappa, "delta": params.delta,
        "gamma_at": params.gamma_at, "gamma_cav": params.gamma_cav,
        "gamma_star": params.gamma_star, "q_ratio": params.q_ratio,
        "f": params.f_ratio, "beta": params.beta,
        "is_bad_cavity": params.is_bad_cavity,
    }


def _versions():
    return {"artifact": __version__,
            "python": sys.version.split()[0],
            "numpy": np.__version__,
            "scipy": scipy.__version__}


# ---------------------------------------------------------------------------
# option plumbing

_SYSTEM_DEFAULTS = {
    "gamma": None, "gamma_over_kappa": 0.002, "kappa": 1.0, "delta": 0.0,
    "gamma_at": None, "gamma_cav": None, "gamma_star": 0.0,
    "q_ratio": None, "f": None,
}


def _add_system_options(sub):
    g = sub.add_argument_group("system parameters")
    g.add_argument("--gamma", type=float, help="emission rate into the mode")
    g.add_argument("--gamma-over-kappa", type=float,
                   help="gamma as a fraction of kappa (default 0.002)")
    g.add_argument("--kappa", type=float, help="cavity-port rate (default 1)")
    g.add_argument("--delta", type=float, help="cavity-emitter detuning")
    g.add_argument("--gamma-at", type=float, help="emitter leak rate")
    g.add_argument("--gamma-cav", type=float, help="cavity leak rate")
    g.add_argument("--gamma-star", type=float, help="pure dephasing rate")
    g.add_argument("--q-ratio", type=float,
                   help="Q/Q0; alternative to --gamma-cav")
    g.add_argument("--f", type=float,
                   help="f ratio (inf allowed); alternative to --gamma-at")


def _add_common_options(sub):
    sub.add_argument("--config", help="JSON file mirroring the flag names")
    sub.add_argument("--out", help="CSV output path (default: stdout)")
    sub.add_argument("--manifest", help="manifest path (default: <out>.manifest.json)")
    sub.add_argument("--threads", type=int,
                     help="worker threads for sweeps (default: machine parallelism)")


def _apply_config(ns, parser, defaults):
    """Fill unset options from --config, then from the defaults table."""
    config = {}
    if ns.config:
        try:
            with open(ns.config, encoding="utf-8") as fh:
                config = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            parser.error(f"cannot read config {ns.config!r}: {exc}")
        if not isinstance(config, dict):
            parser.error("config must be a JSON object")
        config = {str(k).replace("-", "_"): v for k, v in config.items()}
        unknown = set(config) - set(vars(ns))
        if unknown:
            parser.error(f"unknown config keys: {sorted(unknown)}")
    for key, value in vars(ns).items():
        if value is None and key in config:
            setattr(ns, key, config[key])
    defaults = dict(defaults, threads=os.cpu_count() or 1)
    for key, value in defaults.items():
        if getattr(ns, key, None) is None:
            setattr(ns, key, value)
    return ns


def _build_params(ns, parser, *, force_ideal=False):
    kappa = ns.kappa
    gamma = ns.gamma if ns.gamma is not None else ns.gamma_over_kappa * kappa
    if force_ideal:
        for name in ("gamma_at", "gamma_cav", "q_ratio", "f"):
            if getattr(ns, name) is not None:
                parser.error(f"--ideal conflicts with --{name.replace('_', '-')}")
        return make_params(gamma, kappa, delta=ns.delta)
    if ns.gamma_cav is not None and ns.q_ratio is not None:
        parser.error("--gamma-cav and --q-ratio are mutually exclusive")
    if ns.gamma_at is not None and ns.f is not None:
        parser.error("--gamma-at and --f are mutually exclusive")
    gamma_cav = ns.gamma_cav or 0.0
    if ns.q_ratio is not None:
        if not 0.0 < ns.q_ratio <= 1.0:
            parser.error(f"--q-ratio must be in (0, 1], got {ns.q_ratio}")
        gamma_cav = 2.0 * kappa * (1.0 / ns.q_ratio - 1.0)
    q = 1.0 / (1.0 + gamma_cav / (2.0 * kappa))
    gamma_at = ns.gamma_at or 0.0
    if ns.f is not None:
        if ns.f <= 0.0:
            parser.error(f"--f must be > 0, got {ns.f}")
        gamma_at = 0.0 if math.isinf(ns.f) else q * gamma / ns.f
    return make_params(gamma, kappa, delta=ns.delta, gamma_at=gamma_at,
                       gamma_cav=gamma_cav, gamma_star=ns.gamma_star)


# ---------------------------------------------------------------------------
# subcommands

def _cmd_spectrum(ns, parser):
    _apply_config(ns, parser, dict(_SYSTEM_DEFAULTS, grid="-2:2:2001", x=0.0))
    try:
        grid = parse_grid(ns.grid)
    except ValueError as exc:
        parser.error(str(exc))
    params = _build_params(ns, parser)
    if ns.x < 0.0:
        parser.error(f"--x must be >= 0, got {ns.x}")

    def point(nu):
        dw = nu * params.kappa - params.delta
        empty = transmission_leaky(dw, params, empty_cavity=True,
                                   evanescent=ns.evanescent)
        if ns.x == 0.0:
            pt = transmission_leaky(dw, params, evanescent=ns.evanescent)
            t, r, leaks = pt.t, pt.r, pt.leaks
        else:
            drive = DriveField.from_power(dw, 0.25 * ns.x * params.gamma)
            out = scatter_steady(drive, params)
            t, r = (out.r, out.t) if ns.evanescent else (out.t, out.r)
            leaks = out.p_noise / out.p_in
        return (nu, dw, t.real, t.imag, r.real, r.imag,
                abs(t) ** 2, abs(r) ** 2, leaks, empty.cap_t)

    rows = _pmap(ns.threads, point, grid)
    header = ("nu", "delta_omega", "re_t", "im_t", "re_r", "im_r",
              "cap_t", "cap_r", "leaks", "cap_t0")
    with open_out(ns.out) as fh:
        n = write_csv(fh, header, rows)
    _write_manifest(ns, {
        "command": "spectrum",
        "options": {"grid": ns.grid, "x": ns.x, "evanescent": ns.evanescent},
        "derived": _params_view(params), "rows": n, "versions": _versions()})
    return 0


def _cmd_saturation(ns, parser):
    _apply_config(ns, parser, dict(_SYSTEM_DEFAULTS, x_grid="log:-3:4:701",
                                   ideal=False))
    try:
        grid = parse_grid(ns.x_grid)
    except ValueError as exc:
        parser.error(str(exc))
    params = _build_params(ns, parser, force_ideal=ns.ideal)
    curve = nonlinear.saturation_curve(params, grid)
    header = ("x", "x_eff", "cap_t", "cap_r", "noise_frac",
              "p_t_over_p_c", "p_r_over_p_c", "caution")
    rows = ((pt.x, pt.x_eff, pt.cap_t, pt.cap_r, pt.noise_frac,
             pt.p_t_over_p_c, pt.p_r_over_p_c, pt.caution) for pt in curve)
    with open_out(ns.out) as fh:
        n = write_csv(fh, header, rows)
    _write_manifest(ns, {
        "command": "saturation",
        "options": {"x_grid": ns.x_grid, "ideal": ns.ideal},
        "derived": _params_view(params),
        "results": {"p_c": nonlinear.critical_power(0.0, params)},
        "rows": n, "versions": _versions()})
    return 0


def _cmd_dynamics(ns, parser):
    _apply_config(ns, parser, dict(
        _SYSTEM_DEFAULTS, x=None, power=None, delta_omega=0.0, duration=None,
        samples=1001, rtol=1e-10, atol=1e-12, initial_re_s=0.0,
        initial_im_s=0.0, initial_s_z=-0.5, full_system=False, settle=False,
        settle_tol=1e-9))
    params = _build_params(ns, parser)
    if ns.x is not None and ns.power is not None:
        parser.error("--x and --power are mutually exclusive")
    p_in = ns.power if ns.power is not None else 0.25 * (ns.x or 0.0) * params.gamma
    if p_in < 0.0:
        parser.error("drive power must be >= 0")
    drive = DriveField.from_power(ns.delta_omega, p_in)
    duration = ns.duration if ns.duration is not None else 20.0 / params.gamma
    initial = BlochState(complex(ns.initial_re_s, ns.initial_im_s),
                         ns.initial_s_z)
    results = {}
    if ns.settle:
        settled = dynamics.settle(drive, params, ns.settle_tol,
                                  rtol=ns.rtol, full_system=ns.full_system)
        duration = settled.time
        results["settled"] = {
            "re_s": settled.state.s.real, "im_s": settled.state.s.imag,
            "s_z": settled.state.s_z, "time": settled.time,
            "windows": settled.windows}
    traj = dynamics.integrate(drive, params, initial, duration,
                              rtol=ns.rtol, atol=ns.atol,
                              samples=int(ns.samples),
                              full_system=ns.full_system)
    with open_out(ns.out) as fh:
        n = traj.write_csv(fh)
    results["final"] = {"re_s": traj.s[-1].real, "im_s": traj.s[-1].imag,
                        "s_z": float(traj.s_z[-1])}
    _write_manifest(ns, {
        "command": "dynamics",
        "options": {"delta_omega": ns.delta_omega, "p_in": p_in,
                    "duration": duration, "samples": int(ns.samples),
                    "rtol": ns.rtol, "full_system": ns.full_system,
                    "settle": ns.settle},
        "derived": _params_view(params), "results": results,
        "rows": n, "versions": _versions()})
    return 0


def _cmd_pillar(ns, parser):
    _apply_config(ns, parser, dict(
        objective="contrast", d_min=0.5, d_max=8.0, grid_step=0.02,
        epsilon=pillar.DEFAULT_EPSILON, wavelength=pillar.DEFAULT_WAVELENGTH,
        n_index=pillar.DEFAULT_N_INDEX, loss_ratio=1.0, gamma_star_ratio=0.0))
    if ns.q0 is None:
        parser.error("--q0 is required")
    if ns.objective not in pillar.OBJECTIVES:
        parser.error(f"--objective must be one of {pillar.OBJECTIVES}")
    kwargs = dict(epsilon=ns.epsilon, lambda_0=ns.wavelength,
                  n_index=ns.n_index, loss_ratio=ns.loss_ratio,
                  gamma_star_ratio=ns.gamma_star_ratio)
    res = pillar.optimize_diameter(ns.q0, ns.objective,
                                   d_range=(ns.d_min, ns.d_max),
                                   grid_step=ns.grid_step, **kwargs)
    header = ("d_um", "Q", "V_um3", "Fp", "f", "Tmax", "Tmin",
              "contrast", "eta", "beta_sq")
    rows = ((m.d, m.q, m.v, m.fp, m.f, m.t_max, m.t_min,
             m.contrast, m.eta, m.beta_sq) for m in res.sweep)
    with open_out(ns.out) as fh:
        n = write_csv(fh, header, rows)
    m = res.merit
    _write_manifest(ns, {
        "command": "pillar",
        "options": {"q0": ns.q0, "objective": ns.objective,
                    "d_range": [ns.d_min, ns.d_max],
                    "grid_step": ns.grid_step, **kwargs},
        "results": {"d_opt": res.d_opt, "value": res.value,
                    "at_boundary": res.at_boundary,
                    "Q": m.q, "Fp": m.fp, "f": m.f, "V_um3": m.v,
                    "Tmax": m.t_max, "Tmin": m.t_min, "contrast": m.contrast,
                    "eta": m.eta, "beta_sq": m.beta_sq},
        "rows": n, "versions": _versions()})
    return 0


def _cmd_slowlight(ns, parser):
    _apply_config(ns, parser, dict(f_list="5,10,100", gamma_over_kappa=0.002,
                                   kappa=1.0, n_stages=1))
    try:
        fs = _parse_list(ns.f_list)
    except ValueError:
        parser.error(f"--f-list must be comma-separated numbers, got {ns.f_list!r}")
    gamma = ns.gamma_over_kappa * ns.kappa

    def row(f):
        params = make_params(gamma, ns.kappa,
                             gamma_at=0.0 if math.isinf(f) else gamma / f)
        r = applications.slow_light(params, n_stages=int(ns.n_stages))
        return (r.f, r.beta, r.delay_analytic, r.delay_numeric,
                r.t_per_stage, r.n_half, r.total_delay_at_n_half)

    rows = _pmap(ns.threads, row, fs)
    header = ("f", "beta", "delay_analytic", "delay_numeric",
              "t_per_stage", "n_half", "total_delay_at_n_half")
    with open_out(ns.out) as fh:
        n = write_csv(fh, header, rows)
    _write_manifest(ns, {
        "command": "slowlight",
        "options": {"f_list": ns.f_list, "gamma": gamma, "kappa": ns.kappa,
                    "n_stages": int(ns.n_stages)},
        "rows": n, "versions": _versions()})
    return 0


def _cmd_bistability(ns, parser):
    _apply_config(ns, parser, dict(
        _SYSTEM_DEFAULTS, fraction_a_list="0.1,0.5,0.9,0.99",
        x_grid="log:-3:4:7001"))
    try:
        grid = parse_grid(ns.x_grid)
        fractions = _parse_list(ns.fraction_a_list)
    except ValueError as exc:
        parser.error(str(exc))
    params = _build_params(ns, parser)
    scans = [applications.bistability_scan(params, a, grid) for a in fractions]
    first = scans[0]
    header = ("x", "p_e", "p_t", "slope_analytic", "slope_numeric")
    rows = zip(first.x, first.p_e, first.p_t,
               first.slope_analytic, first.slope_numeric)
    with open_out(ns.out) as fh:
        n = write_csv(fh, header, rows)
    _write_manifest(ns, {
        "command": "bistability",
        "options": {"fraction_a_list": ns.fraction_a_list, "x_grid": ns.x_grid},
        "derived": _params_view(params),
        "results": {
            "max_slope": first.max_slope,
            "verdicts": {format(s.fraction_a, "g"): s.unique_solution
                         for s in scans}},
        "rows": n, "versions": _versions()})
    return 0


def _cmd_reshape(ns, parser):
    _apply_config(ns, parser, dict(_SYSTEM_DEFAULTS, extinction=100.0,
                                   x_grid="log:-3:2:501"))
    try:
        grid = parse_grid(ns.x_grid)
    except ValueError as exc:
        parser.error(str(exc))
    params = _build_params(ns, parser)
    if ns.extinction <= 1.0:
        parser.error("--extinction must be > 1")

    def row(x):
        r = applications.contrast_enhancement(x, ns.extinction, params)
        return (r.x, r.c_ideal, r.c_leaky)

    rows = _pmap(ns.threads, row, grid)
    best = max(rows, key=lambda r: r[2])
    with open_out(ns.out) as fh:
        n = write_csv(fh, ("x", "c_ideal", "c_leaky"), rows)
    _write_manifest(ns, {
        "command": "reshape",
        "options": {"extinction": ns.extinction, "x_grid": ns.x_grid},
        "derived": _params_view(params),
        "results": {"max_c_leaky": best[2], "x_at_max": best[0]},
        "rows": n, "versions": _versions()})
    return 0


def _cmd_kerr(ns, parser):
    _apply_config(ns, parser, dict(
        wavelength_um=1.0, n2_cm2_per_w=1e-13, intensity_w_per_cm2=1.0,
        sigma_cm2=1e-8, jump_factor=10.0, pc_watts=None, gamma_per_s=1e10))
    length_m = applications.kerr_equivalent(
        ns.wavelength_um, ns.n2_cm2_per_w, ns.intensity_w_per_cm2)
    p_c = ns.pc_watts if ns.pc_watts is not None else \
        applications.critical_power_watts(ns.gamma_per_s, ns.wavelength_um)
    i_pi = applications.switching_intensity(p_c, ns.sigma_cm2, ns.jump_factor)
    header = ("lambda_um", "n2_cm2_per_w", "intensity_w_per_cm2",
              "length_m", "p_c_watts", "sigma_cm2", "i_pi_w_per_cm2")
    row = (ns.wavelength_um, ns.n2_cm2_per_w, ns.intensity_w_per_cm2,
           length_m, p_c, ns.sigma_cm2, i_pi)
    with open_out(ns.out) as fh:
        n = write_csv(fh, header, [row])
    _write_manifest(ns, {
        "command": "kerr",
        "options": {"wavelength_um": ns.wavelength_um,
                    "n2_cm2_per_w": ns.n2_cm2_per_w,
                    "intensity_w_per_cm2": ns.intensity_w_per_cm2,
                    "sigma_cm2": ns.sigma_cm2, "jump_factor": ns.jump_factor},
        "results": {"length_m": length_m, "length_km": length_m / 1e3,
                    "p_c_watts": p_c, "i_pi_w_per_cm2": i_pi},
        "rows": n, "versions": _versions()})
    return 0


# ---------------------------------------------------------------------------

# Treat tokens like "-2:2:2001" or "-0.5" as values, not option strings.
_NEGATIVE_VALUE = re.compile(r"^-\d[\d.:eE,+-]*$")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onedatom",
        description="One-dimensional-atom spectra, saturation curves, "
                    "dynamics, pillar design and application calculators.")
    parser._negative_number_matcher = _NEGATIVE_VALUE
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("spectrum", help="linear or saturated transmission spectrum")
    _add_system_options(sp)
    sp.add_argument("--grid", help="(dw+delta)/kappa grid, a:b:n (default -2:2:2001)")
    sp.add_argument("--x", type=float,
                    help="resonant saturation parameter (0 = linear spectrum)")
    sp.add_argument("--evanescent", action="store_true",
                    help="swap t and r (waveguide-coupled geometry)")
    _add_common_options(sp)
    sp.set_defaults(func=_cmd_spectrum)

    sp = subs.add_parser("saturation", help="resonant transmission vs drive power")
    _add_system_options(sp)
    sp.add_argument("--x-grid", help="saturation grid (default log:-3:4:701)")
    sp.add_argument("--ideal", action="store_true",
                    help="force the lossless dephasing-free system")
    _add_common_options(sp)
    sp.set_defaults(func=_cmd_saturation)

    sp = subs.add_parser("dynamics", help="time-domain Bloch trajectory")
    _add_system_options(sp)
    sp.add_argument("--x", type=float, help="resonant saturation parameter of the drive")
    sp.add_argument("--power", type=float, help="drive power (photons/s)")
    sp.add_argument("--delta-omega", type=float, help="emitter-drive detuning")
    sp.add_argument("--duration", type=float, help="integration time (default 20/gamma)")
    sp.add_argument("--samples", type=float, help="number of output samples")
    sp.add_argument("--rtol", type=float)
    sp.add_argument("--atol", type=float)
    sp.add_argument("--initial-re-s", type=float)
    sp.add_argument("--initial-im-s", type=float)
    sp.add_argument("--initial-s-z", type=float)
    sp.add_argument("--full-system", action="store_true",
                    help="keep the cavity amplitude dynamical")
    sp.add_argument("--settle", action="store_true",
                    help="relax to steady state; report it in the manifest")
    sp.add_argument("--settle-tol", type=float)
    _add_common_options(sp)
    sp.set_defaults(func=_cmd_dynamics)

    sp = subs.add_parser("pillar", help="micropillar diameter optimization")
    sp.add_argument("--q0", type=float, help="intrinsic quality factor")
    sp.add_argument("--objective", help="contrast | purcell | efficiency | beta_sq")
    sp.add_argument("--d-min", type=float)
    sp.add_argument("--d-max", type=float)
    sp.add_argument("--grid-step", type=float, help="coarse sweep step, um")
    sp.add_argument("--epsilon", type=float, help="etching-quality parameter")
    sp.add_argument("--wavelength", type=float, help="vacuum wavelength, um")
    sp.add_argument("--n-index", type=float)
    sp.add_argument("--loss-ratio", type=float, help="gamma_at/gamma_free")
    sp.add_argument("--gamma-star-ratio", type=float)
    _add_common_options(sp)
    sp.set_defaults(func=_cmd_pillar)

    sp = subs.add_parser("slowlight", help="group delay of the atom chain")
    sp.add_argument("--f-list", help="comma-separated f values (default 5,10,100)")
    sp.add_argument("--gamma-over-kappa", type=float)
    sp.add_argument("--kappa", type=float)
    sp.add_argument("--n-stages", type=float)
    _add_common_options(sp)
    sp.set_defaults(func=_cmd_slowlight)

    sp = subs.add_parser("bistability", help="feedback-loop slope scan")
    _add_system_options(sp)
    sp.add_argument("--fraction-a-list", help="feedback fractions (default 0.1,0.5,0.9,0.99)")
    sp.add_argument("--x-grid", help="default log:-3:4:7001")
    _add_common_options(sp)
    sp.set_defaults(func=_cmd_bistability)

    sp = subs.add_parser("reshape", help="pulse contrast enhancement")
    _add_system_options(sp)
    sp.add_argument("--extinction", type=float, help="input extinction ratio")
    sp.add_argument("--x-grid", help="default log:-3:2:501")
    _add_common_options(sp)
    sp.set_defaults(func=_cmd_reshape)

    sp = subs.add_parser("kerr", help="equivalent Kerr-medium comparison")
    sp.add_argument("--wavelength-um", type=float)
    sp.add_argument("--n2-cm2-per-w", type=float)
    sp.add_argument("--intensity-w-per-cm2", type=float)
    sp.add_argument("--sigma-cm2", type=float, help="focus area")
    sp.add_argument("--jump-factor", type=float)
    sp.add_argument("--pc-watts", type=float, help="critical power in watts")
    sp.add_argument("--gamma-per-s", type=float,
                    help="emission rate used to derive P_c (default 1e10)")
    _add_common_options(sp)
    sp.set_defaults(func=_cmd_kerr)

    return parser


def run(argv=None) -> int:
    """Entry point; returns the process exit code (0 ok, 2 usage, 3 domain)."""
    parser = build_parser()
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for sub in action.choices.values():
                sub._negative_number_matcher = _NEGATIVE_VALUE
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return ns.func(ns, parser)
    except SystemExit as exc:          # parser.error inside a subcommand
        return int(exc.code or 0)
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
