"""Command-line front end: parameter sweeps written as CSV or JSON tables.

Subcommands
-----------
coefficients   |r_s|, |t_s|, half-phases and absorptance along a sweep
variances      single-mode output quadrature variances vs thickness
extrema        variance extrema in thickness plus the last-extremum bound
spectrum       incident/scattered power spectra, or fig7 squeezing spectra
pulseparams    narrow-band pulse descriptors along an index sweep
poynting       space-time energy flux samples

All physical inputs are SI (wavelength and half-thickness in metres).
Spectra are normalized by ``hbar w_c / (2 eps0 c sigma)`` so the
quantization area drops out.  Identical configurations produce
byte-identical output files.  Exit codes: 0 success, 2 configuration
error, 3 numerical error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import List, Optional, Sequence

import numpy as np

from .constants import HBAR, SPEED_OF_LIGHT as C, VACUUM_PERMITTIVITY as EPS0
from .continuum import (
    GaussianPulseSpec,
    incident_spectrum,
    measurable_squeeze_exponent,
    output_pulse_params,
    scattered_spectrum_exact,
)
from .errors import SqueezeSlabError
from .materials import ConstantIndex
from .poynting import squeezed_flux, thermal_flux, coherent_poynting
from .presets import PRESETS
from .singlemode import find_extrema, thickness_of_last_extremum
from .slab import SlabSpec, slab_amplitudes, thermal_occupation
from . import __version__

HEADERS = {
    "coefficients": "x,abs_R,abs_T,delta_R,delta_T,absorptance",
    "variances": "l,varX_T,varY_T,varX_R,varY_R",
    "extrema": "l,kind",
    "spectrum": "omega,S_I,S_T,S_R",
    "spectrum_fig7": "dw_rel,rho_I,rho_T_k1,rho_T_k2",
    "pulseparams": "eta_c,dw_T_rel,dw_R_rel,Lratio_T,Lratio_R,rhoeff_T_rel,rhoeff_R_rel,valid_T,valid_R",
    "poynting": "x,coherent,squeezed,thermal,total",
}

_SWEEP_VARS = {
    "coefficients": ("l", "eta", "kappa", "omega"),
    "variances": ("l",),
    "extrema": ("l",),
    "spectrum": ("omega",),
    "pulseparams": ("eta",),
    "poynting": ("x",),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="squeezeslab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"squeezeslab {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for name in HEADERS:
        if name == "spectrum_fig7":
            continue
        sp = sub.add_parser(name, help=f"emit the {name} table")
        sp.add_argument("--preset", choices=sorted(PRESETS), default=None)
        sp.add_argument("--eta", type=float, default=None, help="real refractive index")
        sp.add_argument("--kappa", type=float, default=None, help="extinction coefficient")
        sp.add_argument("--wavelength", type=float, default=None, help="vacuum wavelength, m")
        sp.add_argument("--half-thickness", type=float, default=None, help="slab half-thickness l, m")
        sp.add_argument("--rho", type=float, default=None, help="single-mode squeeze magnitude")
        sp.add_argument("--temp", type=float, default=None, help="slab temperature, K")
        sp.add_argument("--pulse-length", type=float, default=None, help="pulse rms length L_I, m")
        sp.add_argument("--rho-in", type=float, default=None, help="pulse peak squeeze magnitude")
        sp.add_argument("--alpha0", type=float, default=None, help="pulse coherent amplitude")
        sp.add_argument("--channel", choices=("T", "R"), default="T")
        sp.add_argument("--sweep", default=None, metavar="VAR:FROM:TO:POINTS")
        sp.add_argument("--out", default=None, help="output path (default: stdout)")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
    return p


class Config:
    """Resolved run configuration (preset merged with explicit flags)."""

    def __init__(self, args: argparse.Namespace):
        preset = PRESETS.get(args.preset) if args.preset else None
        if preset is not None and args.command not in preset.commands:
            raise ValueError(f"preset {args.preset!r} does not apply to command {args.command!r}")
        self.command = args.command
        self.preset = args.preset

        def pick(flag, preset_value, fallback):
            if flag is not None:
                return flag
            if preset_value is not None:
                return preset_value
            return fallback

        self.eta = pick(args.eta, preset.eta if preset else None, 1.5)
        self.kappa = pick(args.kappa, preset.kappa if preset else None, 0.0)
        self.wavelength = pick(args.wavelength, preset.wavelength if preset else None, 1064e-9)
        self.half_thickness = pick(
            args.half_thickness, preset.half_thickness if preset else None, 1e-6
        )
        self.rho = pick(args.rho, preset.rho if preset else None, 0.8)
        self.temp = pick(args.temp, preset.temp if preset else None, 0.0)
        self.pulse_length = pick(args.pulse_length, preset.pulse_length if preset else None, None)
        self.rho_in = pick(args.rho_in, preset.rho_in if preset else None, 1.5)
        self.alpha0 = args.alpha0 if args.alpha0 is not None else 0.0
        self.channel = args.channel
        self.kappa_pair = preset.kappa_pair if preset else None
        self.spectrum_points = preset.spectrum_points if preset else 4097
        self.out = args.out
        self.format = args.format

        sweep = args.sweep
        if sweep is None and preset is not None:
            self.sweep = preset.sweep
        elif sweep is not None:
            self.sweep = _parse_sweep(sweep)
        else:
            self.sweep = None
        if self.sweep is not None:
            var = self.sweep[0]
            if var not in _SWEEP_VARS[self.command]:
                raise ValueError(
                    f"command {self.command!r} sweeps over {_SWEEP_VARS[self.command]}, got {var!r}"
                )
        if not self.wavelength > 0:
            raise ValueError("wavelength must be positive")
        self.omega = 2.0 * math.pi * C / self.wavelength

    def sweep_values(self) -> np.ndarray:
        if self.sweep is None:
            raise ValueError(f"command {self.command!r} requires --sweep or a preset")
        _, lo, hi, points = self.sweep
        return np.linspace(lo, hi, points)

    def slab(self, eta=None, kappa=None, half_thickness=None) -> SlabSpec:
        model = ConstantIndex(
            eta if eta is not None else self.eta,
            kappa if kappa is not None else self.kappa,
        )
        return SlabSpec(
            half_thickness if half_thickness is not None else self.half_thickness,
            model,
            temperature=self.temp,
        )

    def pulse(self) -> GaussianPulseSpec:
        if self.pulse_length is None:
            raise ValueError(f"command {self.command!r} requires --pulse-length or a preset")
        return GaussianPulseSpec(
            omega_c=self.omega,
            length=self.pulse_length,
            rho_in=self.rho_in,
            alpha0=self.alpha0,
        )

    def echo(self) -> dict:
        out = {
            "command": self.command,
            "preset": self.preset,
            "eta": self.eta,
            "kappa": self.kappa,
            "wavelength": self.wavelength,
            "half_thickness": self.half_thickness,
            "rho": self.rho,
            "temp": self.temp,
            "channel": self.channel,
            "format": self.format,
        }
        if self.pulse_length is not None:
            out.update(pulse_length=self.pulse_length, rho_in=self.rho_in, alpha0=self.alpha0)
        if self.kappa_pair is not None:
            out["kappa_pair"] = list(self.kappa_pair)
        if self.sweep is not None:
            var, lo, hi, points = self.sweep
            out["sweep"] = {"variable": var, "from": lo, "to": hi, "points": points}
        return out


def _parse_sweep(text: str):
    parts = text.split(":")
    if len(parts) != 4:
        raise ValueError("--sweep expects VAR:FROM:TO:POINTS")
    var = parts[0]
    try:
        lo, hi = float(parts[1]), float(parts[2])
        points = int(parts[3])
    except ValueError as exc:
        raise ValueError(f"malformed --sweep: {exc}") from exc
    if points < 2:
        raise ValueError("sweep needs at least 2 points")
    if not lo < hi:
        raise ValueError("sweep range is empty (need from < to)")
    return var, lo, hi, points


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return value
    return f"{float(value):.17g}"


def _write(cfg: Config, header_key: str, rows: List[list]):
    header = HEADERS[header_key]
    if cfg.format == "csv":
        text = header + "\n" + "\n".join(",".join(_fmt(v) for v in row) for row in rows) + "\n"
    else:
        names = header.split(",")
        payload = {"config": cfg.echo(), "rows": [dict(zip(names, row)) for row in rows]}
        text = json.dumps(payload, indent=1, sort_keys=False) + "\n"
    if cfg.out is None:
        sys.stdout.write(text)
    else:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)


def _single_mode_arrays(cfg: Config, ls: np.ndarray):
    model = ConstantIndex(cfg.eta, cfg.kappa)
    r_s, t_s = slab_amplitudes(model, cfg.omega, ls)
    nbar = thermal_occupation(cfg.omega, cfg.temp)
    noise = nbar * (1.0 - np.abs(r_s) ** 2 - np.abs(t_s) ** 2) if nbar else np.zeros_like(ls)
    return r_s, t_s, noise


def cmd_coefficients(cfg: Config) -> None:
    values = cfg.sweep_values()
    var = cfg.sweep[0]
    if var == "l":
        model = ConstantIndex(cfg.eta, cfg.kappa)
        r_s, t_s = slab_amplitudes(model, cfg.omega, values)
    elif var == "omega":
        model = ConstantIndex(cfg.eta, cfg.kappa)
        r_s, t_s = slab_amplitudes(model, values, cfg.half_thickness)
    else:
        r_list, t_list = [], []
        for v in values:
            model = ConstantIndex(v if var == "eta" else cfg.eta, v if var == "kappa" else cfg.kappa)
            r, t = slab_amplitudes(model, cfg.omega, cfg.half_thickness)
            r_list.append(r)
            t_list.append(t)
        r_s, t_s = np.array(r_list), np.array(t_list)
    abs_r, abs_t = np.abs(r_s), np.abs(t_s)
    rows = [
        [x, ar, at, float(np.angle(r)) / 2.0, float(np.angle(t)) / 2.0, 1.0 - ar**2 - at**2]
        for x, r, t, ar, at in zip(values, r_s, t_s, abs_r, abs_t)
    ]
    _write(cfg, "coefficients", rows)


def cmd_variances(cfg: Config) -> None:
    ls = cfg.sweep_values()
    r_s, t_s, noise = _single_mode_arrays(cfg, ls)
    em, ep = math.exp(-2.0 * cfg.rho), math.exp(2.0 * cfg.rho)
    rows = []
    for i, l in enumerate(ls):
        at2, ar2 = abs(t_s[i]) ** 2, abs(r_s[i]) ** 2
        nn = 2.0 * noise[i]
        rows.append(
            [
                l,
                0.25 * ((1.0 - at2) + at2 * em + nn),
                0.25 * ((1.0 - at2) + at2 * ep + nn),
                0.25 * ((1.0 - ar2) + ar2 * em + nn),
                0.25 * ((1.0 - ar2) + ar2 * ep + nn),
            ]
        )
    _write(cfg, "variances", rows)


def cmd_extrema(cfg: Config) -> None:
    if cfg.sweep is None:
        raise ValueError("extrema requires --sweep l:FROM:TO:POINTS or a preset")
    _, lo, hi, _ = cfg.sweep
    slab = cfg.slab()
    found = find_extrema(slab, cfg.omega, (lo, hi), cfg.channel)
    rows: List[list] = [[e.l, e.kind] for e in found]
    rows.append([thickness_of_last_extremum(slab, cfg.omega), "l_max"])
    _write(cfg, "extrema", rows)


def cmd_spectrum(cfg: Config) -> None:
    pulse = cfg.pulse()
    if cfg.preset == "fig7":
        _spectrum_fig7(cfg, pulse)
        return
    slab = cfg.slab()
    if cfg.sweep is not None:
        omegas = cfg.sweep_values()
    else:
        lo, hi = pulse.band()
        omegas = np.linspace(lo, hi, cfg.spectrum_points)
    # Normalize by hbar w_c / (2 eps0 c sigma) so sigma drops out.
    pref = HBAR * pulse.omega_c / (2.0 * EPS0 * C * slab.sigma)
    s_i = incident_spectrum(pulse, omegas, sigma=slab.sigma) / pref
    s_t = scattered_spectrum_exact(slab, pulse, omegas, "T") / pref
    s_r = scattered_spectrum_exact(slab, pulse, omegas, "R") / pref
    rows = [[w, si, st, sr] for w, si, st, sr in zip(omegas, s_i, s_t, s_r)]
    _write(cfg, "spectrum", rows)


def _spectrum_fig7(cfg: Config, pulse: GaussianPulseSpec) -> None:
    # Squeezing levels an observer sees: the incident Gaussian profile and
    # the loss-corrected transmitted exponents at the two extinction values.
    lo, hi = pulse.band(halfwidth=3.0)
    omegas = np.linspace(lo, hi, cfg.spectrum_points)
    dw_rel = (omegas - pulse.omega_c) / pulse.omega_c
    rho_i = pulse.squeeze_profile(omegas)
    cols = [
        measurable_squeeze_exponent(cfg.slab(kappa=kappa), pulse, omegas, "T")
        for kappa in cfg.kappa_pair
    ]
    rows = [[dw_rel[i], rho_i[i], cols[0][i], cols[1][i]] for i in range(len(omegas))]
    _write(cfg, "spectrum_fig7", rows)


def cmd_pulseparams(cfg: Config) -> None:
    pulse = cfg.pulse()
    etas = cfg.sweep_values()
    kappas = cfg.kappa_pair if cfg.kappa_pair is not None else (cfg.kappa,)
    rows = []
    for kappa in kappas:
        for eta in etas:
            slab = cfg.slab(eta=float(eta), kappa=kappa)
            p_t = output_pulse_params(slab, pulse, "T")
            p_r = output_pulse_params(slab, pulse, "R")
            li2 = pulse.length**2
            rows.append(
                [
                    float(eta),
                    p_t.delta_omega / pulse.omega_c,
                    p_r.delta_omega / pulse.omega_c,
                    li2 / p_t.length_sq,
                    li2 / p_r.length_sq,
                    p_t.rho_eff / pulse.rho_in,
                    p_r.rho_eff / pulse.rho_in,
                    p_t.valid,
                    p_r.valid,
                ]
            )
    _write(cfg, "pulseparams", rows)


def cmd_poynting(cfg: Config) -> None:
    pulse = cfg.pulse()
    slab = cfg.slab()
    if cfg.sweep is not None:
        xs = cfg.sweep_values()
    else:
        span = 4.0 * pulse.length
        xs = np.linspace(-span, span, 1001)
    sq = squeezed_flux(slab, pulse, cfg.channel)
    th = thermal_flux(slab, pulse)
    if pulse.alpha0 == 0:
        coh = np.zeros_like(xs)
    else:
        coh = coherent_poynting(slab, pulse, xs, 0.0, cfg.channel)
    rows = [[x, c, sq, th, c + sq + th] for x, c in zip(xs, coh)]
    _write(cfg, "poynting", rows)


_DISPATCH = {
    "coefficients": cmd_coefficients,
    "variances": cmd_variances,
    "extrema": cmd_extrema,
    "spectrum": cmd_spectrum,
    "pulseparams": cmd_pulseparams,
    "poynting": cmd_poynting,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = Config(args)
        _DISPATCH[cfg.command](cfg)
    except (ValueError, TypeError, OSError) as exc:
        print(f"squeezeslab: configuration error: {exc}", file=sys.stderr)
        return 2
    except SqueezeSlabError as exc:
        print(f"squeezeslab: numerical error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
