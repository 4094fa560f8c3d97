"""Continuum squeezed pulses: power spectra and narrow-band output parameters.

The incident pulse is a Gaussian wave packet centred on a carrier ``w_c``:
the squeeze magnitude profile is ``rho_I(w) = rho_I exp[-L_I^2 (w-w_c)^2 /
4c^2]`` and, when a coherent amplitude is present, ``alpha(w)`` carries the
same Gaussian envelope.  ``L_I`` is the root-mean-square spatial length of
the pulse.

In the narrow-band approximation the log of a channel amplitude is expanded
to second order around the carrier,

    C(w) ~ C(w_c) exp[ 2i gamma l (w - w_c) - 8 beta^2 l^2 (w - w_c)^2 ],

which maps the scattered squeezed-vacuum spectrum onto the incident form
with a shifted centre, a changed mean-square length, and a modified peak
squeeze exponent.  The module exposes both the exact spectra and the
narrow-band descriptors, including the effective peak squeeze parameter that
corrects the raw exponent for the peak shift and bandwidth change.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass

import numpy as np

from .constants import HBAR, SPEED_OF_LIGHT as C, VACUUM_PERMITTIVITY as EPS0
from .errors import SingularityError
from .materials import ConstantIndex
from .numerics import composite_gauss_legendre
from .slab import SlabSpec, absorptance, slab_amplitudes, thermal_occupation

logger = logging.getLogger(__name__)

#: Narrow-packet requirement: the spectral width c/L_I must stay below this
#: fraction of the carrier.
NARROW_PACKET_FRACTION = 1.0 / 20.0


@dataclass(frozen=True)
class GaussianPulseSpec:
    """Gaussian squeezed pulse incident on the slab.

    Parameters
    ----------
    omega_c : float
        Carrier angular frequency, rad/s.
    length : float
        Root-mean-square spatial length L_I, metres.  Must satisfy
        ``c / L_I < omega_c / 20`` (narrow packet).
    rho_in : float
        Peak squeeze magnitude at the carrier, >= 0.
    alpha0 : complex
        Coherent peak amplitude; 0 selects the squeezed-vacuum convention
        for the incident spectrum.
    theta, phi : float
        Squeeze and coherent phases (frequency independent).
    """

    omega_c: float
    length: float
    rho_in: float
    alpha0: complex = 0j
    theta: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        if not self.omega_c > 0.0:
            raise ValueError("omega_c must be positive")
        if not self.length > 0.0:
            raise ValueError("length must be positive")
        if self.rho_in < 0.0:
            raise ValueError("rho_in must be >= 0")
        if C / self.length >= NARROW_PACKET_FRACTION * self.omega_c:
            raise ValueError(
                "pulse too short: c/L must be below omega_c/20 for a narrow packet"
            )

    @property
    def bandwidth(self) -> float:
        """Spectral scale c / L_I in rad/s."""
        return C / self.length

    def squeeze_profile(self, omega, expanded: bool = False):
        """rho_I(omega): Gaussian, or its quadratic expansion about the carrier."""
        x2 = (self.length * (np.asarray(omega, dtype=float) - self.omega_c)) ** 2 / (4.0 * C**2)
        prof = self.rho_in * (1.0 - x2) if expanded else self.rho_in * np.exp(-x2)
        return float(prof) if np.ndim(prof) == 0 else prof

    def coherent_profile(self, omega):
        """alpha(omega): Gaussian envelope times the coherent phase."""
        omega = np.asarray(omega, dtype=float)
        env = np.exp(-((self.length * (omega - self.omega_c)) ** 2) / (4.0 * C**2))
        out = self.alpha0 * cmath.exp(1j * self.phi) * env
        return complex(out) if np.ndim(out) == 0 else out

    def band(self, halfwidth: float = 8.0):
        """(lo, hi) frequency band covering the pulse, clipped to positive."""
        lo = max(self.omega_c - halfwidth * self.bandwidth, 1e-6 * self.omega_c)
        hi = self.omega_c + halfwidth * self.bandwidth
        return lo, hi


@dataclass(frozen=True)
class NarrowbandCoefficients:
    """Second-order expansion data of ln C(omega) at the carrier.

    The first derivative is ``2i gamma l`` and the second is
    ``-16 beta_sq l^2``.
    """

    channel: str
    c_at_center: complex
    gamma: complex
    beta_sq: complex


@dataclass(frozen=True)
class PulseParams:
    """Narrow-band descriptors of a scattered squeezed-vacuum pulse.

    ``delta_omega``: shift of the squeezing-spectrum centre (the output dip
    sits at ``omega_c - delta_omega``).  ``length_sq``: output mean-square
    spatial length.  ``rho_gamma``: raw peak squeeze exponent of the output
    parabola.  ``rho_eff``: effective peak squeeze parameter, corrected for
    the peak shift and the bandwidth change.  ``valid`` is False where the
    expansion breaks down; downstream quantitative claims are then void.
    """

    channel: str
    delta_omega: float
    length_sq: float
    rho_gamma: float
    rho_eff: float
    valid: bool


def _prefactor(omega, sigma: float):
    return HBAR * np.asarray(omega, dtype=float) / (2.0 * EPS0 * C * sigma)


def incident_spectrum(pulse: GaussianPulseSpec, omega, sigma: float = 1.0):
    """Power spectrum of the incident pulse, W*s per unit area scale 1/sigma.

    With a coherent amplitude present this is

        (hbar w / 2 eps0 c sigma) |alpha(w)|^2 {cosh 2rho - sinh 2rho cos 2(theta - phi)}

    and reduces to the squeezed / anti-squeezed quadrature spectra for
    ``theta - phi`` equal to 0 / pi/2.  For ``alpha0 = 0`` the
    squeezed-vacuum convention ``(hbar w / 2 eps0 c sigma) e^{-2 rho(w)}``
    applies instead.
    """
    omega_arr = np.asarray(omega, dtype=float)
    if np.any(omega_arr <= 0.0):
        raise ValueError("omega must be positive")
    pref = _prefactor(omega_arr, sigma)
    rho = pulse.squeeze_profile(omega_arr)
    if pulse.alpha0 == 0:
        out = pref * np.exp(-2.0 * rho)
    else:
        amp2 = np.abs(pulse.coherent_profile(omega_arr)) ** 2
        phase = math.cos(2.0 * (pulse.theta - pulse.phi))
        out = pref * amp2 * (np.cosh(2.0 * rho) - np.sinh(2.0 * rho) * phase)
    return float(out) if np.ndim(out) == 0 else out


def channel_amplitude(slab: SlabSpec, omega, channel: str):
    """C(omega): the transmission (T) or reflection (R) amplitude."""
    r_s, t_s = slab_amplitudes(slab.model, omega, slab.half_thickness)
    if channel == "T":
        return t_s
    if channel == "R":
        return r_s
    raise ValueError(f"channel must be 'T' or 'R', got {channel!r}")


def scattered_spectrum_exact(
    slab: SlabSpec,
    pulse: GaussianPulseSpec,
    omega,
    channel: str,
    expanded_profile: bool = False,
):
    """Exact scattered spectrum |C(w)|^2 S_I(w) plus the thermal term.

    The thermal contribution ``(hbar w / 2 eps0 c sigma) nbar(w, T) A(w)`` is
    independent of the pulse and vanishes at zero temperature.

    ``expanded_profile=True`` replaces the Gaussian squeeze profile by its
    quadratic expansion; useful for isolating the channel-amplitude expansion
    error when comparing against the narrow-band spectrum.
    """
    omega_arr = np.asarray(omega, dtype=float)
    pref = _prefactor(omega_arr, sigma=slab.sigma)
    rho = pulse.squeeze_profile(omega_arr, expanded=expanded_profile)
    if pulse.alpha0 == 0:
        incident = pref * np.exp(-2.0 * rho)
    else:
        amp2 = np.abs(pulse.coherent_profile(omega_arr)) ** 2
        phase = math.cos(2.0 * (pulse.theta - pulse.phi))
        incident = pref * amp2 * (np.cosh(2.0 * rho) - np.sinh(2.0 * rho) * phase)
    out = np.abs(channel_amplitude(slab, omega_arr, channel)) ** 2 * incident
    if slab.temperature > 0.0:
        out = out + pref * thermal_occupation(omega_arr, slab.temperature) * absorptance(
            slab, omega_arr
        )
    return float(out) if np.ndim(out) == 0 else out


def narrowband_coefficients(slab: SlabSpec, omega_c: float, channel: str) -> NarrowbandCoefficients:
    """Expansion coefficients gamma and beta^2 of ln C(omega) at the carrier.

    Requires a ConstantIndex model so that the complex wave-vector slope is
    exactly ``k' = (eta + i kappa)/c``.  The reflected channel is singular at
    internal resonances ``exp(4i w_c n l / c) = 1`` where the reflection
    amplitude vanishes.
    """
    if not isinstance(slab.model, ConstantIndex):
        raise TypeError("narrow-band coefficients require a ConstantIndex model")
    n = complex(slab.model.eta, slab.model.kappa)
    l = slab.half_thickness
    kl = omega_c * l / C
    z = cmath.exp(4j * kl * n.real) * math.exp(-4.0 * kl * n.imag)
    denom = (n + 1.0) ** 2 - (n - 1.0) ** 2 * z
    k_prime = n / C

    gamma_t = k_prime - 1.0 / C + 2.0 * k_prime * (n - 1.0) ** 2 * z / denom
    beta_t = k_prime * (n * n - 1.0) * cmath.exp(2j * kl * n.real) * math.exp(-2.0 * kl * n.imag) / denom
    r_s, t_s = slab_amplitudes(slab.model, omega_c, l)

    if channel == "T":
        return NarrowbandCoefficients(channel="T", c_at_center=t_s, gamma=gamma_t, beta_sq=beta_t**2)
    if channel == "R":
        if abs(z - 1.0) < 1e-12:
            resonant_l = math.pi * C / (2.0 * slab.model.eta * omega_c)
            raise SingularityError(
                f"reflected channel singular: l = {l:.6e} m sits on an internal "
                f"resonance (multiples of {resonant_l:.6e} m)"
            )
        gamma_r = gamma_t + k_prime * (z + 1.0) / (z - 1.0)
        beta_sq_r = beta_t**2 - k_prime**2 * z / (z - 1.0) ** 2
        return NarrowbandCoefficients(channel="R", c_at_center=r_s, gamma=gamma_r, beta_sq=beta_sq_r)
    raise ValueError(f"channel must be 'T' or 'R', got {channel!r}")


def output_pulse_params(
    slab: SlabSpec,
    pulse: GaussianPulseSpec,
    channel: str,
    denom_tol: float = 1e-3,
    thickness_factor: float = 10.0,
    fidelity_tol: float = 0.2,
) -> PulseParams:
    """Narrow-band descriptors of the scattered squeezed-vacuum pulse.

    The centre shift comes from the linear decay term of ln|C|, the output
    length and peak exponent from matching the quadratic terms:

        denom       = rho_in L_I^2 / 4c^2 - 8 Re(beta^2) l^2
        delta_omega = -Im(gamma) l / denom
        rho_gamma   = rho_in - ln|C(w_c)| - Im(gamma) l delta_omega
        L^2         = 4 c^2 denom / rho_gamma
        rho_eff     = rho_gamma [1 - L^2 delta_omega^2 / 4c^2] (L^2 / L_I^2)

    ``valid`` is False when the expansion is not trustworthy:

    * the pulse is not much longer than the optical thickness
      (``L_I <= thickness_factor * 2 l eta``);
    * ``denom`` falls within ``denom_tol`` (relative) of zero or is not
      positive (the centre shift blows up);
    * the slab's quadratic term rivals the pulse's own spectral curvature,
      ``8 |Re beta^2| l^2 >= (1 - denom_tol) * rho_in L_I^2 / 4c^2`` (the
      log-amplitude parabola is then dominated by the slab, which happens at
      reflection zeros where ln|C| spikes and no parabola is faithful);
    * the predicted centre shift leaves the pulse band,
      ``|delta_omega| >= c / L_I``;
    * the second-order expansion of ln|C| misses the exact channel power at
      the band edges ``w_c +- 2c/L_I`` by more than ``fidelity_tol``
      relative (this catches the reflection dips, where ln|C| spikes and no
      parabola can follow it).

    The thresholds are engineering choices and are logged when they fire.
    """
    coeffs = narrowband_coefficients(slab, pulse.omega_c, channel)
    l = slab.half_thickness
    rho_in = pulse.rho_in
    scale = rho_in * pulse.length**2 / (4.0 * C**2)
    denom = scale - 8.0 * coeffs.beta_sq.real * l**2

    valid = True
    eta_c = slab.model.eta
    if pulse.length <= thickness_factor * 2.0 * l * eta_c:
        logger.info("narrow-band validity: pulse length %.3e not >> optical thickness %.3e",
                    pulse.length, 2.0 * l * eta_c)
        valid = False
    if abs(denom) < denom_tol * scale or denom <= 0.0 or scale == 0.0:
        logger.info("narrow-band validity: spectral curvature denominator %.3e too close to zero",
                    denom)
        valid = False
    if 8.0 * abs(coeffs.beta_sq.real) * l**2 >= (1.0 - denom_tol) * scale:
        logger.info("narrow-band validity: slab curvature %.3e rivals pulse curvature %.3e",
                    8.0 * abs(coeffs.beta_sq.real) * l**2, scale)
        valid = False
    for sign in (-1.0, 1.0):
        dw = sign * 2.0 * pulse.bandwidth
        predicted = abs(coeffs.c_at_center) ** 2 * math.exp(
            -4.0 * coeffs.gamma.imag * l * dw - 16.0 * coeffs.beta_sq.real * l**2 * dw**2
        )
        exact = abs(channel_amplitude(slab, pulse.omega_c + dw, channel)) ** 2
        if not abs(predicted - exact) <= fidelity_tol * max(exact, 1e-300):
            logger.info("narrow-band validity: band-edge power off by %.2f relative",
                        abs(predicted - exact) / max(exact, 1e-300))
            valid = False
            break

    im_gamma_l = coeffs.gamma.imag * l
    if denom != 0.0:
        delta_omega = -im_gamma_l / denom
    else:
        delta_omega = math.inf if im_gamma_l < 0 else (-math.inf if im_gamma_l > 0 else 0.0)
    if abs(delta_omega) >= pulse.bandwidth:
        logger.info("narrow-band validity: centre shift %.3e exceeds the pulse bandwidth %.3e",
                    delta_omega, pulse.bandwidth)
        valid = False
    rho_gamma = rho_in - math.log(abs(coeffs.c_at_center)) - im_gamma_l * delta_omega
    if rho_gamma > 0.0 and math.isfinite(delta_omega):
        length_sq = 4.0 * C**2 * denom / rho_gamma
    else:
        length_sq = math.nan
        valid = False
    if math.isfinite(delta_omega) and not math.isnan(length_sq):
        rho_eff = rho_gamma * (1.0 - length_sq * delta_omega**2 / (4.0 * C**2)) * (
            length_sq / pulse.length**2
        )
    else:
        rho_eff = math.nan
    return PulseParams(
        channel=channel,
        delta_omega=delta_omega,
        length_sq=length_sq,
        rho_gamma=rho_gamma,
        rho_eff=rho_eff,
        valid=valid,
    )


def incident_squeeze_profile(pulse: GaussianPulseSpec, omega, clamp: bool = False):
    """Quadratic incident profile rho_I [1 - L_I^2 (w - w_c)^2 / 4c^2]."""
    prof = pulse.squeeze_profile(omega, expanded=True)
    if clamp:
        prof = np.maximum(prof, 0.0)
        return float(prof) if np.ndim(prof) == 0 else prof
    return prof


def squeezing_spectrum(
    params: PulseParams,
    pulse: GaussianPulseSpec,
    omega,
    clamp: bool = False,
    effective: bool = False,
):
    """Output squeeze exponent profile rho(omega) of the scattered pulse.

    The raw profile is the parabola

        rho(w) = rho_gamma [1 - L^2 (w - w_c + delta_omega)^2 / 4c^2]

    peaking at ``w_c - delta_omega``.  With ``effective=True`` the parabola
    is scaled by ``L^2 / L_I^2`` so that its value at the incident carrier
    equals ``rho_eff``; that is the physically comparable squeezing level.
    ``clamp=True`` zeroes the profile outside its positive region (for
    plotting; the parabola is meaningless far from the peak).
    """
    if not params.valid:
        raise ValueError("squeezing spectrum requested from invalid narrow-band parameters")
    omega = np.asarray(omega, dtype=float)
    det = omega - pulse.omega_c + params.delta_omega
    prof = params.rho_gamma * (1.0 - params.length_sq * det**2 / (4.0 * C**2))
    if effective:
        prof = prof * (params.length_sq / pulse.length**2)
    if clamp:
        prof = np.maximum(prof, 0.0)
    return float(prof) if np.ndim(prof) == 0 else prof


def measurable_squeeze_exponent(slab: SlabSpec, pulse: GaussianPulseSpec, omega, channel: str):
    """Homodyne-equivalent squeeze exponent of the scattered field at omega.

    Defined through the optimally detected quadrature variance of the
    output, ``(1/4) e^{-2 rho_out} = (1/4)[1 - |C(w)|^2 (1 - e^{-2
    rho_I(w)})]``, so

        rho_out(w) = -(1/2) ln[1 - |C(w)|^2 (1 - e^{-2 rho_I(w)})].

    Unlike the raw output exponent of :func:`squeezing_spectrum` (which
    grows under attenuation because the suppressed quadrature spectrum gets
    suppressed further), this is the squeezing level an observer of the
    output actually sees; it satisfies ``rho_out(w) <= rho_I(w)`` pointwise,
    with equality only for a perfectly transparent channel.
    """
    omega = np.asarray(omega, dtype=float)
    c_abs2 = np.abs(channel_amplitude(slab, omega, channel)) ** 2
    rho = pulse.squeeze_profile(omega)
    arg = 1.0 - c_abs2 * (1.0 - np.exp(-2.0 * rho))
    out = -0.5 * np.log(np.maximum(arg, 1e-300))
    return float(out) if np.ndim(out) == 0 else out


def scattered_spectrum_narrowband(slab: SlabSpec, pulse: GaussianPulseSpec, omega, channel: str):
    """Narrow-band squeezed-vacuum spectrum (hbar w / 2 eps0 c sigma) e^{-2 rho(w)}."""
    params = output_pulse_params(slab, pulse, channel)
    rho = squeezing_spectrum(params, pulse, omega)
    out = _prefactor(omega, slab.sigma) * np.exp(-2.0 * rho)
    return float(out) if np.ndim(out) == 0 else out


def continuum_quadrature_variance(slab: SlabSpec, pulse: GaussianPulseSpec, channel: str) -> float:
    """Variance of the optimally detected output quadrature of the pulse.

    Narrow-band result for a squeezed-vacuum input; mirrors the single-mode
    formula evaluated at the carrier:

        (1/4) { 1 - |C(w_c)|^2 (1 - e^{-2 rho_in}) + 2 nbar A }
    """
    if pulse.alpha0 != 0:
        raise ValueError("continuum quadrature variance assumes a squeezed-vacuum input")
    c_abs2 = abs(channel_amplitude(slab, pulse.omega_c, channel)) ** 2
    nbar = thermal_occupation(pulse.omega_c, slab.temperature)
    noise = nbar * absorptance(slab, pulse.omega_c) if nbar else 0.0
    return 0.25 * (1.0 - c_abs2 * (1.0 - math.exp(-2.0 * pulse.rho_in)) + 2.0 * noise)


def energy_weighted_fractions(
    slab: SlabSpec, pulse: GaussianPulseSpec, nodes_per_interval: int = 64
):
    """Spectrally weighted transmitted and reflected power fractions (Q_T, Q_R).

    Weights |t_s|^2 and |r_s|^2 with the incident spectrum over the pulse
    band.  Near index matching Q_R scales as kappa^2 while Q_T approaches 1.
    """
    lo, hi = pulse.band()
    x, w = composite_gauss_legendre(lo, hi, intervals=16, nodes=nodes_per_interval)
    s_in = incident_spectrum(pulse, x, sigma=slab.sigma)
    r_s, t_s = slab_amplitudes(slab.model, x, slab.half_thickness)
    total = np.sum(w * s_in)
    q_t = np.sum(w * np.abs(t_s) ** 2 * s_in) / total
    q_r = np.sum(w * np.abs(r_s) ** 2 * s_in) / total
    return float(q_t), float(q_r)
