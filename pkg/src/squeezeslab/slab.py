"""Linear response of a dielectric slab of thickness 2l.

The slab occupies ``|x| <= l`` with plane interfaces; the surrounding medium
is vacuum.  Its two-port scattering is symmetric: a single complex reflection
amplitude ``r_s`` and transmission amplitude ``t_s`` apply to light incident
from either side, and include all internal multiple reflections.

At normal incidence::

    r_s = (n^2 - 1) e^{-2i w l / c} (z - 1) / D
    t_s = 4 n e^{2i w (n - 1) l / c} / D
    D   = (n + 1)^2 - (n - 1)^2 z,      z = e^{4i w n l / c}

The absorptance ``A = 1 - |r_s|^2 - |t_s|^2`` is the fraction of incident
power dissipated; it also weighs the quantum noise the slab injects, whose
per-channel second moment at temperature T is ``nbar(w, T) * A(w)``.

``z`` is always evaluated as ``exp(4i w eta l / c) * exp(-4 w kappa l / c)``
so the real exponent decays and no overflow can occur for any thickness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import BOLTZMANN, HBAR, SPEED_OF_LIGHT as C
from .errors import SingularityError
from .materials import DielectricModel, refractive_index, _check_omega

_DENOM_TOL = 1e-14


@dataclass(frozen=True)
class SlabSpec:
    """A slab and its environment.

    Parameters
    ----------
    half_thickness : float
        Half-thickness l in metres, >= 0.  Zero is accepted and gives the
        identity scattering (no slab).
    model : DielectricModel
    sigma : float
        Quantization area in the transverse plane, m^2, > 0.  Spectra and
        energy fluxes scale as 1/sigma; it cancels from all normalized
        outputs.
    temperature : float
        Slab temperature in kelvin, >= 0.
    """

    half_thickness: float
    model: DielectricModel
    sigma: float = 1.0
    temperature: float = 0.0

    def __post_init__(self):
        if self.half_thickness < 0.0:
            raise ValueError("half_thickness must be >= 0")
        if not self.sigma > 0.0:
            raise ValueError("sigma must be positive")
        if self.temperature < 0.0:
            raise ValueError("temperature must be >= 0")


@dataclass(frozen=True)
class ScatterCoefficients:
    """Slab scattering data at one frequency.

    ``delta_r`` and ``delta_t`` are the principal half-phases:
    ``r_s = |r_s| exp(2i delta_r)`` with ``delta_r`` in (-pi/2, pi/2], and
    likewise for ``t_s``.
    """

    omega: float
    r_s: complex
    t_s: complex
    abs_r: float
    abs_t: float
    delta_r: float
    delta_t: float
    absorptance: float


def slab_amplitudes(model: DielectricModel, omega, half_thickness):
    """Complex (r_s, t_s) for arbitrary broadcastable omega and thickness.

    This is the vectorized core used by sweeps; ``scatter_coefficients``
    wraps it for a single frequency.

    Parameters
    ----------
    model : DielectricModel
    omega : float or ndarray
        Angular frequency, rad/s, > 0.
    half_thickness : float or ndarray
        Half-thickness l in metres, >= 0.

    Returns
    -------
    (r_s, t_s) : complex or ndarray pair
    """
    _check_omega(omega)
    n = np.asarray(refractive_index(model, omega), dtype=complex)
    kl = np.asarray(omega, dtype=float) * np.asarray(half_thickness, dtype=float) / C
    eta = n.real
    kappa = n.imag
    z = np.exp(4j * kl * eta) * np.exp(-4.0 * kl * kappa)
    denom = (n + 1.0) ** 2 - (n - 1.0) ** 2 * z
    scale = np.abs(n + 1.0) ** 2 + np.abs(n - 1.0) ** 2 * np.abs(z)
    if np.any(np.abs(denom) <= _DENOM_TOL * scale):
        raise SingularityError("slab response denominator vanished (resonant pole)")
    t_s = 4.0 * n * np.exp(2j * kl * (eta - 1.0)) * np.exp(-2.0 * kl * kappa) / denom
    r_s = (n * n - 1.0) * np.exp(-2j * kl) * (z - 1.0) / denom
    if r_s.ndim == 0:
        return complex(r_s), complex(t_s)
    return r_s, t_s


def scatter_coefficients(slab: SlabSpec, omega: float) -> ScatterCoefficients:
    """Full scattering record (amplitudes, half-phases, absorptance) at omega."""
    r_s, t_s = slab_amplitudes(slab.model, omega, slab.half_thickness)
    abs_r = abs(r_s)
    abs_t = abs(t_s)
    return ScatterCoefficients(
        omega=float(omega),
        r_s=r_s,
        t_s=t_s,
        abs_r=abs_r,
        abs_t=abs_t,
        delta_r=half_phase(r_s),
        delta_t=half_phase(t_s),
        absorptance=1.0 - abs_r**2 - abs_t**2,
    )


def absorptance(slab: SlabSpec, omega):
    """A(omega) = 1 - |r_s|^2 - |t_s|^2, vectorized over omega."""
    r_s, t_s = slab_amplitudes(slab.model, omega, slab.half_thickness)
    return 1.0 - np.abs(r_s) ** 2 - np.abs(t_s) ** 2


def half_phase(coefficient: complex) -> float:
    """Principal half-phase: arg(coefficient)/2, folded into (-pi/2, pi/2]."""
    return float(np.angle(coefficient)) / 2.0


def unwrap_half_phases(deltas):
    """Remove pi-jumps from a sweep of principal half-phases.

    The half-phase is only defined modulo pi; this restores a continuous
    branch along a frequency or thickness sweep.
    """
    deltas = np.asarray(deltas, dtype=float)
    return np.unwrap(2.0 * deltas) / 2.0


def homogeneous_limit(slab: SlabSpec, omega):
    """Transmission through length 2l of the bulk medium, interfaces removed.

    Returns ``exp(2i w n l / c)``: the amplitude for propagation over the
    slab thickness with the interface reflections switched off, so
    ``|t_s| = exp(-2 w kappa l / c)``.
    """
    _check_omega(omega)
    n = np.asarray(refractive_index(slab.model, omega), dtype=complex)
    kl = np.asarray(omega, dtype=float) * slab.half_thickness / C
    t = np.exp(2j * kl * n.real) * np.exp(-2.0 * kl * n.imag)
    return complex(t) if t.ndim == 0 else t


def thermal_occupation(omega, temperature):
    """Bose-Einstein occupation ``1/(exp(hbar w / kB T) - 1)``; 0 at T=0."""
    _check_omega(omega)
    if temperature < 0.0:
        raise ValueError("temperature must be >= 0")
    omega = np.asarray(omega, dtype=float)
    if temperature == 0.0:
        out = np.zeros_like(omega)
        return float(out) if out.ndim == 0 else out
    x = HBAR * omega / (BOLTZMANN * temperature)
    # expm1 overflows to inf for large x; 1/inf -> 0 is the right limit.
    with np.errstate(over="ignore"):
        out = 1.0 / np.expm1(x)
    return float(out) if out.ndim == 0 else out


def noise_moment(slab: SlabSpec, omega):
    """Per-channel noise second moment ``<F^dag F> = nbar(w, T) A(w)``.

    Identical for the left- and right-going noise channels of the symmetric
    slab.
    """
    nbar = thermal_occupation(omega, slab.temperature)
    if np.all(np.asarray(nbar) == 0.0):
        return nbar
    return nbar * absorptance(slab, omega)
