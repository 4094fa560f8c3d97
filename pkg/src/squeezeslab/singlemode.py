"""Single-mode squeezed coherent light scattered by the slab.

A monochromatic squeezed coherent state hits the slab from the left, vacuum
from the right.  Each output channel (T = forward, R = backward) carries a
rotated quadrature pair whose variances interpolate between the incident
squeezing and vacuum noise, weighted by the channel amplitude:

    var_x = (1/4) { (1 - |C|^2) + |C|^2 e^{-2 rho} + 2 <F^dag F> }
    var_y = (1/4) { (1 - |C|^2) + |C|^2 e^{+2 rho} + 2 <F^dag F> }

with C the transmission or reflection amplitude and the optimal rotation
angle ``theta + delta`` (squeeze phase plus channel half-phase).  The
coherent displacement alpha never enters.

For a constant-index model, the thickness values extremizing the variances
solve a transcendental residual equation whose oscillation dies out beyond a
finite ``thickness_of_last_extremum`` when the slab absorbs; closed-form
thick-slab limits for the reflected channel complete the picture.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import List, NamedTuple, Tuple

import numpy as np

from .constants import SPEED_OF_LIGHT as C
from .errors import NoExtremumError
from .materials import ConstantIndex
from .numerics import Bracket, find_root
from .slab import SlabSpec, noise_moment, scatter_coefficients, slab_amplitudes


@dataclass(frozen=True)
class SqueezeParams:
    """Squeezed coherent input: magnitude rho, phase theta, displacement alpha.

    ``alpha`` is carried for bookkeeping only; no output noise quantity
    depends on it.
    """

    rho: float
    theta: float = 0.0
    alpha: complex = 0j

    def __post_init__(self):
        if self.rho < 0.0:
            raise ValueError("rho must be >= 0")


@dataclass(frozen=True)
class QuadratureVariances:
    """Output quadrature variances; vacuum level is 1/4.

    ``var_x`` is the squeezed (minimal) rotated quadrature, ``var_y`` the
    anti-squeezed one, ``phi_opt`` the rotation angle achieving the minimum.
    """

    var_x: float
    var_y: float
    phi_opt: float


def _channel(slab: SlabSpec, omega: float, channel: str):
    """(amplitude, half-phase) of the requested output channel."""
    coeffs = scatter_coefficients(slab, omega)
    if channel == "T":
        return coeffs.t_s, coeffs.delta_t
    if channel == "R":
        return coeffs.r_s, coeffs.delta_r
    raise ValueError(f"channel must be 'T' or 'R', got {channel!r}")


def variance_vs_angle(
    slab: SlabSpec, omega: float, sq: SqueezeParams, phi: float, channel: str = "T"
) -> float:
    """Variance of the quadrature rotated by phi in the given channel.

    Sinusoidal in ``2(phi - (theta + delta))``; its minimum over phi is
    ``var_x`` of :func:`transmitted_variances` / :func:`reflected_variances`.
    """
    c_amp, delta = _channel(slab, omega, channel)
    noise = noise_moment(slab, omega)
    rho = sq.rho
    osc = math.sinh(rho) ** 2 - math.sinh(rho) * math.cosh(rho) * math.cos(
        2.0 * (phi - (sq.theta + delta))
    )
    return 0.25 * (1.0 + 2.0 * abs(c_amp) ** 2 * osc + 2.0 * noise)


def _variances(c_abs2: float, delta: float, noise: float, sq: SqueezeParams):
    var_x = 0.25 * ((1.0 - c_abs2) + c_abs2 * math.exp(-2.0 * sq.rho) + 2.0 * noise)
    var_y = 0.25 * ((1.0 - c_abs2) + c_abs2 * math.exp(2.0 * sq.rho) + 2.0 * noise)
    return QuadratureVariances(var_x=var_x, var_y=var_y, phi_opt=sq.theta + delta)


def transmitted_variances(slab: SlabSpec, omega: float, sq: SqueezeParams) -> QuadratureVariances:
    """Minimal/maximal quadrature variances of the forward scattered light."""
    c_amp, delta = _channel(slab, omega, "T")
    return _variances(abs(c_amp) ** 2, delta, noise_moment(slab, omega), sq)


def reflected_variances(slab: SlabSpec, omega: float, sq: SqueezeParams) -> QuadratureVariances:
    """Minimal/maximal quadrature variances of the backward scattered light."""
    c_amp, delta = _channel(slab, omega, "R")
    return _variances(abs(c_amp) ** 2, delta, noise_moment(slab, omega), sq)


def uncertainty_product_lossless(slab: SlabSpec, omega: float, sq: SqueezeParams) -> float:
    """var_x * var_y for a lossless slab at zero temperature.

    Equals ``(1/16) {1 + 2 |t_s r_s|^2 (cosh 2 rho - 1)}`` for either
    channel; it is 1/16 (minimum uncertainty) exactly when the channel
    carries all or none of the light.
    """
    if slab.temperature != 0.0:
        raise ValueError("uncertainty product formula requires temperature = 0")
    coeffs = scatter_coefficients(slab, omega)
    if abs(coeffs.absorptance) > 1e-12:
        raise ValueError("uncertainty product formula requires a lossless slab (kappa = 0)")
    v = transmitted_variances(slab, omega, sq)
    return v.var_x * v.var_y


class Extremum(NamedTuple):
    l: float
    kind: str


def _constant_invariants(model: ConstantIndex):
    """Scalar combinations of eps = n^2 entering the extremum equations."""
    eta, kappa = model.eta, model.kappa
    eps = complex(eta, kappa) ** 2
    abs_eps = abs(eps)
    a_plus = abs_eps + 1.0
    a_minus = abs_eps - 1.0
    b_eta = a_plus**2 + 4.0 * eta**2
    b_kappa = a_minus**2 - 4.0 * kappa**2
    return eta, kappa, eps.real, eps.imag, abs_eps, a_plus, a_minus, b_eta, b_kappa


def _require_constant(model) -> ConstantIndex:
    if not isinstance(model, ConstantIndex):
        raise TypeError("thickness-extremum analysis requires a ConstantIndex model")
    return model


def extremum_residual(slab: SlabSpec, omega: float, l, channel: str = "T"):
    """Residual whose zeros in l locate the variance extrema of a channel.

    Vectorized over l.  For the transmitted channel the residual is
    proportional to ``-d|t_s|^2/dl``; for the reflected channel its zeros
    coincide with the extrema of ``|r_s|^2``.  The slab's thermal noise term
    is dropped, which is exact at T = 0 and negligible for visible light at
    room temperature.
    """
    model = _require_constant(slab.model)
    eta, kappa, eps_r, eps_i, abs_eps, a_plus, a_minus, b_eta, b_kappa = _constant_invariants(model)
    u = 4.0 * omega * np.asarray(l, dtype=float) / C
    ku, eu = kappa * u, eta * u
    if channel == "T":
        res = (
            kappa * b_eta * np.sinh(ku)
            + eta * b_kappa * np.sin(eu)
            + 2.0 * eps_i * (a_plus * np.cosh(ku) + a_minus * np.cos(eu))
        )
    elif channel == "R":
        res = (
            (2.0 * kappa * abs_eps * np.sinh(ku) + eps_i * np.cosh(ku)) * np.cos(eu)
            - eps_i
            + (2.0 * eta * abs_eps * np.cosh(ku) + (abs_eps**2 + eps_r) * np.sinh(ku)) * np.sin(eu)
        )
    else:
        raise ValueError(f"channel must be 'T' or 'R', got {channel!r}")
    return float(res) if np.ndim(res) == 0 else res


def _squeezed_variance_of_l(slab: SlabSpec, omega: float, channel: str, rho_ref: float = 1.0):
    """var_x as a function of l at T = 0, used to classify extrema."""
    factor = 1.0 - math.exp(-2.0 * rho_ref)

    def var(l: float) -> float:
        r_s, t_s = slab_amplitudes(slab.model, omega, l)
        c_abs2 = abs(t_s if channel == "T" else r_s) ** 2
        return 0.25 * (1.0 - c_abs2 * factor)

    return var


def find_extrema(
    slab: SlabSpec, omega: float, l_range: Tuple[float, float], channel: str = "T"
) -> List[Extremum]:
    """All variance extrema in l on the given range, sorted ascending.

    The residual is scanned at step lambda/(40 eta) to bracket sign changes,
    each root is polished by bisection to a relative tolerance of 1e-12, and
    the kind is decided by the second difference of the squeezed-quadrature
    variance at +-lambda/(400 eta).  A range shorter than one oscillation
    period lambda/(4 eta) yields an empty list with a warning.
    """
    model = _require_constant(slab.model)
    lo, hi = l_range
    if not (0.0 < lo < hi):
        raise ValueError("l_range must satisfy 0 < lo < hi")
    lam = 2.0 * math.pi * C / omega
    period = lam / (4.0 * model.eta)
    if hi - lo < period:
        warnings.warn("thickness range shorter than one oscillation period; no extrema reported")
        return []
    step = lam / (40.0 * model.eta)

    ls = np.arange(lo, hi + 0.5 * step, step)
    ls[-1] = min(ls[-1], hi)
    res = extremum_residual(slab, omega, ls, channel)

    def f(l: float) -> float:
        return extremum_residual(slab, omega, l, channel)

    roots: List[float] = []
    for i in range(len(ls) - 1):
        if res[i] == 0.0:
            roots.append(float(ls[i]))
        elif res[i] * res[i + 1] < 0.0:
            bracket = Bracket(float(ls[i]), float(ls[i + 1]), float(res[i]), float(res[i + 1]))
            roots.append(find_root(f, bracket, tol=1e-12 * hi))
    if res[-1] == 0.0:
        roots.append(float(ls[-1]))

    var = _squeezed_variance_of_l(slab, omega, channel)
    h = lam / (400.0 * model.eta)
    out: List[Extremum] = []
    for root in roots:
        if not lo <= root <= hi:
            continue
        second_diff = var(root - h) - 2.0 * var(root) + var(root + h)
        out.append(Extremum(l=root, kind="min" if second_diff > 0.0 else "max"))
    out.sort(key=lambda e: e.l)
    return out


def thickness_of_last_extremum(slab: SlabSpec, omega: float) -> float:
    """Largest l at which the transmitted-channel residual can still vanish.

    Beyond this thickness the growing hyperbolic envelope of the residual
    exceeds the fixed amplitude of its oscillatory part, so the variance
    oscillation in l is extinguished.  Returns ``inf`` for a lossless slab.

    Raises
    ------
    NoExtremumError
        If the envelope already exceeds the oscillation amplitude at l = 0,
        or the inverse-tanh argument leaves (-1, 1).
    """
    model = _require_constant(slab.model)
    if model.kappa == 0.0:
        return math.inf
    eta, kappa, eps_r, eps_i, abs_eps, a_plus, a_minus, b_eta, b_kappa = _constant_invariants(model)
    osc = math.hypot(eta * b_kappa, 2.0 * eps_i * a_minus)
    d = osc**2 + (kappa * b_eta) ** 2
    disc = d - (2.0 * eps_i * a_plus) ** 2
    if disc < 0.0:
        raise NoExtremumError("oscillation amplitude below the absorption envelope for all l")
    candidates = []
    for sign in (+1.0, -1.0):
        tau = (-2.0 * eps_i * kappa * a_plus * b_eta + sign * osc * math.sqrt(disc)) / d
        if -1.0 < tau < 1.0:
            l = C / (4.0 * omega * kappa) * math.atanh(tau)
            if l > 0.0:
                candidates.append(l)
    if not candidates:
        raise NoExtremumError("no positive thickness solves the envelope condition")
    return max(candidates)


def asymptotic_reflected_limits(model: ConstantIndex, rho: float) -> Tuple[float, float]:
    """Thick-slab limits (var_x, var_y) of the reflected quadrature variances.

    Only the first-interface reflection survives as l -> inf, so the limits
    depend on the material alone:

        var_x -> (1/4) { 1 - (1 - e^{-2 rho}) |n^2 - 1|^2 / (B_eta + 4 eta A_+) }
        var_y -> (1/4) { 1 + (e^{+2 rho} - 1) |n^2 - 1|^2 / (B_eta + 4 eta A_+) }
    """
    _require_constant(model)
    if rho < 0.0:
        raise ValueError("rho must be >= 0")
    eta, kappa, eps_r, eps_i, abs_eps, a_plus, a_minus, b_eta, b_kappa = _constant_invariants(model)
    n2m1 = complex(eta, kappa) ** 2 - 1.0
    ratio = abs(n2m1) ** 2 / (b_eta + 4.0 * eta * a_plus)
    var_x = 0.25 * (1.0 - (1.0 - math.exp(-2.0 * rho)) * ratio)
    var_y = 0.25 * (1.0 + (math.exp(2.0 * rho) - 1.0) * ratio)
    return var_x, var_y
