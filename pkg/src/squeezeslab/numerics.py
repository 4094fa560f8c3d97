"""Shared numerical kernels.

Deliberately conservative methods: bisection on a verified sign change,
three-point grid scanning with golden-section refinement, and
central-difference derivatives with one Richardson step.  The residuals these
are applied to are cheap and highly oscillatory, so robustness is worth more
than convergence order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Tuple

import numpy as np

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class Bracket:
    """An interval [lo, hi] on which f changes sign."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("bracket requires lo < hi")
        if not self.f_lo * self.f_hi < 0.0:
            raise ValueError("bracket endpoints must have opposite signs")


def bracket_root(f: Callable[[float], float], lo: float, hi: float) -> Bracket:
    """Evaluate f at the endpoints and build a :class:`Bracket`."""
    return Bracket(lo, hi, f(lo), f(hi))


def find_root(f: Callable[[float], float], bracket: Bracket, tol: float) -> float:
    """Bisection root of f on a verified bracket.

    Parameters
    ----------
    f : callable
    bracket : Bracket
    tol : float
        Absolute tolerance on the root location, > 0.

    Returns
    -------
    float
        Midpoint of the final interval; the interval still brackets a sign
        change, so the error is below ``tol``.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    lo, hi, f_lo = bracket.lo, bracket.hi, bracket.f_lo
    # Error halves per iteration, so the count is bounded a priori.
    n_iter = max(1, math.ceil(math.log2((hi - lo) / tol)))
    for _ in range(n_iter):
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if f_lo * f_mid < 0.0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi)


def grid_scan_extrema(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    step: float,
) -> List[Tuple[float, str]]:
    """Locate all local extrema of f on [lo, hi] by dense scanning.

    Interior grid points that beat both neighbours are refined by
    golden-section search to ``step / 100``.  The step must be smaller than
    half the shortest oscillation period of f, otherwise extrema are missed.

    Returns
    -------
    list of (x, kind)
        ``kind`` is ``"min"`` or ``"max"``; sorted ascending in x.
    """
    if not step > 0.0:
        raise ValueError("step must be positive")
    xs = np.arange(lo, hi + 0.5 * step, step)
    if xs.size < 3:
        return []
    ys = np.array([f(x) for x in xs])
    out: List[Tuple[float, str]] = []
    for i in range(1, len(xs) - 1):
        if ys[i] < ys[i - 1] and ys[i] < ys[i + 1]:
            out.append((_golden_section(f, xs[i - 1], xs[i + 1], step / 100.0, sign=1.0), "min"))
        elif ys[i] > ys[i - 1] and ys[i] > ys[i + 1]:
            out.append((_golden_section(f, xs[i - 1], xs[i + 1], step / 100.0, sign=-1.0), "max"))
    return out


def _golden_section(f, lo, hi, tol, sign):
    """Golden-section minimiser of sign*f on [lo, hi] to width tol."""
    a, b = lo, hi
    c = b - _INV_GOLDEN * (b - a)
    d = a + _INV_GOLDEN * (b - a)
    fc, fd = sign * f(c), sign * f(d)
    while (b - a) > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_GOLDEN * (b - a)
            fc = sign * f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_GOLDEN * (b - a)
            fd = sign * f(d)
    return 0.5 * (a + b)


def finite_diff(f: Callable[[float], complex], x0: float, h: float, order: int = 1):
    """Central-difference derivative with one Richardson extrapolation step.

    ``order=1`` combines the symmetric two-point stencil at steps h and h/2;
    ``order=2`` does the same with the three-point second-difference stencil,
    so five distinct abscissas are used in total.  Both combinations are
    fourth-order accurate.

    Parameters
    ----------
    f : callable, real -> real or complex
    x0 : float
    h : float
        Base step, > 0.
    order : {1, 2}
        Derivative order.
    """
    if not h > 0.0:
        raise ValueError("h must be positive")
    if order == 1:
        d_h = (f(x0 + h) - f(x0 - h)) / (2.0 * h)
        d_h2 = (f(x0 + 0.5 * h) - f(x0 - 0.5 * h)) / h
    elif order == 2:
        f0 = f(x0)
        d_h = (f(x0 + h) - 2.0 * f0 + f(x0 - h)) / h**2
        d_h2 = (f(x0 + 0.5 * h) - 2.0 * f0 + f(x0 - 0.5 * h)) / (0.25 * h**2)
    else:
        raise ValueError("order must be 1 or 2")
    return (4.0 * d_h2 - d_h) / 3.0


def composite_gauss_legendre(lo: float, hi: float, intervals: int, nodes: int):
    """Composite Gauss-Legendre nodes and weights on [lo, hi].

    Returns
    -------
    (x, w) : ndarray, ndarray
        Flattened nodes and weights over ``intervals`` equal panels with
        ``nodes`` points each, in ascending order.
    """
    if not (intervals >= 1 and nodes >= 1):
        raise ValueError("intervals and nodes must be >= 1")
    base_x, base_w = np.polynomial.legendre.leggauss(nodes)
    edges = np.linspace(lo, hi, intervals + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    x = (mid[:, None] + half[:, None] * base_x[None, :]).ravel()
    w = (half[:, None] * base_w[None, :]).ravel()
    return x, w


def integrate_with_doubling(
    f: Callable[[np.ndarray], np.ndarray],
    lo: float,
    hi: float,
    intervals: int,
    nodes: int,
):
    """Integrate f with composite Gauss-Legendre and report the doubling error.

    Returns
    -------
    (value, rel_change) : (complex, float)
        ``value`` uses twice the requested node count; ``rel_change`` is the
        relative difference against the single-count estimate and can be used
        as a convergence monitor.
    """
    x1, w1 = composite_gauss_legendre(lo, hi, intervals, nodes)
    x2, w2 = composite_gauss_legendre(lo, hi, intervals, 2 * nodes)
    v1 = np.sum(w1 * f(x1))
    v2 = np.sum(w2 * f(x2))
    scale = max(abs(v2), 1e-300)
    return v2, abs(v2 - v1) / scale
