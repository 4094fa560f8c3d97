"""Dielectric models and the complex refractive index.

Two material models are supported:

* :class:`ConstantIndex` -- frequency-independent refractive index
  ``n = eta + i*kappa``.  This is the model behind every closed-form
  thickness result in :mod:`squeezeslab.singlemode` and behind the
  narrow-band pulse coefficients in :mod:`squeezeslab.continuum`.
* :class:`LorentzOscillator` -- a single resonance
  ``eps(w) = 1 + wp^2 / (w0^2 - w^2 - i*g*w)``, passive for ``g >= 0``.

The refractive index is the square root of the permittivity on the branch
with positive real part; for passive media this branch automatically has a
non-negative imaginary part.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np


@dataclass(frozen=True)
class ConstantIndex:
    """Non-dispersive medium with refractive index ``eta + i*kappa``.

    Parameters
    ----------
    eta : float
        Real refractive index, > 0.
    kappa : float
        Extinction coefficient, >= 0.
    """

    eta: float
    kappa: float = 0.0

    def __post_init__(self):
        if not self.eta > 0.0:
            raise ValueError(f"eta must be positive, got {self.eta}")
        if self.kappa < 0.0:
            raise ValueError(f"kappa must be non-negative, got {self.kappa}")

    def epsilon(self, omega):
        """Relative permittivity (eta + i*kappa)**2, independent of omega."""
        n = complex(self.eta, self.kappa)
        return np.broadcast_to(n * n, np.shape(omega)) if np.ndim(omega) else n * n


@dataclass(frozen=True)
class LorentzOscillator:
    """Single-resonance dielectric, ``eps = 1 + wp^2/(w0^2 - w^2 - i*g*w)``.

    Parameters
    ----------
    omega0 : float
        Resonance frequency, rad/s, > 0.
    plasma : float
        Coupling (plasma) frequency, rad/s, >= 0.
    gamma : float
        Damping rate, rad/s, >= 0.  Any non-negative damping keeps
        ``Im eps >= 0`` for all positive frequencies (passivity).
    """

    omega0: float
    plasma: float
    gamma: float

    def __post_init__(self):
        if not self.omega0 > 0.0:
            raise ValueError(f"omega0 must be positive, got {self.omega0}")
        if self.plasma < 0.0:
            raise ValueError(f"plasma must be non-negative, got {self.plasma}")
        if self.gamma < 0.0:
            raise ValueError(f"gamma must be non-negative, got {self.gamma}")

    def epsilon(self, omega):
        omega = np.asarray(omega, dtype=float)
        denom = self.omega0**2 - omega**2 - 1j * self.gamma * omega
        eps = 1.0 + self.plasma**2 / denom
        return eps if eps.ndim else complex(eps)


DielectricModel = Union[ConstantIndex, LorentzOscillator]


def refractive_index(model: DielectricModel, omega):
    """Complex refractive index ``n(omega) = eta(omega) + i*kappa(omega)``.

    The branch of ``sqrt(eps)`` with ``Re n > 0`` is chosen; for a passive
    model this gives ``Im n >= 0`` as well.

    Parameters
    ----------
    model : DielectricModel
    omega : float or ndarray
        Angular frequency, rad/s, > 0.

    Returns
    -------
    complex or ndarray
    """
    _check_omega(omega)
    if isinstance(model, ConstantIndex):
        n = complex(model.eta, model.kappa)
        return np.broadcast_to(n, np.shape(omega)).copy() if np.ndim(omega) else n
    n = np.sqrt(np.asarray(model.epsilon(omega), dtype=complex))
    n = np.where(n.real < 0.0, -n, n)
    return n if n.ndim else complex(n)


def _check_omega(omega):
    omega = np.asarray(omega)
    if np.any(omega <= 0.0):
        raise ValueError("omega must be positive")
