"""Walk through the slab's linear response.

A dielectric plate of thickness 2l reflects and transmits light through the
interference of its internal multiple reflections.  This script sweeps the
half-thickness at fixed wavelength and plots |r_s|, |t_s| and the
absorptance for a lossless and a weakly absorbing plate.

Run from the repository root:  python demos/slab_scattering.py
"""

import math
import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from squeezeslab import ConstantIndex, slab_amplitudes

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

C = 299792458.0
wavelength = 1064e-9
omega = 2 * math.pi * C / wavelength

ls = np.linspace(1e-9, 4e-6, 4000)

fig, axes = plt.subplots(3, 1, figsize=(7, 8), sharex=True)
for kappa, style in ((0.0, "-"), (0.02, "--")):
    model = ConstantIndex(1.5, kappa)
    r, t = slab_amplitudes(model, omega, ls)
    label = f"kappa = {kappa}"
    axes[0].plot(ls * 1e6, np.abs(t) ** 2, style, label=label)
    axes[1].plot(ls * 1e6, np.abs(r) ** 2, style, label=label)
    axes[2].plot(ls * 1e6, 1 - np.abs(r) ** 2 - np.abs(t) ** 2, style, label=label)

axes[0].set_ylabel("|t_s|^2")
axes[1].set_ylabel("|r_s|^2")
axes[2].set_ylabel("absorptance")
axes[2].set_xlabel("half-thickness l (um)")
for ax in axes:
    ax.legend()
    ax.grid(alpha=0.3)

# The lossless curves are periodic with period lambda/(4 eta): full
# transparency recurs whenever the internal round trip is a whole number of
# wavelengths.  Absorption damps the swings and opens the absorptance.
period = wavelength / (4 * 1.5)
axes[0].set_title(f"Fabry-Perot interference, period {period * 1e6:.4f} um in l")

fig.tight_layout()
fig.savefig(OUT / "slab_scattering.png", dpi=150)
print("wrote", OUT / "slab_scattering.png")

# Sanity numbers quoted in the library tests: at the anti-resonance
# 4 eta w l / c = pi the lossless plate transmits 2 eta/(eta^2+1) = 12/13.
model = ConstantIndex(1.5, 0.0)
r, t = slab_amplitudes(model, omega, wavelength / (8 * 1.5))
print(f"anti-resonant |t_s| = {abs(t):.6f} (12/13 = {12 / 13:.6f})")
