"""Quadrature noise of squeezed light after the slab, versus thickness.

Squeezed light (rho = 0.8, about 6.9 dB) hits the plate; the transmitted
and reflected quadrature variances oscillate with thickness through the
Fabry-Perot interference, and absorption slowly erodes the oscillation.
The reflected variances approach closed-form thick-slab limits.

Run from the repository root:  python demos/single_mode_variances.py
"""

import math
import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from squeezeslab import (
    ConstantIndex,
    SlabSpec,
    SqueezeParams,
    asymptotic_reflected_limits,
    slab_amplitudes,
    thickness_of_last_extremum,
)

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

C = 299792458.0
wavelength = 1064e-9
omega = 2 * math.pi * C / wavelength
rho = 0.8
sq_floor = math.exp(-2 * rho) / 4  # incident squeezed variance
sql = 0.25  # standard quantum limit


def variances(model, ls, channel):
    r, t = slab_amplitudes(model, omega, ls)
    c2 = np.abs(t if channel == "T" else r) ** 2
    var_x = 0.25 * ((1 - c2) + c2 * math.exp(-2 * rho))
    var_y = 0.25 * ((1 - c2) + c2 * math.exp(2 * rho))
    return var_x, var_y


# Transmitted channel: the squeezed quadrature starts at the incident level
# (l = 0 is no slab) and relaxes to vacuum as absorption takes over.  The
# oscillation is extinguished beyond a computable thickness.
model_t = ConstantIndex(1.5, 0.005)
l_stop = thickness_of_last_extremum(SlabSpec(1e-6, model_t), omega)
ls = np.linspace(2e-9, 20e-6, 20000)
var_x, var_y = variances(model_t, ls, "T")

fig, ax = plt.subplots(figsize=(8, 5))
ax.plot(ls * 1e6, var_x, lw=0.6)
ax.axhline(sq_floor, color="gray", ls="--", label="incident squeezed variance")
ax.axhline(sql, color="black", ls="--", label="standard quantum limit 1/4")
ax.axvline(l_stop * 1e6, color="red", ls=":", label=f"last extremum {l_stop * 1e6:.1f} um")
ax.set_xlabel("half-thickness l (um)")
ax.set_ylabel("transmitted squeezed variance")
ax.legend(loc="lower right", fontsize=8)
inset = fig.add_axes([0.55, 0.55, 0.33, 0.3])
inset.plot(ls * 1e6, var_y, lw=0.4, color="tab:orange")
inset.set_title("anti-squeezed quadrature", fontsize=8)
fig.savefig(OUT / "transmitted_variance_vs_thickness.png", dpi=150)
print("wrote", OUT / "transmitted_variance_vs_thickness.png")

# Reflected channel with kappa = 0.0075: starts at vacuum (nothing reflects
# off an absent slab) and converges to the thick-slab limits.
model_r = ConstantIndex(1.5, 0.0075)
lim_x, lim_y = asymptotic_reflected_limits(model_r, rho)
ls = np.linspace(2e-8, 200e-6, 20000)
var_x, var_y = variances(model_r, ls, "R")

fig, ax = plt.subplots(figsize=(8, 5))
ax.plot(ls * 1e6, var_x, lw=0.6)
ax.axhline(lim_x, color="purple", ls="-", lw=1, label=f"ultimate limit {lim_x:.3f}")
ax.axhline(sql, color="black", ls="--", label="standard quantum limit 1/4")
ax.set_xlabel("half-thickness l (um)")
ax.set_ylabel("reflected squeezed variance")
ax.legend(loc="upper right", fontsize=8)
inset = fig.add_axes([0.55, 0.3, 0.33, 0.3])
inset.plot(ls * 1e6, var_y, lw=0.4, color="tab:orange")
inset.axhline(lim_y, color="purple", lw=1)
inset.set_title(f"anti-squeezed, limit {lim_y:.3f}", fontsize=8)
fig.savefig(OUT / "reflected_variance_vs_thickness.png", dpi=150)
print("wrote", OUT / "reflected_variance_vs_thickness.png")
print(f"thick-slab reflected limits: var_x -> {lim_x:.4f}, var_y -> {lim_y:.4f}")
