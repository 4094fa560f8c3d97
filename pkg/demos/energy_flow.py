"""Space-time energy flow: envelopes, bookkeeping and echo trains.

Three regimes of the coherent energy flux:

1. long pulse: a single Gaussian envelope, delayed and reshaped by amounts
   predicted in closed form;
2. energy bookkeeping: the time-integrated flux equals the
   frequency-integrated spectrum channel by channel, and the lossy deficit
   equals the absorptance-weighted incident spectrum;
3. short pulse: the transmitted light arrives as a train of echoes spaced
   by the internal round trip 4 l eta, each 1/625 the height of the last
   for eta = 1.5.

Run from the repository root:  python demos/energy_flow.py
"""

import math
import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from squeezeslab import (
    ConstantIndex,
    GaussianPulseSpec,
    SlabSpec,
    coherent_poynting,
    free_space_peak,
    narrowband_envelope,
    parseval_check,
    pulse_train,
)

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

C = 299792458.0
wavelength = 633e-9
omega_c = 2 * math.pi * C / wavelength

# --- 1. long-pulse envelope ------------------------------------------------
l = 2.625 * wavelength
slab = SlabSpec(l, ConstantIndex(1.5, 0.002))
pulse = GaussianPulseSpec(omega_c=omega_c, length=80 * l, rho_in=1.5, alpha0=1.0)
s = np.linspace(-3 * pulse.length, 3 * pulse.length, 1200)
s0 = free_space_peak(pulse)

fig, ax = plt.subplots(figsize=(7, 4.5))
for channel, color in (("T", "tab:blue"), ("R", "tab:red")):
    direct = coherent_poynting(slab, pulse, s, 0.0, channel)
    env = narrowband_envelope(slab, pulse, channel)
    model = s0 * env.amplitude * np.exp(-2 * (s + env.shift_x) ** 2 / env.length_sq)
    ax.plot(s * 1e6, direct / s0, color=color, label=f"{channel} direct integral")
    ax.plot(s * 1e6, model / s0, "--", color=color, lw=1, label=f"{channel} Gaussian model")
ax.set_xlabel("x - c t (um)")
ax.set_ylabel("flux / free-space peak")
ax.legend(fontsize=8)
ax.set_title("Long pulse: one envelope, closed-form delay and reshaping")
fig.savefig(OUT / "envelopes.png", dpi=150)
print("wrote", OUT / "envelopes.png")

# --- 2. energy bookkeeping ---------------------------------------------------
e_t = parseval_check(slab, pulse, "T")
e_r = parseval_check(slab, pulse, "R")
vac = SlabSpec(0.0, slab.model)
e_in = parseval_check(vac, pulse, "T")
print(f"time vs frequency integrals: T {e_t.rel_err:.1e}, R {e_r.rel_err:.1e}")
print(
    f"incident {e_in.lhs:.4e}, transmitted {e_t.lhs:.4e}, reflected {e_r.lhs:.4e} J/m^2; "
    f"absorbed fraction {(e_in.lhs - e_t.lhs - e_r.lhs) / e_in.lhs:.4f}"
)

# --- 3. short-pulse echo train ----------------------------------------------
l = 10e-6
slab = SlabSpec(l, ConstantIndex(1.5, 0.002))
short = GaussianPulseSpec(omega_c=omega_c, length=2 * l * 1.5 / 10, rho_in=1.0, alpha0=1.0)
s = np.linspace(-220e-6, 30e-6, 3000)
train = pulse_train(slab, short, s, 0.0)
direct = coherent_poynting(slab, short, s, 0.0, "T", nodes_per_interval=256)

fig, ax = plt.subplots(figsize=(7, 4.5))
ax.semilogy(s * 1e6, np.maximum(direct, 1e-12 * direct.max()), label="direct integral")
ax.semilogy(s * 1e6, np.maximum(train, 1e-12 * train.max()), "--", label="echo-train model")
ax.set_ylim(direct.max() * 1e-9, direct.max() * 3)
ax.set_xlabel("x - c t (um)")
ax.set_ylabel("transmitted flux (W/m^2)")
ax.legend()
ax.set_title(f"Short pulse: echoes every 4 l eta = {4 * l * 1.5 * 1e6:.0f} um")
fig.savefig(OUT / "pulse_train.png", dpi=150)
print("wrote", OUT / "pulse_train.png")
