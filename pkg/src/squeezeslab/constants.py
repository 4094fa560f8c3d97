"""Physical constants (CODATA 2018), SI units."""

SPEED_OF_LIGHT = 299_792_458.0
"""Speed of light in vacuum, m/s (exact)."""

HBAR = 1.054_571_817e-34
"""Reduced Planck constant, J*s."""

BOLTZMANN = 1.380_649e-23
"""Boltzmann constant, J/K (exact)."""

VACUUM_PERMITTIVITY = 8.854_187_8128e-12
"""Electric constant epsilon_0, F/m."""
