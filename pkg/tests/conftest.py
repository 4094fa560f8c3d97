import math

import pytest

from squeezeslab.constants import SPEED_OF_LIGHT as C
from squeezeslab.materials import ConstantIndex
from squeezeslab.slab import SlabSpec

WAVELENGTH_IR = 1064e-9
OMEGA_IR = 2.0 * math.pi * C / WAVELENGTH_IR


@pytest.fixture
def lossless_glass():
    return ConstantIndex(1.5, 0.0)


@pytest.fixture
def lossy_glass():
    return ConstantIndex(1.5, 0.005)


@pytest.fixture
def eighth_wave_slab(lossless_glass):
    """4 eta w l / c = pi: the anti-resonant thickness."""
    return SlabSpec(WAVELENGTH_IR / (8 * 1.5), lossless_glass)
