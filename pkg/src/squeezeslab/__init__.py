"""squeezeslab: squeezed light scattered by a dispersive, absorbing slab.

Library layout:

* :mod:`squeezeslab.materials` -- dielectric models and n(omega)
* :mod:`squeezeslab.slab` -- scattering coefficients, absorptance, thermal noise
* :mod:`squeezeslab.singlemode` -- output quadrature variances and their
  thickness extrema
* :mod:`squeezeslab.continuum` -- pulse spectra and narrow-band descriptors
* :mod:`squeezeslab.poynting` -- space-time energy flow
* :mod:`squeezeslab.numerics` -- root finding, scanning and finite differences
* :mod:`squeezeslab.cli` -- the ``squeezeslab`` command
"""

__version__ = "0.1.0"

from .materials import ConstantIndex, DielectricModel, LorentzOscillator, refractive_index
from .slab import (
    ScatterCoefficients,
    SlabSpec,
    absorptance,
    half_phase,
    homogeneous_limit,
    noise_moment,
    scatter_coefficients,
    slab_amplitudes,
    thermal_occupation,
    unwrap_half_phases,
)
from .singlemode import (
    Extremum,
    QuadratureVariances,
    SqueezeParams,
    asymptotic_reflected_limits,
    extremum_residual,
    find_extrema,
    reflected_variances,
    thickness_of_last_extremum,
    transmitted_variances,
    uncertainty_product_lossless,
    variance_vs_angle,
)
from .continuum import (
    GaussianPulseSpec,
    NarrowbandCoefficients,
    PulseParams,
    channel_amplitude,
    continuum_quadrature_variance,
    energy_weighted_fractions,
    incident_spectrum,
    incident_squeeze_profile,
    measurable_squeeze_exponent,
    narrowband_coefficients,
    output_pulse_params,
    scattered_spectrum_exact,
    scattered_spectrum_narrowband,
    squeezing_spectrum,
)
from .poynting import (
    EnvelopeParams,
    ParsevalResult,
    PoyntingSample,
    coherent_poynting,
    free_space_peak,
    narrowband_envelope,
    parseval_check,
    poynting_sample,
    pulse_train,
    squeezed_flux,
    thermal_flux,
)
from .errors import (
    AccuracyError,
    NoExtremumError,
    RegimeError,
    SingularityError,
    SqueezeSlabError,
)

__all__ = [name for name in dir() if not name.startswith("_")]
