"""Support calculus for time spectra of 1-D fields, admissibility checks
for algebraic nonlinearities, and reference integrators for the model
equations the calculus is tested against."""

from .errors import (
    ConfigError,
    DivergenceError,
    GridError,
    NoSolitaryWaveError,
    StabilityError,
    UnsupportedVariantError,
)
from .fields import (
    AxisGrid,
    SpaceFreqField,
    SpaceTimeField,
    SupportMask,
    dual_frequency_grid,
    field_norm,
    inverse_time_fourier,
    sharp,
    support_mask,
    time_fourier,
)
from .support import (
    BoundProfile,
    CheckReport,
    SideReport,
    SigmaSet,
    add_profiles,
    lower_bound_profile,
    lower_envelope,
    moment_multiply,
    mollifier_column,
    mollify,
    partial_convolution,
    sigma_projection,
    titchmarsh_check,
    upper_bound_profile,
    upper_envelope,
)
from .intseq import IntSeq, conv, intseq
from .nonlinearity import (
    AlgebraicCertificate,
    CustomAlpha,
    Poly,
    PolynomialAlpha,
    RationalAlpha,
    RootAlpha,
    Verdict,
    admissible,
    certificate_residual,
    certificate_synthesize,
    growth_exponent,
    poly,
)
from .evolve import (
    ModelSpec,
    SimRecord,
    analytic_record,
    energy,
    mass,
    nlkg_cfl_limit,
    nlkg_step,
    nls_step,
    nonlinear_potential,
    run_simulation,
    wavenumbers,
)
from .waves import (
    SolitaryWaveProfile,
    akhmediev_field,
    breather_field,
    solitary_profile,
)
from .spectrum import (
    BROAD,
    SINGLE_FREQUENCY,
    SpectrumReport,
    harmonic_peaks,
    modulus_drift,
    single_frequency_test,
    support_compactness,
    time_spectrum,
)
from .io import (
    field_from_doc,
    field_to_csv,
    field_to_doc,
    load_field,
    load_record,
    profile_to_csv,
    save_field,
    save_record,
)
from .kernels import backend_name
from .fieldgen import (
    piecewise_box_pair,
    random_partition,
    spike_plus_box_field,
    step_delta_field,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicCertificate",
    "AxisGrid",
    "BoundProfile",
    "BROAD",
    "CheckReport",
    "ConfigError",
    "CustomAlpha",
    "DivergenceError",
    "GridError",
    "IntSeq",
    "ModelSpec",
    "NoSolitaryWaveError",
    "Poly",
    "PolynomialAlpha",
    "RationalAlpha",
    "RootAlpha",
    "SideReport",
    "SigmaSet",
    "SimRecord",
    "SINGLE_FREQUENCY",
    "SolitaryWaveProfile",
    "SpaceFreqField",
    "SpaceTimeField",
    "SpectrumReport",
    "StabilityError",
    "SupportMask",
    "UnsupportedVariantError",
    "Verdict",
    "add_profiles",
    "admissible",
    "akhmediev_field",
    "analytic_record",
    "backend_name",
    "piecewise_box_pair",
    "random_partition",
    "spike_plus_box_field",
    "step_delta_field",
    "breather_field",
    "certificate_residual",
    "certificate_synthesize",
    "conv",
    "dual_frequency_grid",
    "energy",
    "field_from_doc",
    "field_norm",
    "field_to_csv",
    "field_to_doc",
    "growth_exponent",
    "harmonic_peaks",
    "intseq",
    "inverse_time_fourier",
    "load_field",
    "load_record",
    "lower_bound_profile",
    "lower_envelope",
    "mass",
    "modulus_drift",
    "mollifier_column",
    "mollify",
    "moment_multiply",
    "nlkg_cfl_limit",
    "nlkg_step",
    "nls_step",
    "nonlinear_potential",
    "partial_convolution",
    "poly",
    "profile_to_csv",
    "run_simulation",
    "save_field",
    "save_record",
    "sharp",
    "sigma_projection",
    "single_frequency_test",
    "solitary_profile",
    "support_compactness",
    "support_mask",
    "time_fourier",
    "time_spectrum",
    "titchmarsh_check",
    "upper_bound_profile",
    "upper_envelope",
    "wavenumbers",
]
