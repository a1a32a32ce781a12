"""Design and simulation toolkit for Brillouin acousto-optic quantum transducers.

Computes vacuum phonon-photon coupling rates from material and geometry
data, evaluates conversion through the frequency-domain scattering matrix
and time-domain Langevin dynamics, analyzes the spurious Stokes channel,
and produces device feasibility reports.  All internal physics is in
CGS-Gaussian units with angular frequencies (rad/s).
"""

from .coupling import (
    CouplingResult,
    ModeProfileSet,
    brillouin_frequency,
    overlap_integral,
    overlap_uniform,
    uniform_coupling,
    vacuum_coupling_rate,
)
from .design import (
    FeasibilityFlags,
    FeasibilityReport,
    dissipated_power_density,
    feasibility_report,
    min_pump_photons,
    report_to_json,
    report_to_text,
)
from .dynamics import DriveSignal, Trace, hybrid_eigenvalues, integrate
from .errors import (
    ConfigError,
    NonFiniteStateError,
    NumericalError,
    ParametricOscillationError,
    SingularResponseError,
    StepSizeError,
    TransducerError,
    UnknownMaterialError,
    ValidationError,
)
from .quantities import (
    HBAR,
    C_LIGHT,
    Material,
    RateSet,
    bundled_materials,
    material_lookup,
    pockels_to_gamma,
    q_to_rate,
)
from .scattering import (
    DetuningConfig,
    PumpStrength,
    ResonatorSpec,
    ScatterResult,
    SweepRow,
    efficiency_on_resonance,
    full_conversion_detunings,
    smatrix,
    sweep,
    sweep_to_csv,
    sweep_to_json,
)
from .stokes import (
    AmplifierResult,
    SidebandReport,
    oscillation_threshold,
    sideband_resolution,
    stokes_report,
    stokes_smatrix,
)

__version__ = "0.1.0"

__all__ = [
    "AmplifierResult",
    "ConfigError",
    "CouplingResult",
    "DetuningConfig",
    "DriveSignal",
    "FeasibilityFlags",
    "FeasibilityReport",
    "HBAR",
    "C_LIGHT",
    "Material",
    "ModeProfileSet",
    "NonFiniteStateError",
    "NumericalError",
    "ParametricOscillationError",
    "PumpStrength",
    "RateSet",
    "ResonatorSpec",
    "ScatterResult",
    "SidebandReport",
    "SingularResponseError",
    "StepSizeError",
    "SweepRow",
    "Trace",
    "TransducerError",
    "UnknownMaterialError",
    "ValidationError",
    "brillouin_frequency",
    "bundled_materials",
    "dissipated_power_density",
    "efficiency_on_resonance",
    "feasibility_report",
    "full_conversion_detunings",
    "hybrid_eigenvalues",
    "integrate",
    "material_lookup",
    "min_pump_photons",
    "oscillation_threshold",
    "overlap_integral",
    "overlap_uniform",
    "pockels_to_gamma",
    "q_to_rate",
    "report_to_json",
    "report_to_text",
    "sideband_resolution",
    "smatrix",
    "stokes_report",
    "stokes_smatrix",
    "sweep",
    "sweep_to_csv",
    "sweep_to_json",
    "uniform_coupling",
    "vacuum_coupling_rate",
]
