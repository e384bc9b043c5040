"""Wave/particle/entanglement triads of two-qubit pure states and their
quaternionic stereographic geometry on the 4-sphere and the unit ball."""

from .classify import (
    DEFAULT_CLASSIFY_TOL,
    SchmidtForm,
    StratumLabel,
    classify,
    schmidt_decompose,
    shell_radius,
)
from .dataset import DATASET_COLUMNS, emit_dataset, state_record
from .projection import (
    BallPoint,
    QuaternionSpinor,
    S4Point,
    ball_point,
    coords_from_state,
    inverse_stereo,
    quaternify,
    stereo_project,
    triad_from_coords,
)
from .quaternion import (
    E1,
    E2,
    E3,
    INFINITY,
    ONE,
    ExtendedQuaternion,
    Quaternion,
    is_infinite,
)
from .sampling import (
    SampleSpec,
    bloch_grid_states,
    fixed_concurrence_state,
    haar_state,
    sample,
    sample_fixed_concurrence,
    sample_haar,
    sample_separable,
    separable_state,
)
from .states import (
    BlochAngles,
    CorrelatedState,
    DensityMatrix2,
    DualityTriad,
    TwoQubitState,
    bloch_state,
    concurrence,
    distinguishability,
    embed_correlated,
    fringe_extrema,
    make_correlated,
    make_state,
    purity,
    reduced_density_photon,
    reduced_density_second,
    second_subsystem_triad,
    triad,
    visibility,
)
from .verify import (
    CheckResult,
    VerificationReport,
    concurrence_bilinear,
    verify_suite,
)

__version__ = "0.1.0"

__all__ = [
    "BallPoint",
    "BlochAngles",
    "CheckResult",
    "CorrelatedState",
    "DATASET_COLUMNS",
    "DEFAULT_CLASSIFY_TOL",
    "DensityMatrix2",
    "DualityTriad",
    "E1",
    "E2",
    "E3",
    "ExtendedQuaternion",
    "INFINITY",
    "ONE",
    "Quaternion",
    "QuaternionSpinor",
    "S4Point",
    "SampleSpec",
    "SchmidtForm",
    "StratumLabel",
    "TwoQubitState",
    "VerificationReport",
    "ball_point",
    "bloch_grid_states",
    "bloch_state",
    "classify",
    "concurrence",
    "concurrence_bilinear",
    "coords_from_state",
    "distinguishability",
    "embed_correlated",
    "emit_dataset",
    "fixed_concurrence_state",
    "fringe_extrema",
    "haar_state",
    "inverse_stereo",
    "is_infinite",
    "make_correlated",
    "make_state",
    "purity",
    "quaternify",
    "reduced_density_photon",
    "reduced_density_second",
    "sample",
    "sample_fixed_concurrence",
    "sample_haar",
    "sample_separable",
    "schmidt_decompose",
    "second_subsystem_triad",
    "separable_state",
    "shell_radius",
    "state_record",
    "stereo_project",
    "triad",
    "triad_from_coords",
    "verify_suite",
    "visibility",
]
