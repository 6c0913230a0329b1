"""Wavelet maps of real signals, their inversion, and two-level states built from map coefficients."""

from .errors import (
    ConvergenceError,
    DegeneracyError,
    DomainError,
    EvaluationError,
    ExtentError,
    GridError,
    MapIndexError,
    NonNormalizableError,
    ParseError,
    PeakCountError,
    SizeError,
    SpacingError,
    UndefinedMetricError,
    UsageError,
    WaveQubitError,
)
from .qubit_encoding import (
    MapPoint,
    WaveletQubit,
    encode_qubit,
    load_qubit_json,
    normalize,
    qubit_norm,
    save_qubit_json,
    select_peaks,
    versor_waveform,
)
from .signal_core import BurstSpec, TimeSeries, load_csv, save_csv, superpose, synth_burst
from .two_qubit_relations import (
    BellClassification,
    RelationCoefficients,
    TwoQubitState,
    classify_bell_condition,
    entanglement_determinant,
    is_separated,
    relate_general,
    relate_product,
)
from .wavelet_engine import (
    AnalyzingWavelet,
    DualBasisFunction,
    FrequencyGrid,
    WaveletMap,
    admissibility_constant,
    delta_kernel,
    dual_function,
    evaluate_wavelet,
    forward_cwt,
    get_wavelet,
    reconstruct,
    reconstruction_error,
    shift_grid,
)

__version__ = "0.1.0"
