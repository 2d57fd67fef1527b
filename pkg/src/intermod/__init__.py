"""Interference-modulation link analysis library.

Beamforming-weight design for OOK-over-interference multiple access,
analytic energy-detector performance, waveform-level Monte Carlo
validation, and sum-rate optimization.
"""

__version__ = "0.1.0"

from .channel import (
    ChannelPair,
    IllConditionedCorrelationError,
    inner_product,
    make_correlated_pair,
)
from .detector import (
    DetectorModel,
    OfdmStats,
    energy_pdf,
    error_probability,
    mixture_energy_pdf,
    optimal_threshold,
    received_power,
    regularized_lower_gamma,
)
from .simulator import (
    BerResult,
    ScenarioConfig,
    detect_ook_bit,
    generate_ofdm_samples,
    run_ber,
    transmit_ook_bit,
)
from .sumrate import SumRatePoint, default_alpha_grid, find_n_alpha, sweep_sum_rate
from .weights import (
    TargetGains,
    WeightSet,
    build_weight_set,
    closed_form_norms,
    paper_closed_form_norms,
    phase_align_targets,
    solve_min_norm,
)

__all__ = [
    "BerResult",
    "ChannelPair",
    "DetectorModel",
    "IllConditionedCorrelationError",
    "OfdmStats",
    "ScenarioConfig",
    "SumRatePoint",
    "TargetGains",
    "WeightSet",
    "build_weight_set",
    "closed_form_norms",
    "default_alpha_grid",
    "detect_ook_bit",
    "energy_pdf",
    "error_probability",
    "find_n_alpha",
    "generate_ofdm_samples",
    "inner_product",
    "make_correlated_pair",
    "mixture_energy_pdf",
    "optimal_threshold",
    "paper_closed_form_norms",
    "phase_align_targets",
    "received_power",
    "regularized_lower_gamma",
    "run_ber",
    "solve_min_norm",
    "sweep_sum_rate",
    "transmit_ook_bit",
]
