"""Simulator and analysis toolkit for an entanglement-assisted two-bit
communication game over a shared pair alpha|00> + beta|11>."""

__version__ = "0.1.0"

from .state import (
    OutcomePair,
    SchmidtPair,
    TwoQubitState,
    apply_local_rotations,
    as_state,
    epr_state,
    make_shared_state,
    measurement_distribution,
    rotate_qubit,
    sample_outcome,
)
from .protocol import (
    AngleSet,
    InputPair,
    MonteCarloResult,
    PerInputReport,
    Transcript,
    angle_for,
    closed_form_p,
    exact_success_probability,
    monte_carlo,
    per_input_success,
    run_once,
    target_function,
)
from .optimize import AngleSolution, optimal_closed_form, optimal_numeric, p_max_curve
from .classical import (
    DeterministicProtocol,
    EnumerationResult,
    baseline_protocol,
    enumerate_best,
    evaluate_protocol,
    run_protocol,
)
from .concentration import (
    ConcentrationOutcome,
    concentration_strategy_value,
    concentration_success_probability,
    draw_concentration,
    simulate_concentration_run,
)
