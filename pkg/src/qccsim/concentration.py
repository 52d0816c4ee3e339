"""Concentrate-then-play comparison strategy.

Instead of playing directly on the partially entangled pair, first distill
it to the maximally entangled state, which succeeds with probability
2*beta^2.  On success the parties play the optimal entangled strategy
(worth cos^2(pi/8)); on failure they are left with an effectively classical
resource and fall back to the 3/4 baseline.  The expected value is affine
in beta^2 and sits below the direct strategy everywhere except at the two
endpoints beta^2 = 0 and beta^2 = 1/2, where the curves meet.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .classical import baseline_protocol, run_protocol
from .protocol import AngleSet, InputPair, Transcript, run_once, target_function
from .state import SchmidtPair, epr_state

EPR_STRATEGY_VALUE = math.cos(math.pi / 8) ** 2
CLASSICAL_BASELINE_VALUE = 0.75
EPR_ANGLES = AngleSet(-math.pi / 16, 3.0 * math.pi / 16)


@dataclass(frozen=True)
class ConcentrationOutcome:
    succeeded: bool
    probability_of_success: float
    resulting_strategy_value: float


def concentration_success_probability(pair: SchmidtPair) -> float:
    """Probability 2*beta^2 of distilling the pair to the maximal state.

    Clipped into [0, 1] to absorb roundoff at beta^2 = 1/2.
    """
    return min(1.0, 2.0 * pair.beta * pair.beta)


def concentration_strategy_value(pair: SchmidtPair) -> float:
    """Expected success probability of concentrate-then-play.

    3/4 + (2 cos^2(pi/8) - 3/2) * beta^2, the mixture of the entangled value
    on distillation success and the classical baseline on failure.
    """
    beta_sq = pair.beta * pair.beta
    return CLASSICAL_BASELINE_VALUE + (2.0 * EPR_STRATEGY_VALUE - 1.5) * beta_sq


def draw_concentration(pair: SchmidtPair, rng: np.random.Generator) -> ConcentrationOutcome:
    """Flip the distillation coin; consumes one uniform draw."""
    p = concentration_success_probability(pair)
    succeeded = rng.random() < p
    return ConcentrationOutcome(
        succeeded=succeeded,
        probability_of_success=p,
        resulting_strategy_value=EPR_STRATEGY_VALUE if succeeded else CLASSICAL_BASELINE_VALUE,
    )


def _baseline_transcript(inputs: InputPair) -> Transcript:
    # The baseline exchanges the raw high bits, i.e. a = b = 0 in transcript
    # terms (messages are a XOR x1 and b XOR y1).
    run = run_protocol(baseline_protocol(), inputs.x, inputs.y)
    want = target_function(inputs)
    return Transcript(
        inputs=inputs,
        a=run.msg_alice ^ inputs.x1,
        b=run.msg_bob ^ inputs.y1,
        msg_alice=run.msg_alice,
        msg_bob=run.msg_bob,
        out_alice=run.out_alice,
        out_bob=run.out_bob,
        success=(run.out_alice == want and run.out_bob == want),
    )


def simulate_concentration_run(
    pair: SchmidtPair, inputs: InputPair, rng: np.random.Generator
) -> Transcript:
    """One sampled round of concentrate-then-play.

    Draws the distillation coin (one uniform); on success plays the optimal
    entangled strategy on the maximal pair (one more draw), on failure runs
    the deterministic classical baseline (no further draws).
    """
    if draw_concentration(pair, rng).succeeded:
        return run_once(epr_state(), EPR_ANGLES, inputs, rng)
    return _baseline_transcript(inputs)
