"""The entangled two-bit communication game: exact values and sampled runs.

Alice holds x = x1x0 and Bob holds y = y1y0 (two bits each); after one
classical bit in each direction both parties must output

    f(x, y) = x1 XOR y1 XOR (x0 AND y0).

Strategy: the low bit picks which rotation each party applies to its half of
the shared pair (phi1 for a low bit of 0, phi2 for 1), the rotated qubits are
measured to give bits a and b, and the parties exchange a XOR x1 and
b XOR y1.  XOR-ing the two exchanged bits yields x1 XOR y1 XOR (a XOR b) on
both sides, which equals f exactly when the outcome parity a XOR b matches
x0 AND y0.  High bits therefore cancel out of the success probability; only
(x0, y0) matters.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .state import (
    RotationAngle,
    SchmidtPair,
    apply_local_rotations,
    as_state,
    measurement_distribution,
    sample_outcome,
)


class InputPair(NamedTuple):
    """Classical inputs x, y, each in {0, 1, 2, 3} with bits (high, low)."""

    x: int
    y: int

    @property
    def x1(self) -> int:
        return (self.x >> 1) & 1

    @property
    def x0(self) -> int:
        return self.x & 1

    @property
    def y1(self) -> int:
        return (self.y >> 1) & 1

    @property
    def y0(self) -> int:
        return self.y & 1


class AngleSet(NamedTuple):
    """Strategy angles: phi1 when a party's low bit is 0, phi2 when it is 1."""

    phi1: float
    phi2: float


class Transcript(NamedTuple):
    """One protocol execution.

    ``msg_alice`` = a XOR x1 and ``msg_bob`` = b XOR y1 are the exchanged
    bits; both outputs equal msg_alice XOR msg_bob, so out_alice == out_bob
    always holds here.
    """

    inputs: InputPair
    a: int
    b: int
    msg_alice: int
    msg_bob: int
    out_alice: int
    out_bob: int
    success: bool


class PerInputReport(NamedTuple):
    """Success probability per (x0, y0) input pair plus their uniform mean."""

    p00: float
    p01: float
    p10: float
    p11: float
    total: float


class MonteCarloResult(NamedTuple):
    """Sampled success estimate with its binomial standard error.

    ``per_input_counts`` maps (x0, y0) to (successes, trials drawn).
    """

    estimate: float
    std_error: float
    per_input_counts: dict[tuple[int, int], tuple[int, int]]


def target_function(inputs: InputPair) -> int:
    """f(x, y) = x1 XOR y1 XOR (x0 AND y0)."""
    return inputs.x1 ^ inputs.y1 ^ (inputs.x0 & inputs.y0)


def angle_for(low_bit: int, angles: AngleSet) -> RotationAngle:
    """Rotation chosen by a party: phi1 for low bit 0, phi2 for low bit 1."""
    return angles.phi1 if low_bit == 0 else angles.phi2


def per_input_success(pair: SchmidtPair, angles: AngleSet, x0: int, y0: int) -> float:
    """Exact success probability for one (x0, y0) input combination.

    The rotated state is measured in the standard basis; the run succeeds
    when the outcome parity a XOR b equals x0 AND y0, i.e. on the even-parity
    outcomes {00, 11} for x0 AND y0 = 0 and the odd ones {01, 10} otherwise.
    """
    rotated = apply_local_rotations(as_state(pair), angle_for(x0, angles), angle_for(y0, angles))
    p00, p01, p10, p11 = measurement_distribution(rotated)
    if x0 & y0:
        return p01 + p10
    return p00 + p11


def exact_success_probability(pair: SchmidtPair, angles: AngleSet) -> PerInputReport:
    """All four per-input success probabilities and their uniform average.

    Inputs are uniform, so (x0, y0) is uniform over the four combinations;
    the high bits never affect success (they cancel in the XOR).
    """
    p00 = per_input_success(pair, angles, 0, 0)
    p01 = per_input_success(pair, angles, 0, 1)
    p10 = per_input_success(pair, angles, 1, 0)
    p11 = per_input_success(pair, angles, 1, 1)
    return PerInputReport(p00, p01, p10, p11, (p00 + p01 + p10 + p11) / 4.0)


def total_success_closed_form(ab, phi1, phi2):
    """Closed-form total success probability as a function of alpha*beta.

    Elementwise on numpy arrays, which is what the numeric optimizer scans.
    """
    return (
        0.5
        + 0.25 * np.cos(2.0 * phi1) * np.cos(2.0 * phi2)
        + 0.5 * ab * np.sin(2.0 * phi1) * np.sin(2.0 * phi2)
        + 0.125 * (1.0 - 2.0 * ab) * (np.sin(2.0 * phi2) ** 2 - np.sin(2.0 * phi1) ** 2)
    )


def closed_form_p(pair: SchmidtPair, angles: AngleSet) -> float:
    """Total success probability of the strategy, in closed form."""
    return float(total_success_closed_form(pair.alpha * pair.beta, angles.phi1, angles.phi2))


def run_once(
    pair: SchmidtPair,
    angles: AngleSet,
    inputs: InputPair,
    rng: np.random.Generator,
) -> Transcript:
    """Execute the protocol once; consumes one rng draw (the measurement)."""
    rotated = apply_local_rotations(
        as_state(pair), angle_for(inputs.x0, angles), angle_for(inputs.y0, angles)
    )
    outcome = sample_outcome(rotated, rng)
    msg_alice = outcome.a ^ inputs.x1
    msg_bob = outcome.b ^ inputs.y1
    out = msg_alice ^ msg_bob
    return Transcript(
        inputs=inputs,
        a=outcome.a,
        b=outcome.b,
        msg_alice=msg_alice,
        msg_bob=msg_bob,
        out_alice=out,
        out_bob=out,
        success=(out == target_function(inputs)),
    )


def monte_carlo(
    pair: SchmidtPair, angles: AngleSet, trials: int, seed: int
) -> MonteCarloResult:
    """Estimate the success probability from ``trials`` sampled executions.

    Inputs (x, y) are uniform over all 16 pairs each trial.  The run is
    sequential over a single generator seeded with ``seed`` and draws, in
    order: one (trials, 2) block of input words, then one block of ``trials``
    uniforms for the measurements -- fixed, so results are bit-reproducible.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    xy = rng.integers(0, 4, size=(trials, 2))
    us = rng.random(trials)

    # Only (x0, y0) selects the rotated state; precompute the four outcome CDFs.
    cdfs = np.empty((4, 4))
    for x0 in (0, 1):
        for y0 in (0, 1):
            rotated = apply_local_rotations(
                as_state(pair), angle_for(x0, angles), angle_for(y0, angles)
            )
            cdfs[2 * x0 + y0] = np.cumsum(measurement_distribution(rotated))

    x0s = xy[:, 0] & 1
    y0s = xy[:, 1] & 1
    combo = 2 * x0s + y0s
    outcomes = (us[:, None] >= cdfs[combo][:, :3]).sum(axis=1)
    parity = (outcomes >> 1) ^ (outcomes & 1)
    successes = parity == (x0s & y0s)

    counts: dict[tuple[int, int], tuple[int, int]] = {}
    for x0 in (0, 1):
        for y0 in (0, 1):
            sel = combo == 2 * x0 + y0
            counts[(x0, y0)] = (int(successes[sel].sum()), int(sel.sum()))

    estimate = float(successes.sum()) / trials
    std_error = math.sqrt(estimate * (1.0 - estimate) / trials)
    return MonteCarloResult(estimate, std_error, counts)
