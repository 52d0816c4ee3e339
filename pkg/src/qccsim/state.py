"""Real-valued two-qubit statevector algebra.

The shared resource throughout this package is a qubit pair in the state
alpha|00> + beta|11> with real amplitudes, alpha^2 + beta^2 = 1.  Each party
manipulates its own qubit only with the planar rotation

    R(t) = [[cos t, -sin t],
            [sin t,  cos t]]

and then measures in the standard basis.  Conventions fixed here and relied
on by every other module:

* basis order |00>, |01>, |10>, |11>;
* the first tensor slot is Alice's qubit, the second is Bob's;
* R(t)|0> = cos(t)|0> + sin(t)|1> (the first column of the matrix above);
* the canonical shared states are parameterized by an angle chi in
  [-pi/4, 0] with alpha = cos(chi), beta = sin(chi), so alpha >= |beta|
  and beta <= 0.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

# Rotation angles are plain radians; rotations are periodic so no range is
# imposed, but values must be finite.
RotationAngle = float

NORM_TOL = 1e-12
CHI_DOMAIN_TOL = 1e-12
EPR_CHI = -math.pi / 4


class SchmidtPair(NamedTuple):
    """Amplitudes (alpha, beta) of the shared state alpha|00> + beta|11>.

    ``chi`` is the angle parameterization with alpha = cos(chi) and
    beta = sin(chi); it is carried along for reporting.
    """

    alpha: float
    beta: float
    chi: float

    @classmethod
    def from_amplitudes(cls, alpha: float, beta: float) -> "SchmidtPair":
        """Build a pair from raw amplitudes without the canonical-domain check.

        Accepts any normalized (alpha, beta), including beta > 0 and
        |beta| > |alpha|; used for property tests and exploration.  Raises
        ValueError if alpha^2 + beta^2 deviates from 1 by more than NORM_TOL.
        """
        norm = alpha * alpha + beta * beta
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"amplitudes not normalized: alpha^2+beta^2 = {norm!r}")
        return cls(alpha, beta, math.atan2(beta, alpha))


class TwoQubitState(NamedTuple):
    """Four real amplitudes over |00>, |01>, |10>, |11> (Alice first)."""

    c00: float
    c01: float
    c10: float
    c11: float


class OutcomePair(NamedTuple):
    """Measured bits: ``a`` from Alice's qubit, ``b`` from Bob's."""

    a: int
    b: int


def make_shared_state(chi: float) -> SchmidtPair:
    """Construct the canonical shared state for an angle chi in [-pi/4, 0].

    Returns (cos chi, sin chi, chi).  chi = 0 is the unentangled product
    state |00>; chi = -pi/4 is the maximally entangled endpoint.  Values
    outside the canonical interval (beyond a 1e-12 tolerance) raise
    ValueError rather than being clamped or normalized.
    """
    if not (-math.pi / 4 - CHI_DOMAIN_TOL <= chi <= CHI_DOMAIN_TOL):
        raise ValueError(f"chi = {chi!r} outside the canonical domain [-pi/4, 0]")
    return SchmidtPair(math.cos(chi), math.sin(chi), chi)


def epr_state() -> SchmidtPair:
    """The maximally entangled pair (|00> - |11>)/sqrt(2), i.e. chi = -pi/4."""
    s = math.sqrt(0.5)
    return SchmidtPair(s, -s, EPR_CHI)


def as_state(pair: SchmidtPair) -> TwoQubitState:
    """Expand a SchmidtPair into its four-amplitude statevector."""
    return TwoQubitState(pair.alpha, 0.0, 0.0, pair.beta)


def rotate_qubit(angle: RotationAngle, bit_in: int) -> tuple[float, float]:
    """Column of R(angle) for a basis input: the image amplitudes (amp0, amp1).

    bit 0 maps to (cos, sin), bit 1 to (-sin, cos).
    """
    c, s = math.cos(angle), math.sin(angle)
    if bit_in == 0:
        return (c, s)
    return (-s, c)


def apply_local_rotations(
    state: TwoQubitState, chi1: RotationAngle, chi2: RotationAngle
) -> TwoQubitState:
    """Apply R(chi1) on Alice's qubit and R(chi2) on Bob's.

    Equivalent to the Kronecker product R(chi1) x R(chi2) acting on the
    amplitude vector; normalization is preserved.
    """
    c1, s1 = math.cos(chi1), math.sin(chi1)
    c2, s2 = math.cos(chi2), math.sin(chi2)
    # Bob's rotation first (acts within each row of the 2x2 coefficient grid),
    # then Alice's (mixes the rows).
    b00 = state.c00 * c2 - state.c01 * s2
    b01 = state.c00 * s2 + state.c01 * c2
    b10 = state.c10 * c2 - state.c11 * s2
    b11 = state.c10 * s2 + state.c11 * c2
    return TwoQubitState(
        b00 * c1 - b10 * s1,
        b01 * c1 - b11 * s1,
        b00 * s1 + b10 * c1,
        b01 * s1 + b11 * c1,
    )


def measurement_distribution(state: TwoQubitState) -> tuple[float, float, float, float]:
    """Standard-basis outcome probabilities (p00, p01, p10, p11)."""
    return (
        state.c00 * state.c00,
        state.c01 * state.c01,
        state.c10 * state.c10,
        state.c11 * state.c11,
    )


def sample_outcome(state: TwoQubitState, rng: np.random.Generator) -> OutcomePair:
    """Draw one joint measurement outcome by the Born rule.

    Consumes exactly one uniform variate from ``rng`` per call and inverts
    the CDF over the four outcomes in basis order, so outcome streams are
    bit-reproducible for a given seeded generator.
    """
    u = rng.random()
    acc = 0.0
    for k, p in enumerate(measurement_distribution(state)):
        acc += p
        if u < acc:
            return OutcomePair(k >> 1, k & 1)
    return OutcomePair(1, 1)  # u landed in the roundoff sliver above the last edge
