"""Optimal strategy angles: closed-form solution plus a numeric cross-check.

``optimal_closed_form`` evaluates the analytic maximizer of the total
success probability; ``optimal_numeric`` maximizes the same objective by
exhaustive grid scan and local refinement and serves as its independent
verification oracle.  The two are compared on achieved value only -- the
objective has symmetries, so the maximizing angles need not coincide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .protocol import total_success_closed_form
from .state import SchmidtPair, make_shared_state

ACOS_CLAMP_TOL = 1e-9


@dataclass(frozen=True)
class AngleSolution:
    """A maximizer: angles, the auxiliary ratio ``t`` entering the arccos
    arguments (4*alpha*beta / sqrt(1 + 4*alpha^2*beta^2)), and the achieved
    success probability."""

    phi1: float
    phi2: float
    t: float
    p_max: float


def _clamped_acos(x: float) -> float:
    if x > 1.0:
        if x > 1.0 + ACOS_CLAMP_TOL:
            raise ValueError(f"arccos argument {x!r} out of range")
        x = 1.0
    elif x < -1.0:
        if x < -1.0 - ACOS_CLAMP_TOL:
            raise ValueError(f"arccos argument {x!r} out of range")
        x = -1.0
    return math.acos(x)


def _aux_ratio(ab: float) -> float:
    return 4.0 * ab / math.sqrt(1.0 + 4.0 * ab * ab)


def optimal_closed_form(pair: SchmidtPair) -> AngleSolution:
    """Analytic optimum of the success probability for alpha*beta <= 0.

    p_max = 1/2 + (1/4) sqrt(1 + 4 alpha^2 beta^2), attained at
    phi1 = -(1/4) arccos((1 + 2ab - t) / (1 - 2ab)) and
    phi2 =  (1/4) arccos((1 + 2ab + t) / (1 - 2ab)) with ab = alpha*beta.
    Arguments drifting past +-1 by at most 1e-9 are clamped; pairs with
    alpha*beta > 0 are rejected (use optimal_numeric to explore those).
    """
    ab = pair.alpha * pair.beta
    if ab > 0.0:
        raise ValueError("closed-form optimum requires alpha*beta <= 0")
    root = math.sqrt(1.0 + 4.0 * ab * ab)
    t = 4.0 * ab / root
    den = 1.0 - 2.0 * ab
    phi1 = -0.25 * _clamped_acos((1.0 + 2.0 * ab - t) / den)
    phi2 = 0.25 * _clamped_acos((1.0 + 2.0 * ab + t) / den)
    return AngleSolution(phi1, phi2, t, 0.5 + 0.25 * root)


def optimal_numeric(
    pair: SchmidtPair, grid_steps: int = 256, refine_iters: int = 40
) -> AngleSolution:
    """Maximize the closed-form success probability by search.

    Scans a grid_steps x grid_steps grid over [-pi/2, pi/2)^2 (the objective
    has period pi in each angle), then refines the best grid point by compass
    search with a halving step.  Deterministic: grid ties resolve to the
    lexicographically smallest (phi1, phi2).
    """
    if grid_steps < 64:
        raise ValueError("grid_steps must be >= 64")
    ab = pair.alpha * pair.beta
    grid = -0.5 * math.pi + math.pi * np.arange(grid_steps) / grid_steps
    p1_mesh, p2_mesh = np.meshgrid(grid, grid, indexing="ij")
    values = total_success_closed_form(ab, p1_mesh, p2_mesh)
    flat = int(np.argmax(values))
    phi1 = float(grid[flat // grid_steps])
    phi2 = float(grid[flat % grid_steps])
    best = float(values.flat[flat])

    step = math.pi / grid_steps
    for _ in range(refine_iters):
        moved = True
        inner = 0
        while moved and inner < 100:
            moved = False
            inner += 1
            for d1, d2 in ((step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)):
                cand = float(total_success_closed_form(ab, phi1 + d1, phi2 + d2))
                if cand > best:
                    best, phi1, phi2 = cand, phi1 + d1, phi2 + d2
                    moved = True
        step *= 0.5

    return AngleSolution(phi1, phi2, _aux_ratio(ab), best)


def p_max_curve(chis: list[float]) -> list[tuple[float, float]]:
    """Maximum success probability at each canonical-domain angle chi (radians)."""
    return [(chi, optimal_closed_form(make_shared_state(chi)).p_max) for chi in chis]
