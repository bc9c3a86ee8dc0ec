"""Brute-force ground truth for the planner optimum.

Evaluates the allocation objective on a dense uniform grid over [0, V] and
optionally sharpens the grid argmin with a golden-section pass.  The
objective is piecewise-linear and convex, so grid search plus refinement
pins the minimizer to machine precision near the kink.  Used by the test
suite as an independent check of the closed-form solver and exposed through
the CLI `audit` subcommand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import EconomyProfile, ModelInputError, Scenario, _check_pair

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class OracleConfig:
    grid_points: int = 100_001
    refine: bool = True

    def __post_init__(self) -> None:
        if self.grid_points < 3:
            raise ModelInputError(f"grid_points must be >= 3, got {self.grid_points!r}")

    def step(self, vaccines: float) -> float:
        """Spacing of the uniform search grid over [0, vaccines]."""
        return vaccines / (self.grid_points - 1)

    def refined_step(self, vaccines: float) -> float:
        """Bracket width the golden-section pass shrinks to."""
        return max(1e-10 * vaccines, 1e-6 * self.step(vaccines))


def brute_force_optimum(
    profile: EconomyProfile,
    scenario: Scenario,
    config: OracleConfig = OracleConfig(),
) -> tuple[float, float]:
    """Grid-search minimizer of the planner objective over [0, V].

    Returns (v_blue, objective) at the best point found; ties on the grid
    break toward the smaller v_blue, and the refinement pass is only kept
    when it strictly improves on the grid.  Deterministic for fixed inputs.
    """
    _check_pair(profile, scenario)
    vaccines = scenario.vaccines

    beta_b, beta_w = scenario.beta_blue, scenario.beta_white
    gamma = profile.gamma
    labor_b, labor_w = profile.labor_blue, profile.labor_white
    alpha_b, alpha_w = profile.alpha_blue, profile.alpha_white
    dose_value_w = 1.0 - gamma * (1.0 - beta_w)

    def objective_at(v_blue: float) -> float:
        eff_b = (1.0 - beta_b) * labor_b + beta_b * v_blue
        eff_w = (1.0 - beta_w) * gamma * labor_w + dose_value_w * (vaccines - v_blue)
        return abs(alpha_b * eff_b - alpha_w * eff_w)

    if vaccines == 0.0:
        return 0.0, objective_at(0.0)

    grid = np.linspace(0.0, vaccines, config.grid_points)
    eff_b = (1.0 - beta_b) * labor_b + beta_b * grid
    eff_w = (1.0 - beta_w) * gamma * labor_w + dose_value_w * (vaccines - grid)
    values = np.abs(alpha_b * eff_b - alpha_w * eff_w)
    index = int(np.argmin(values))  # first minimum: ties go to the smaller v_blue
    best_v = float(grid[index])
    best_value = float(values[index])

    if config.refine:
        low = float(grid[max(index - 1, 0)])
        high = float(grid[min(index + 1, config.grid_points - 1)])
        refined_v = _golden_section(objective_at, low, high, config.refined_step(vaccines))
        refined_value = objective_at(refined_v)
        if refined_value < best_value or (refined_value == best_value and refined_v < best_v):
            best_v, best_value = refined_v, refined_value

    return best_v, best_value


def _golden_section(fun, low: float, high: float, tol: float, max_iter: int = 500) -> float:
    """Golden-section minimization of a unimodal function on [low, high]."""
    x1 = high - _GOLDEN * (high - low)
    x2 = low + _GOLDEN * (high - low)
    f1, f2 = fun(x1), fun(x2)
    for _ in range(max_iter):
        if high - low <= tol:
            break
        if f1 <= f2:
            high, x2, f2 = x2, x1, f1
            x1 = high - _GOLDEN * (high - low)
            f1 = fun(x1)
        else:
            low, x1, f1 = x1, x2, f2
            x2 = low + _GOLDEN * (high - low)
            f2 = fun(x2)
    midpoint = 0.5 * (low + high)
    # The kink can sit a hair outside the final bracket midpoint; keep the
    # best of the three candidates so refinement never loses to its inputs.
    candidates = [(fun(midpoint), midpoint), (f1, x1), (f2, x2)]
    candidates.sort(key=lambda pair: (pair[0], pair[1]))
    return candidates[0][1]
