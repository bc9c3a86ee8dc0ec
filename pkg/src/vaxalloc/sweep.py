"""Scenario sweeps over infection-risk grids.

Three analyses are provided on top of the closed-form solver: frontier
curves of the optimal blue-collar dose share against blue-collar risk at a
fixed white-collar risk, full (beta_w, beta_b) allocation matrices at a
fixed stock level, and threshold summaries counting the above-diagonal
scenarios (beta_b > beta_w) where the blue-collar share exceeds a cutoff.

Cells are independent pure computations; ``sweep_matrix`` can evaluate them
in a process pool and the result is identical regardless of worker count or
evaluation order.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from .model import (
    AllocationResult,
    EconomyProfile,
    ModelInputError,
    Scenario,
    solve,
)


@dataclass(frozen=True)
class GridSpec:
    """Uniform lattice of infection risks, used for both axes."""

    beta_min: float = 0.05
    beta_max: float = 0.95
    step: float = 0.05

    def __post_init__(self) -> None:
        if not (0.0 <= self.beta_min < self.beta_max <= 1.0):
            raise ModelInputError(
                f"need 0 <= beta_min < beta_max <= 1, got "
                f"[{self.beta_min!r}, {self.beta_max!r}]"
            )
        if not self.step > 0.0:
            raise ModelInputError(f"step must be positive, got {self.step!r}")
        if len(self.values()) < 2:
            raise ModelInputError("grid needs at least two points per axis")

    def values(self) -> tuple[float, ...]:
        count = int(math.floor((self.beta_max - self.beta_min) / self.step + 1e-9)) + 1
        # Rounding keeps lattice values like 0.15 exact instead of 0.15000000000000002.
        return tuple(round(self.beta_min + i * self.step, 12) for i in range(count))


@dataclass(frozen=True)
class SweepGrid:
    """Solved allocations on the full (beta_w, beta_b) lattice."""

    spec: GridSpec
    v_over_l: float
    vaccines: float
    cells: dict[tuple[float, float], AllocationResult]

    def ratio(self, beta_white: float, beta_blue: float) -> float:
        """Blue-collar dose share v_blue_star / V for one lattice cell."""
        return self.cells[(beta_white, beta_blue)].v_blue_star / self.vaccines


@dataclass(frozen=True)
class ThresholdSummary:
    """Share of riskier-blue-collar scenarios above a dose-share cutoff."""

    threshold: float
    share_exceeding: float
    cells_considered: int


def _coverage(profile: EconomyProfile, v_over_l: float) -> float:
    if not (0.0 < v_over_l < 1.0):
        raise ModelInputError(f"v_over_l must lie in (0, 1), got {v_over_l!r}")
    return v_over_l * profile.total_labor


def frontier_curve(
    profile: EconomyProfile,
    beta_white: float,
    v_over_l: float,
    grid: GridSpec = GridSpec(),
) -> list[tuple[float, float]]:
    """Optimal dose share against blue-collar risk at a fixed white-collar risk.

    Returns one (beta_blue, v_blue_star / V) point per lattice value.
    """
    vaccines = _coverage(profile, v_over_l)
    curve = []
    for beta_blue in grid.values():
        result = solve(profile, Scenario(beta_white, beta_blue, vaccines))
        curve.append((beta_blue, result.v_blue_star / vaccines))
    return curve


def _solve_cell(
    profile: EconomyProfile, vaccines: float, betas: tuple[float, float]
) -> AllocationResult:
    beta_white, beta_blue = betas
    return solve(profile, Scenario(beta_white, beta_blue, vaccines))


def sweep_matrix(
    profile: EconomyProfile,
    v_over_l: float,
    grid: GridSpec = GridSpec(),
    workers: int = 1,
) -> SweepGrid:
    """Solve every lattice cell at a fixed stock level.

    With ``workers > 1`` cells are evaluated in a process pool; results are
    identical to the serial path because each cell is pure scalar math.
    """
    vaccines = _coverage(profile, v_over_l)
    lattice = grid.values()
    pairs = [(beta_white, beta_blue) for beta_white in lattice for beta_blue in lattice]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(partial(_solve_cell, profile, vaccines), pairs, chunksize=64)
            )
    else:
        results = [_solve_cell(profile, vaccines, betas) for betas in pairs]
    return SweepGrid(
        spec=grid,
        v_over_l=v_over_l,
        vaccines=vaccines,
        cells=dict(zip(pairs, results)),
    )


def threshold_share(sweep: SweepGrid, threshold: float) -> ThresholdSummary:
    """Fraction of beta_b > beta_w cells whose dose share exceeds the cutoff.

    Both comparisons are strict: a cell counts when beta_blue is strictly
    above beta_white and its share is strictly above the threshold.
    """
    if not (0.0 < threshold < 1.0):
        raise ModelInputError(f"threshold must lie in (0, 1), got {threshold!r}")
    considered = 0
    exceeding = 0
    for (beta_white, beta_blue), result in sweep.cells.items():
        if beta_blue > beta_white:
            considered += 1
            if result.v_blue_star / sweep.vaccines > threshold:
                exceeding += 1
    if considered == 0:
        raise ModelInputError("no cells with beta_blue > beta_white; grid too small")
    return ThresholdSummary(
        threshold=threshold,
        share_exceeding=exceeding / considered,
        cells_considered=considered,
    )
