"""Exact dimensionless forces on the partition and temperature sweeps.

The force exerted by one half well is f = sum_n e_n N_n with the
occupations fixed by the particle-number constraint; the observable is
the net force delta_f = f_minus - f_plus. It starts at 3N/4 for t -> 0,
stays nearly flat below t = 1, decreases roughly linearly, turns around
near t ~ N and grows like sqrt(t) from there.

A sweep evaluates a set of methods (the exact sums and/or the closed-form
approximations) over a temperature grid and reports one row per
(temperature, method) pair. Failures at single points become error rows
instead of aborting the sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

import numpy as np

from . import approx
from .occupancy import (
    DEFAULT_TOL,
    AlphaSolution,
    ConstraintSolverError,
    ThermoPoint,
    _bose_block_sum,
    solve_alpha,
)
from .spectrum import WellSide

if TYPE_CHECKING:
    from .cli import SweepConfig

__all__ = [
    "ForcePair",
    "Method",
    "GridScale",
    "SweepRow",
    "half_force",
    "net_force",
    "net_force_zero_t",
    "temperature_grid",
    "sweep",
]


@dataclass(frozen=True)
class ForcePair:
    """Both half-well forces and their difference at one temperature."""

    f_plus: float
    f_minus: float
    delta_f: float


class Method(Enum):
    """How a sweep point is evaluated."""

    NUMERIC = "numeric"
    LOW_T = "low-t"
    LINEAR = "linear"
    SEMI_ANALYTIC = "semi-analytic"
    HIGH_T = "high-t"


class GridScale(Enum):
    LINEAR = "linear"
    LOG = "log"


@dataclass(frozen=True)
class SweepRow:
    """One (temperature, method) record of a sweep.

    Per-well fields are filled only by methods that compute them (numeric
    and semi-analytic); delta_f is absent only on error rows. status is
    "ok", "out-of-range" for a value computed outside its method's declared
    validity window, or "error".
    """

    t: float
    method: Method
    alpha_plus: float | None
    alpha_minus: float | None
    f_plus: float | None
    f_minus: float | None
    delta_f: float | None
    status: str


def _force_from_solution(side: WellSide, b: float, solution: AlphaSolution) -> float:
    """Energy-weighted occupation sum reusing an already-solved multiplier.

    Reuse keeps the constraint and the force evaluation at one truncation;
    the same relative tail rule bounds the discarded terms.
    """
    return _bose_block_sum(side, solution.shifted_alpha, b, energy_weighted=True).value


def half_force(side: WellSide, point: ThermoPoint, tol: float = DEFAULT_TOL) -> float:
    """Exact force from one half well: solve the constraint, then sum e_n N_n."""
    solution = solve_alpha(side, point, tol)
    return _force_from_solution(side, point.b, solution)


def net_force(point: ThermoPoint, tol: float = DEFAULT_TOL) -> ForcePair:
    """Exact net force on the partition, both wells solved at the same tolerance."""
    f_plus = half_force(WellSide.PLUS, point, tol)
    f_minus = half_force(WellSide.MINUS, point, tol)
    return ForcePair(f_plus, f_minus, f_minus - f_plus)


def net_force_zero_t(n_particles: int) -> float:
    """Net force at t = 0 exactly: all N particles sit in each ground state.

    Handled analytically because b = 1/t is outside the numeric pipeline's
    domain at t = 0.
    """
    if n_particles < 1:
        raise ValueError(f"particle number must be >= 1, got {n_particles}")
    return 0.75 * n_particles


def temperature_grid(config: "SweepConfig") -> list[float]:
    """Materialize the sweep grid, validating the configuration."""
    if config.grid_points < 1:
        raise ValueError(f"grid must be non-empty, got {config.grid_points} points")
    if not (0.0 < config.t_min <= config.t_max):
        raise ValueError(f"need 0 < t_min <= t_max, got [{config.t_min}, {config.t_max}]")
    if not config.methods:
        raise ValueError("at least one method is required")
    if config.grid_points == 1:
        return [config.t_min]
    if config.grid_scale is GridScale.LOG:
        return [float(t) for t in np.geomspace(config.t_min, config.t_max, config.grid_points)]
    return [float(t) for t in np.linspace(config.t_min, config.t_max, config.grid_points)]


_POINT_ERRORS = (
    ValueError,
    ArithmeticError,
    ConstraintSolverError,
    approx.MethodOutOfRangeError,
    approx.QuadratureError,
)


def _evaluate_point(n_particles: int, t: float, method: Method, tol: float) -> SweepRow:
    try:
        if method is Method.NUMERIC:
            point = ThermoPoint(n_particles, t)
            sol_plus = solve_alpha(WellSide.PLUS, point, tol)
            sol_minus = solve_alpha(WellSide.MINUS, point, tol)
            f_plus = _force_from_solution(WellSide.PLUS, point.b, sol_plus)
            f_minus = _force_from_solution(WellSide.MINUS, point.b, sol_minus)
            return SweepRow(
                t, method, sol_plus.alpha, sol_minus.alpha, f_plus, f_minus, f_minus - f_plus, "ok"
            )
        if method is Method.LOW_T:
            value = approx.delta_f_low_t(n_particles, t)
            return SweepRow(t, method, None, None, None, None, value, "ok")
        if method is Method.LINEAR:
            result = approx.delta_f_linear(n_particles, t)
            status = "ok" if result.in_range else "out-of-range"
            return SweepRow(t, method, None, None, None, None, result.value, status)
        if method is Method.SEMI_ANALYTIC:
            alpha_plus = approx.semi_analytic_alpha(WellSide.PLUS, n_particles, t)
            alpha_minus = approx.semi_analytic_alpha(WellSide.MINUS, n_particles, t)
            f_plus = approx.semi_analytic_force(WellSide.PLUS, alpha_plus, t, n_particles)
            f_minus = approx.semi_analytic_force(WellSide.MINUS, alpha_minus, t, n_particles)
            return SweepRow(
                t, method, alpha_plus, alpha_minus, f_plus, f_minus, f_minus - f_plus, "ok"
            )
        if method is Method.HIGH_T:
            value = approx.delta_f_high_t(n_particles, t)
            return SweepRow(t, method, None, None, None, None, value, "ok")
        raise ValueError(f"unknown method {method!r}")
    except _POINT_ERRORS:
        return SweepRow(t, method, None, None, None, None, None, "error")


def sweep(config: "SweepConfig") -> list[SweepRow]:
    """Evaluate every configured method over the temperature grid.

    Rows come back ordered by temperature and then by method name, one row
    per (t, method) pair, independent of evaluation order.
    """
    grid = temperature_grid(config)
    methods = sorted(config.methods, key=lambda m: m.value)
    rows: list[SweepRow] = []
    for t in grid:
        for method in methods:
            rows.append(_evaluate_point(config.n_particles, t, method, config.tolerance))
    return rows
