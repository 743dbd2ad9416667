"""Bose-Einstein occupations and the particle-number constraint.

Each half well holds a fixed number N of ideal bosons. The occupations are
N_n = 1/(exp(alpha + b e_n) - 1) at inverse temperature b = 1/t, and the
multiplier alpha is fixed by the constraint sum_n N_n = N.

The constraint is solved in the shifted variable x = alpha + b e_1 > 0.
At low temperature alpha approaches log1p(1/N) - b e_1, a difference of
two numbers of order b, while x stays of order 1/N; solving for x keeps
the ground-state occupation fully resolved at every temperature. The
relative truncation rule for the level sums and the bracket-then-Newton
iteration are choices of this implementation; only the occupation formula
and the constraint itself are physics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .spectrum import WellSide, level_gap

__all__ = [
    "ThermoPoint",
    "AlphaSolution",
    "ConstraintSolverError",
    "occupation",
    "total_number",
    "solve_alpha",
    "OVERFLOW_EXPONENT",
    "TERM_TOL",
    "DEFAULT_TOL",
]

# exp saturates float64 near 709; past this the occupation is 0 to machine precision
OVERFLOW_EXPONENT = 700.0
# relative cutoff for level sums; tails decay at least geometrically in exp(-b * gap)
TERM_TOL = 1e-16
DEFAULT_TOL = 1e-12
_BLOCK = 512


@dataclass(frozen=True)
class ThermoPoint:
    """One (particle number, temperature) evaluation point."""

    n_particles: int
    t: float

    def __post_init__(self) -> None:
        if self.n_particles < 1:
            raise ValueError(f"particle number must be >= 1, got {self.n_particles}")
        if not (math.isfinite(self.t) and self.t > 0.0):
            raise ValueError(f"temperature must be finite and positive, got {self.t}")

    @property
    def b(self) -> float:
        """Inverse temperature."""
        return 1.0 / self.t


@dataclass(frozen=True)
class AlphaSolution:
    """Constraint-solved multiplier for one half well.

    shifted_alpha is x = alpha + b e_1; its positivity encodes a finite,
    positive ground-state occupation. residual is |sum_n N_n - N| at the
    returned multiplier.
    """

    alpha: float
    shifted_alpha: float
    residual: float
    levels_used: int
    iterations: int


class ConstraintSolverError(RuntimeError):
    """A constraint solve failed; carries the last bracket examined."""

    def __init__(self, message: str, bracket: tuple[float, float]):
        super().__init__(f"{message} (bracket: [{bracket[0]!r}, {bracket[1]!r}])")
        self.bracket = bracket


def occupation(alpha: float, b: float, energy: float) -> float:
    """Bose-Einstein occupation 1/(exp(alpha + b*energy) - 1).

    Returns exactly 0.0 once the exponent passes the float64 overflow
    threshold. Raises ValueError when alpha + b*energy <= 0, where the
    occupation would be divergent or negative.
    """
    z = alpha + b * energy
    if z <= 0.0:
        raise ValueError(f"alpha + b*e must be positive, got {z}")
    if z > OVERFLOW_EXPONENT:
        return 0.0
    return 1.0 / math.expm1(z)


class _SumResult(NamedTuple):
    value: float
    slope: float  # d(value)/dx, only filled when requested
    levels: int   # index of the last level included


def _bose_block_sum(
    side: WellSide,
    x: float,
    b: float,
    term_tol: float = TERM_TOL,
    energy_weighted: bool = False,
    with_slope: bool = False,
) -> _SumResult:
    """Truncated sum of N_n (or e_n N_n) over the levels of one half well.

    Works in the shifted variable x > 0, so exponents are x + b*(e_n - e_1)
    with the gap computed cancellation-free. Accumulates in blocks and stops
    at the first term below term_tol times the running sum; the plain
    occupations decrease monotonically and the energy-weighted terms do so
    past their single peak, so the stop rule also bounds the discarded tail.
    """
    total = 0.0
    slope = 0.0
    n_next = 1
    last_term = math.inf
    while True:
        n = np.arange(n_next, n_next + _BLOCK, dtype=np.float64)
        gap = level_gap(side, n)
        z = x + b * gap
        occ = np.zeros(_BLOCK)
        live = z <= OVERFLOW_EXPONENT
        occ[live] = 1.0 / np.expm1(z[live])
        terms = occ * (gap + side.ground_energy) if energy_weighted else occ
        running = total + np.cumsum(terms)
        stop = terms < term_tol * running
        if energy_weighted:
            prev = np.concatenate(([last_term], terms[:-1]))
            stop &= terms <= prev
        hit = np.flatnonzero(stop)
        cut = int(hit[0]) if hit.size else _BLOCK - 1
        if with_slope:
            o = occ[: cut + 1]
            slope -= float(np.sum(o * (o + 1.0)))
        total = float(running[cut])
        if hit.size:
            return _SumResult(total, slope, n_next + cut)
        if total == 0.0:
            # every occupation underflowed; higher levels are smaller still
            return _SumResult(0.0, slope, n_next + _BLOCK - 1)
        last_term = float(terms[-1])
        n_next += _BLOCK
        if n_next > 100_000_000:
            raise ConstraintSolverError("level sum failed to terminate", (x, x))


def total_number(side: WellSide, alpha: float, b: float, term_tol: float = TERM_TOL) -> float:
    """Total occupation sum over all levels of one half well.

    Truncated at the first term below term_tol times the running sum.
    """
    if b <= 0.0:
        raise ValueError(f"inverse temperature must be positive, got {b}")
    if term_tol <= 0.0:
        raise ValueError(f"term_tol must be positive, got {term_tol}")
    x = alpha + b * side.ground_energy
    if x <= 0.0:
        raise ValueError(f"alpha + b*e_1 must be positive, got {x}")
    return _bose_block_sum(side, x, b, term_tol).value


def solve_alpha(
    side: WellSide,
    point: ThermoPoint,
    tol: float = DEFAULT_TOL,
    max_iter: int = 200,
) -> AlphaSolution:
    """Solve sum_n N_n = N for the multiplier of one half well.

    The root is bracketed in x = alpha + b e_1: the exact bound
    x >= log1p(1/N) (level 1 alone cannot hold more than N particles)
    starts the bracket and the upper end doubles until the constraint
    changes sign; bisection steps shrink the interval whenever a Newton
    proposal falls outside it, and Newton polishes the root to
    |sum_n N_n - N| <= tol * N.
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    n_target = float(point.n_particles)
    b = point.b
    allow = tol * n_target
    evals = 0

    def constraint(x: float) -> _SumResult:
        nonlocal evals
        evals += 1
        return _bose_block_sum(side, x, b, with_slope=True)

    def done(x: float, res: _SumResult) -> AlphaSolution:
        return AlphaSolution(
            alpha=x - b * side.ground_energy,
            shifted_alpha=x,
            residual=abs(res.value - n_target),
            levels_used=res.levels,
            iterations=evals,
        )

    x = math.log1p(1.0 / n_target)
    res = constraint(x)
    g = res.value - n_target
    if abs(g) <= allow:
        return done(x, res)
    if g < 0.0:
        raise ConstraintSolverError("constraint below target at the analytic lower bound", (x, x))

    lo, hi = x, 2.0 * x
    while True:
        if evals >= max_iter:
            raise ConstraintSolverError("no sign change while growing the bracket", (lo, hi))
        res = constraint(hi)
        g = res.value - n_target
        if abs(g) <= allow:
            return done(hi, res)
        if g < 0.0:
            break
        lo, hi = hi, 2.0 * hi

    x = 0.5 * (lo + hi)
    while evals < max_iter:
        res = constraint(x)
        g = res.value - n_target
        if abs(g) <= allow:
            return done(x, res)
        if g > 0.0:
            lo = x
        else:
            hi = x
        # the constraint is strictly decreasing in x, so slope < 0 away from underflow
        take_newton = res.slope < 0.0
        if take_newton:
            x_next = x - g / res.slope
            take_newton = lo < x_next < hi
        x = x_next if take_newton else 0.5 * (lo + hi)
    raise ConstraintSolverError("constraint solve did not converge", (lo, hi))
