"""Independent high-precision oracles used to pin expected values.

Everything here recomputes physics from first principles with mpmath's
arbitrary-precision arithmetic and deliberately shares no code with the
package under test: levels come from the closed forms, the constraint is
solved by plain bisection, and sums are truncated only when terms fall
below the working precision.
"""

from __future__ import annotations

import math

from mpmath import mp, mpf

mp.dps = 40

_TAIL_EXPONENT = 200  # exp(-200) ~ 1e-87, far below dps=40 resolution


def mp_energy(plus: bool, n: int):
    return (mpf(2 * n - 1) / 2) ** 2 if plus else mpf(n) ** 2


def _gaps(plus: bool, n_max: int):
    return [mpf(n * (n - 1)) if plus else mpf((n - 1) * (n + 1)) for n in range(1, n_max + 1)]


def _total(x, b, gaps):
    s = mpf(0)
    for g in gaps:
        z = x + b * g
        if z > _TAIL_EXPONENT:
            break
        s += 1 / mp.expm1(z)
    return s


def _force(x, b, gaps, e1):
    s = mpf(0)
    for g in gaps:
        z = x + b * g
        if z > _TAIL_EXPONENT:
            break
        s += (g + e1) / mp.expm1(z)
    return s


def _levels_needed(b) -> int:
    # past gap = TAIL/b every term is below the bisection's resolution
    return max(8, int(math.isqrt(int(_TAIL_EXPONENT / b)) + 4))


def mp_solve_x(plus: bool, n_particles: int, b, bisections: int = 130):
    """Shifted multiplier x = alpha + b e_1 by bisection on the exact bound."""
    gaps = _gaps(plus, _levels_needed(b))
    lo = mp.log(1 + mpf(1) / n_particles)
    hi = 2 * lo
    while _total(hi, b, gaps) > n_particles:
        lo, hi = hi, 2 * hi
    for _ in range(bisections):
        mid = (lo + hi) / 2
        if _total(mid, b, gaps) > n_particles:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2, gaps


def mp_half_force(plus: bool, n_particles: int, t):
    b = mpf(1) / t
    x, gaps = mp_solve_x(plus, n_particles, b)
    e1 = mpf(1) / 4 if plus else mpf(1)
    return _force(x, b, gaps, e1)


def mp_delta_f(n_particles: int, t):
    return mp_half_force(False, n_particles, t) - mp_half_force(True, n_particles, t)


def direct_force_theta(plus: bool, k: int, b: float) -> float:
    """Plain float sum of e_n exp(-k b e_n), the oracle for the resummed form."""
    total = 0.0
    n = 1
    while True:
        e = (n - 0.5) ** 2 if plus else float(n * n)
        term = e * math.exp(-k * b * e)
        total += term
        if n > 3 and term < 1e-18 * total:
            return total
        n += 1
