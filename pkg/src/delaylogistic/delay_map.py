"""The logistic recurrence with a reproduction lag of ``tau`` steps.

The state is the (tau+1)-entry history ``(x_{n-tau}, ..., x_n)``, oldest
first, advanced by

    x_{n+1} = x_n + r * x_n * (1 - x_{n-tau} / K)

Both constant histories at 0 and at K are fixed points; their Jacobians
are companion-shaped with a shift block on the superdiagonal, so their
characteristic polynomials come out in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .polynomial import Polynomial

TRIVIAL = "trivial"
NONTRIVIAL = "nontrivial"

# A sample beyond this multiple of K is treated as divergence and stops
# the run loudly instead of overflowing into inf/nan silently.
DIVERGENCE_FACTOR = 1e12


@dataclass(frozen=True)
class DelayParams:
    """Reproduction rate ``r``, carrying capacity ``K`` and delay ``tau``."""

    r: float
    K: float
    tau: int

    def __post_init__(self) -> None:
        if not math.isfinite(self.r):
            raise ValueError(f"r must be finite, got {self.r!r}")
        if not (math.isfinite(self.K) and self.K > 0):
            raise ValueError(f"K must be positive and finite, got {self.K!r}")
        if self.tau < 0 or self.tau != int(self.tau):
            raise ValueError(f"tau must be a non-negative integer, got {self.tau!r}")
        object.__setattr__(self, "r", float(self.r))
        object.__setattr__(self, "K", float(self.K))
        object.__setattr__(self, "tau", int(self.tau))


@dataclass(frozen=True)
class Trajectory:
    """Recorded run: (step, value) samples, the seeded history included.

    History entries occupy steps ``-tau .. 0`` so that the sample at step
    ``n`` is exactly ``x_n`` of the recurrence. ``diverged`` marks an early
    stop on a non-finite or runaway sample.
    """

    params: DelayParams
    samples: tuple[tuple[int, float], ...]
    diverged: bool = False


def _check_state(params: DelayParams, state: Sequence[float]) -> tuple[float, ...]:
    values = tuple(float(x) for x in state)
    if len(values) != params.tau + 1:
        raise ValueError(
            f"state needs tau + 1 = {params.tau + 1} entries, got {len(values)}")
    return values


def step(params: DelayParams, state: Sequence[float]) -> tuple[float, ...]:
    """Advance the history by one application of the recurrence."""
    values = _check_state(params, state)
    newest = values[-1]
    oldest = values[0]
    advanced = newest + params.r * newest * (1.0 - oldest / params.K)
    return values[1:] + (advanced,)


def simulate(params: DelayParams, init: Sequence[float], n_steps: int) -> Trajectory:
    """Run ``n_steps`` map applications from the seeded history.

    Stops early with ``diverged=True`` once a sample is non-finite or
    exceeds ``DIVERGENCE_FACTOR * K`` in magnitude; the offending sample is
    kept in the record.
    """
    state = _check_state(params, init)
    if any(not math.isfinite(x) for x in state):
        raise ValueError(f"non-finite initial state: {state!r}")
    if n_steps < 0:
        raise ValueError(f"n_steps must be >= 0, got {n_steps}")

    samples = [(i - params.tau, x) for i, x in enumerate(state)]
    limit = DIVERGENCE_FACTOR * params.K
    diverged = False
    for n in range(1, n_steps + 1):
        state = step(params, state)
        newest = state[-1]
        samples.append((n, newest))
        if not math.isfinite(newest) or abs(newest) > limit:
            diverged = True
            break
    return Trajectory(params=params, samples=tuple(samples), diverged=diverged)


def fixed_points(params: DelayParams) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """The two constant histories: all zeros and all K."""
    n = params.tau + 1
    return (0.0,) * n, (params.K,) * n


def _fixed_point_level(params: DelayParams, point: str) -> float:
    if point == TRIVIAL:
        return 0.0
    if point == NONTRIVIAL:
        return params.K
    raise ValueError(f"point must be {TRIVIAL!r} or {NONTRIVIAL!r}, got {point!r}")


def jacobian(params: DelayParams, point: str) -> np.ndarray:
    """Linearization of :func:`step` at the selected fixed point.

    Rows 0..tau-1 shift the history (a single 1 on the superdiagonal); the
    last row carries the two partial derivatives of the update, in column 0
    (oldest entry) and column tau (newest entry). For tau = 0 both land in
    the single cell and add.
    """
    level = _fixed_point_level(params, point)
    n = params.tau + 1
    jac = np.zeros((n, n))
    for i in range(n - 1):
        jac[i, i + 1] = 1.0
    jac[n - 1, 0] += -params.r * level / params.K
    jac[n - 1, n - 1] += 1.0 + params.r * (1.0 - level / params.K)
    return jac


def char_poly(params: DelayParams, point: str) -> Polynomial:
    """Characteristic polynomial of the Jacobian, in closed form.

    Trivial point: ``lambda^tau * (lambda - (1 + r))``. Non-trivial point:
    ``lambda^(tau+1) - lambda^tau + r`` (which collapses to
    ``lambda - (1 - r)`` for tau = 0). Emitted analytically; tests compare
    against a determinant expansion of the Jacobian.
    """
    level = _fixed_point_level(params, point)
    tau, r = params.tau, params.r
    if level == 0.0:
        return Polynomial((1.0, -(1.0 + r)) + (0.0,) * tau)
    if tau == 0:
        return Polynomial((1.0, r - 1.0))
    return Polynomial((1.0, -1.0) + (0.0,) * (tau - 1) + (r,))


def trivial_stability_range(tau: int) -> tuple[float, float]:
    """The open interval of ``r`` where the all-zero point is stable.

    The Jacobian there is upper triangular with diagonal ``(0, ..., 0, e)``
    and ``e`` affine in ``r``; the range solves ``|e| < 1``. The affine map
    is measured off the matrix itself rather than assumed.
    """
    if tau < 0:
        raise ValueError(f"tau must be >= 0, got {tau}")
    corner = [float(jacobian(DelayParams(r=r, K=1.0, tau=tau), TRIVIAL)[tau, tau])
              for r in (0.0, 1.0)]
    intercept = corner[0]
    slope = corner[1] - corner[0]
    return ((-1.0 - intercept) / slope, (1.0 - intercept) / slope)
