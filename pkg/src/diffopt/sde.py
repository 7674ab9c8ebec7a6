"""Variance-preserving forward diffusion and its reverse-time drift.

The forward process is the standard VP SDE

    dx = -0.5 * beta(t) * x dt + sqrt(beta(t)) dW,   t in [0, 1],

with the linear rate schedule beta(t) = beta_min + (beta_max - beta_min) * t.
Its perturbation kernel is Gaussian with closed-form mean coefficient
exp(-0.5 * int_0^t beta) and variance 1 - exp(-int_0^t beta), which is what
training uses; the forward SDE is never simulated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .numerics import Rng, as_float_array

__all__ = ["NoiseSchedule", "DEFAULT_BETA_MIN", "DEFAULT_BETA_MAX"]

DEFAULT_BETA_MIN = 0.01
DEFAULT_BETA_MAX = 2.0


def _check_time(t, minimum: float = 0.0):
    t = np.asarray(t, dtype=np.float64)
    if np.any(t < minimum) or np.any(t > 1.0):
        raise ValueError(f"time must lie in [{minimum}, 1], got {t}")
    return t


@dataclass(frozen=True)
class NoiseSchedule:
    """Linear beta(t) schedule of the VP SDE with its closed-form kernel."""

    beta_min: float = DEFAULT_BETA_MIN
    beta_max: float = DEFAULT_BETA_MAX

    def __post_init__(self):
        if not (0.0 < self.beta_min < self.beta_max):
            raise ValueError(
                f"need 0 < beta_min < beta_max, got {self.beta_min}, {self.beta_max}"
            )

    def beta(self, t):
        """Noise rate at time t in [0, 1]."""
        t = _check_time(t)
        return self.beta_min + (self.beta_max - self.beta_min) * t

    def integral_beta(self, t):
        """Analytic integral of beta from 0 to t."""
        t = _check_time(t)
        return self.beta_min * t + 0.5 * (self.beta_max - self.beta_min) * t * t

    def mean_coeff(self, t):
        """Kernel mean coefficient exp(-0.5 * int_0^t beta)."""
        return np.exp(-0.5 * self.integral_beta(t))

    def variance(self, t):
        """Kernel variance 1 - exp(-int_0^t beta); expm1 keeps small t accurate."""
        return -np.expm1(-self.integral_beta(t))

    def diffusion(self, t):
        """Diffusion coefficient g(t) = sqrt(beta(t))."""
        return np.sqrt(self.beta(t))

    def perturb(self, x0: np.ndarray, t, rng: Rng):
        """Sample x_t ~ p_t(x_t | x_0) and return it with the exact score target.

        Returns ``(xt, score_target)`` where ``xt = m(t) x0 + sqrt(v(t)) z``
        with z ~ N(0, I) and ``score_target = -(xt - m(t) x0) / v(t)``,
        computed via the identity ``-z / sqrt(v(t))``.  Requires t > 0: the
        target divides by the kernel variance.

        x0 may be a single point ``(d,)`` or a batch ``(n, d)`` with t scalar
        or per-row ``(n,)``.
        """
        x0 = as_float_array(x0)
        if x0.ndim not in (1, 2):
            raise ValueError(f"x0 must be (d,) or (n, d), got shape {x0.shape}")
        t = np.asarray(t, dtype=np.float64)
        if np.any(t <= 0.0):
            raise ValueError("perturb requires t > 0 (zero-variance kernel at t=0)")
        _check_time(t)
        if x0.ndim == 2 and t.ndim == 1:
            if t.shape[0] != x0.shape[0]:
                raise ValueError("per-row t length must match batch size")
            m = self.mean_coeff(t)[:, None]
            sigma = np.sqrt(self.variance(t))[:, None]
        else:
            m = self.mean_coeff(t)
            sigma = np.sqrt(self.variance(t))
        z = rng.normal(x0.shape)
        xt = m * x0 + sigma * z
        score_target = -z / sigma
        return xt, score_target

    def reverse_drift(self, x: np.ndarray, t, score: np.ndarray) -> np.ndarray:
        """Reverse-time drift f(x, t) - g(t)^2 * score with f = -0.5 beta(t) x."""
        x = as_float_array(x)
        score = as_float_array(score)
        if x.shape != score.shape:
            raise ValueError(f"score shape {score.shape} != state shape {x.shape}")
        t = np.asarray(t, dtype=np.float64)
        if np.any(t <= 0.0):
            raise ValueError("reverse drift defined for t > 0")
        b = self.beta(t)
        if x.ndim == 2 and b.ndim == 1:
            b = b[:, None]
        return -0.5 * b * x - b * score
