"""Deterministic numerical substrate: float64 arrays and a splittable RNG.

All math in this package runs on contiguous float64 numpy arrays.  Randomness
flows through :class:`Rng`, a thin wrapper around numpy's counter-based Philox
generator seeded via ``SeedSequence``, so independent child streams (data
shuffling, noise sampling, conditioning dropout, per-candidate trajectories)
can be derived reproducibly from one experiment seed.
"""

from __future__ import annotations

import numpy as np

__all__ = ["Rng", "as_float_array", "gaussian_sample", "matmul"]


def as_float_array(data, ndim: int | None = None) -> np.ndarray:
    """Convert to a C-contiguous float64 array, optionally checking rank."""
    arr = np.ascontiguousarray(data, dtype=np.float64)
    if ndim is not None and arr.ndim != ndim:
        raise ValueError(f"expected a {ndim}-d array, got shape {arr.shape}")
    return arr


def _validate_shape(shape) -> tuple[int, ...]:
    if np.isscalar(shape):
        shape = (int(shape),)
    shape = tuple(int(s) for s in shape)
    if len(shape) == 0 or any(s <= 0 for s in shape):
        raise ValueError(f"shape dimensions must be positive, got {shape}")
    return shape


class Rng:
    """Seedable random generator with deterministic, splittable streams.

    Identical seeds produce identical streams across runs and platforms
    (Philox is counter-based).  An instance is single-owner: parallel work
    must use children obtained from :meth:`split` instead of sharing one
    generator.
    """

    def __init__(self, seed: int | np.random.SeedSequence = 0):
        if isinstance(seed, np.random.SeedSequence):
            self._seq = seed
        else:
            self._seq = np.random.SeedSequence(int(seed))
        self._gen = np.random.Generator(np.random.Philox(self._seq))

    def split(self, n: int) -> list["Rng"]:
        """Derive ``n`` independent child generators."""
        if n < 1:
            raise ValueError("number of child streams must be >= 1")
        return [Rng(child) for child in self._seq.spawn(n)]

    def normal(self, shape) -> np.ndarray:
        """I.i.d. standard normal entries with the given positive shape."""
        return self._gen.standard_normal(_validate_shape(shape), dtype=np.float64)

    def uniform(self, shape, low: float = 0.0, high: float = 1.0) -> np.ndarray:
        """I.i.d. uniform entries on [low, high)."""
        shape = _validate_shape(shape)
        return low + (high - low) * self._gen.random(shape, dtype=np.float64)

    def integers(self, low: int, high: int, shape) -> np.ndarray:
        """I.i.d. integers on [low, high)."""
        return self._gen.integers(low, high, size=_validate_shape(shape))

    def permutation(self, n: int) -> np.ndarray:
        if n < 1:
            raise ValueError("permutation length must be >= 1")
        return self._gen.permutation(n)


def gaussian_sample(rng: Rng, shape) -> np.ndarray:
    """Standard normal sample of the given shape, deterministic given seed."""
    return rng.normal(shape)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product with explicit shape validation."""
    a = as_float_array(a, ndim=2)
    b = as_float_array(b, ndim=2)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"inner dimensions differ: {a.shape} x {b.shape}")
    return a @ b
