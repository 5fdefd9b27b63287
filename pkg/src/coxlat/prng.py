"""Deterministic counter-based random vectors for benchmarks and tests.

The generator is splitmix64: output i is a fixed 64-bit avalanche of
seed + (i+1) * golden-gamma, so any slice of the stream can be produced
independently of the rest, bit-identically on every platform.  Doubles take
the top 53 bits, giving uniforms on [0, 1).
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def splitmix64(seed: int, count: int, start: int = 0) -> np.ndarray:
    """Outputs ``start .. start+count-1`` of the splitmix64 stream, as uint64."""
    if count < 0 or start < 0:
        raise ValueError("count and start must be nonnegative")
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    x = np.uint64(seed & _MASK) + idx * np.uint64(_GAMMA)
    x = (x ^ (x >> np.uint64(30))) * np.uint64(_MIX1)
    x = (x ^ (x >> np.uint64(27))) * np.uint64(_MIX2)
    return x ^ (x >> np.uint64(31))


def uniform(seed: int, count: int, low: float, high: float, start: int = 0) -> np.ndarray:
    """Uniform doubles on [low, high) from the splitmix64 stream."""
    bits = splitmix64(seed, count, start)
    unit = (bits >> np.uint64(11)).astype(np.float64) * 2.0**-53
    return low + (high - low) * unit


def uniform_vectors(
    seed: int, num: int, dim: int, low: float, high: float, start_vector: int = 0
) -> np.ndarray:
    """``num`` uniform vectors of length ``dim``; vector t always reads stream
    positions [t*dim, (t+1)*dim), so chunked generation reproduces one stream."""
    flat = uniform(seed, num * dim, low, high, start=start_vector * dim)
    return flat.reshape(num, dim)
