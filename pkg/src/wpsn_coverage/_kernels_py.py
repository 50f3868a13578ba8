"""Pure-numpy sampling kernels.

Fallback for the compiled extension; both implementations must produce
bit-identical output. The generator is counter-based (splitmix64
finalizer over seed + counter), so any contiguous block of sample
indices can be evaluated independently and merged without changing the
result.
"""

from __future__ import annotations

import numpy as np

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_INV_2_53 = 1.0 / 9007199254740992.0  # 2**-53

IMPL = "python"


def _finalize(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def uniform_block(seed: int, start: int, count: int) -> np.ndarray:
    """Uniform [0,1) doubles for counters start .. start+count-1."""
    ctr = np.arange(start, start + count, dtype=np.uint64)
    z = _finalize(np.uint64(seed & 0xFFFFFFFFFFFFFFFF) + (ctr + np.uint64(1)) * _GOLDEN)
    return (z >> np.uint64(11)).astype(np.float64) * _INV_2_53


def points_block(
    seed: int, start: int, count: int, width: float, height: float
) -> tuple[np.ndarray, np.ndarray]:
    """Uniform points over the rectangle for sample indices start .. start+count-1.

    Sample i consumes counters 2i and 2i+1 (x then y), so blocks partition
    cleanly by sample index.
    """
    u = uniform_block(seed, 2 * start, 2 * count)
    return u[0::2] * width, u[1::2] * height


def covered_count(
    seed: int,
    start: int,
    count: int,
    width: float,
    height: float,
    sources_x: np.ndarray,
    sources_y: np.ndarray,
    radius: float,
    chunk: int = 65536,
) -> int:
    """Number of samples in [start, start+count) that fall inside >=1 disc."""
    sx = np.ascontiguousarray(sources_x, dtype=np.float64)
    sy = np.ascontiguousarray(sources_y, dtype=np.float64)
    if sx.size == 0:
        return 0
    r_sq = radius * radius
    total = 0
    for lo in range(start, start + count, chunk):
        n = min(chunk, start + count - lo)
        x, y = points_block(seed, lo, n, width, height)
        dx = x[:, None] - sx[None, :]
        dy = y[:, None] - sy[None, :]
        hit = (dx * dx + dy * dy <= r_sq).any(axis=1)
        total += int(hit.sum())
    return total
