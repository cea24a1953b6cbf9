"""Pure-numpy fallback for the exhaustive cycle-minimum kernel.

Sign vectors of length q are encoded as bitmasks (set bit = -1 outcome).
A mask is admissible when no two cyclically adjacent bits are both set,
and its correlation sum is q - 2 * popcount(mask XOR rot1(mask)).
"""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 20

BACKEND = "numpy"


def min_cycle_sum(q: int) -> tuple[int, int]:
    """Minimum correlation sum over admissible masks and the lowest mask
    attaining it.  Exhaustive over all 2^q masks."""
    if not 1 <= q <= 24:
        raise ValueError(f"q = {q} outside the enumeration guard [1, 24]")
    full = (1 << q) - 1
    best_sum = q + 1
    best_mask = 0
    total = 1 << q
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        m = np.arange(start, stop, dtype=np.uint32)
        rot = ((m << np.uint32(1)) | (m >> np.uint32(q - 1))) & np.uint32(full)
        valid = (m & rot) == 0
        if not valid.any():
            continue
        flips = np.bitwise_count(m ^ rot).astype(np.int64)
        sums = q - 2 * flips
        sums[~valid] = q + 1
        i = int(np.argmin(sums))
        if sums[i] < best_sum:
            best_sum = int(sums[i])
            best_mask = start + i
    return best_sum, best_mask
