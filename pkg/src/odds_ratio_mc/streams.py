"""Per-replication random streams on a counter-based generator.

Each stream is numpy's Philox4x64-10 keyed by the 128-bit pair
(seed, stream_id) with the counter starting at zero. The key alone fixes the
uniform sequence, so replication ``i`` can be replayed on any worker without
touching any other stream. Uniforms are the generator's 53-bit doubles in
[0, 1).
"""

import numpy as np
from numpy.typing import NDArray

from odds_ratio_mc.models import UINT64_MAX


class RandomStream:
    """Deterministic uniform source for one replication.

    Attributes:
        seed: Run-wide 64-bit seed
        stream_id: 64-bit replication index or purpose tag
        consumed: Number of uniforms drawn so far
    """

    __slots__ = ("seed", "stream_id", "consumed", "_generator")

    def __init__(self, seed: int, stream_id: int):
        for name, value in (("seed", seed), ("stream_id", stream_id)):
            if not 0 <= value <= UINT64_MAX:
                raise ValueError(f"{name} must be an unsigned 64-bit value, got {value!r}")
        self.seed = int(seed)
        self.stream_id = int(stream_id)
        self.consumed = 0
        key = np.array([self.seed, self.stream_id], dtype=np.uint64)
        self._generator = np.random.Generator(np.random.Philox(key=key))

    def __repr__(self) -> str:
        return (
            f"RandomStream(seed={self.seed}, stream_id={self.stream_id}, "
            f"consumed={self.consumed})"
        )

    def uniforms(self, count: int) -> NDArray[np.float64]:
        """Draw ``count`` uniforms from [0, 1)."""
        if count < 0:
            raise ValueError(f"count must be nonnegative, got {count}")
        self.consumed += count
        return self._generator.random(count)
