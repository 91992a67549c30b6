"""Numpy fallback for the O(n^2) concordance kernel.

Chunked broadcasting keeps memory bounded at chunk*n sign products while
producing the exact same integer statistic as the compiled kernel.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 256


def concordance_diff(x: np.ndarray, y: np.ndarray) -> int:
    """Return (#concordant - #discordant) over all i<j pairs; ties count 0."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n = x.size
    total = 0
    for s in range(0, n - 1, _CHUNK):
        e = min(s + _CHUNK, n - 1)
        dx = np.sign(x[None, s + 1 :] - x[s:e, None])
        dy = np.sign(y[None, s + 1 :] - y[s:e, None])
        prod = (dx * dy).astype(np.int64)
        # keep only pairs with j > i
        i_local = np.arange(s, e)[:, None]
        j_global = np.arange(s + 1, n)[None, :]
        prod[j_global <= i_local] = 0
        total += int(prod.sum())
    return total
