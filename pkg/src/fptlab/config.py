"""Resource-guard configuration.

The dense-cell guard bounds every computation that enumerates the
exponent box [0, q)^n (rank-method lengths, dense oracles).  It can be
overridden through the FPTLAB_MAX_DENSE_CELLS environment variable.
"""

from __future__ import annotations

import os

DEFAULT_MAX_DENSE_CELLS = 2 ** 24
ENV_MAX_DENSE_CELLS = "FPTLAB_MAX_DENSE_CELLS"


def max_dense_cells() -> int:
    raw = os.environ.get(ENV_MAX_DENSE_CELLS)
    if raw is None:
        return DEFAULT_MAX_DENSE_CELLS
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_MAX_DENSE_CELLS} must be an integer, got {raw!r}") from exc
