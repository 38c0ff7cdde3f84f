"""Container for multichannel time series.

A multivariate signal is an (n_channels, n_time) real matrix: row i is the
time signal recorded at channel i, column j is the spatial signal across
all channels at time step j.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch


@dataclass(frozen=True)
class MultivariateSignal:
    """Validated (n_channels, n_time) matrix of finite floats."""

    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 2:
            raise DimensionMismatch(
                f"expected a 2-d (channels, time) array, got shape {values.shape}"
            )
        if values.shape[0] < 1 or values.shape[1] < 1:
            raise DimensionMismatch("signal needs at least one channel and one sample")
        if not np.all(np.isfinite(values)):
            raise ValueError("signal contains non-finite entries")
        values = values.copy()
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def n_channels(self) -> int:
        return self.values.shape[0]

    @property
    def n_time(self) -> int:
        return self.values.shape[1]


def as_matrix(x) -> np.ndarray:
    """Return the underlying ndarray of a signal, vector, or matrix."""
    if isinstance(x, MultivariateSignal):
        return x.values
    return np.asarray(x, dtype=float)


def like(template, values: np.ndarray):
    """Wrap `values` as a MultivariateSignal iff `template` was one."""
    if isinstance(template, MultivariateSignal):
        return MultivariateSignal(values)
    return values
