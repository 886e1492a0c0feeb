#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

from typing import Sequence

import numpy as np
from sklearn.preprocessing import MinMaxScaler

__all__ = ['range_scaler']


def range_scaler(min_values: Sequence[float], max_values: Sequence[float]) -> MinMaxScaler:
    """
    A :class:`sklearn.preprocessing.MinMaxScaler` mapping each column from its
    ``[min, max]`` range onto [0, 1]. Zero-width ranges are only shifted.

    Parameters
    ----------
    min_values
        Lower bound per column.
    max_values
        Upper bound per column.

    Returns
    -------
    MinMaxScaler
        Fitted scaler.
    """
    bounds = np.vstack([np.asarray(min_values, dtype=float), np.asarray(max_values, dtype=float)])
    if bounds.ndim != 2 or np.any(bounds[0] > bounds[1]):
        raise ValueError('each min value must be lower than or equal to its max value')
    return MinMaxScaler().fit(bounds)
