#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

from typing import Sequence, Tuple

import numpy as np

from ciupy.core.base import BaseBlackBox, ValidationError
from ciupy.core.descriptor import InputDescriptor, OutputDescriptor
from ciupy.core.problem import Problem, validate_problem

__all__ = ['LinearModel', 'RuleStepModel', 'NonlinearDemoModel', 'unit_box_problem']


class LinearModel(BaseBlackBox):
    """
    Weighted sum ``y = w . x + b``.

    ``weights`` of shape ``(M,)`` gives a single output, ``(K, M)`` gives K outputs.

    ::

        >>> LinearModel([0.3, 0.7]).predict([[1., 1.]])
        array([[1.]])
    """

    kind = 'linear'
    concurrent_safe = True

    def __init__(self, weights: Sequence[float], bias=0.):
        weights = np.asarray(weights, dtype=float)
        if weights.ndim == 1:
            weights = weights.reshape(1, -1)
        if weights.ndim != 2 or weights.size == 0:
            raise ValidationError('weights must be a non-empty vector or (K, M) matrix')
        bias = np.broadcast_to(np.asarray(bias, dtype=float), (weights.shape[0],)).copy()
        self.weights = weights
        self.bias = bias

    @property
    def n_inputs(self):
        return self.weights.shape[1]

    @property
    def n_outputs(self):
        return self.weights.shape[0]

    def predict(self, x):
        x = self.check_input(x)
        return x @ self.weights.T + self.bias

    def to_params(self) -> dict:
        return dict(weights=self.weights.tolist(), bias=self.bias.tolist())

    @classmethod
    def from_params(cls, params: dict) -> 'LinearModel':
        return cls(params['weights'], params['bias'])


class RuleStepModel(BaseBlackBox):
    """
    Axis-aligned step function, the typical surface of a rule base.

    Each input ``i`` is cut into ``len(thresholds[i]) + 1`` regions; a value equal
    to a threshold belongs to the upper region. ``levels`` holds the output value of
    every region combination and has shape ``(len(thresholds[0]) + 1, ...)``.
    """

    kind = 'rule'
    concurrent_safe = True

    def __init__(self, thresholds: Sequence[Sequence[float]], levels):
        thresholds = tuple(tuple(float(t) for t in ts) for ts in thresholds)
        if not thresholds:
            raise ValidationError('a rule model needs at least one input')
        for i, ts in enumerate(thresholds):
            if any(b <= a for a, b in zip(ts, ts[1:])):
                raise ValidationError('thresholds of input %d must be strictly increasing' % i)
        levels = np.asarray(levels, dtype=float)
        shape = tuple(len(ts) + 1 for ts in thresholds)
        if levels.shape != shape:
            raise ValidationError('levels must have shape %s to cover every region but got %s' % (shape, levels.shape))
        self.thresholds = thresholds
        self.levels = levels

    @classmethod
    def demo(cls) -> 'RuleStepModel':
        """Two inputs cut at 0.5, corners equal to those of ``0.3 x1 + 0.7 x2``."""
        return cls(([0.5], [0.5]), [[0., 0.7], [0.3, 1.]])

    @property
    def n_inputs(self):
        return len(self.thresholds)

    @property
    def n_outputs(self):
        return 1

    def predict(self, x):
        x = self.check_input(x)
        region = tuple(np.searchsorted(ts, x[:, i], side='right') for i, ts in enumerate(self.thresholds))
        return self.levels[region].reshape(-1, 1)

    def to_params(self) -> dict:
        return dict(thresholds=[list(ts) for ts in self.thresholds], levels=self.levels.tolist())

    @classmethod
    def from_params(cls, params: dict) -> 'RuleStepModel':
        return cls(params['thresholds'], params['levels'])


class NonlinearDemoModel(BaseBlackBox):
    """
    ``y = (sqrt(x1) + x2 ** 2) / 2`` on the unit square, output in [0, 1].
    Negative ``x1`` is treated as 0.
    """

    kind = 'nonlinear'
    concurrent_safe = True

    @property
    def n_inputs(self):
        return 2

    @property
    def n_outputs(self):
        return 1

    def predict(self, x):
        x = self.check_input(x)
        return ((np.sqrt(np.clip(x[:, 0], 0, None)) + x[:, 1]**2) / 2).reshape(-1, 1)

    def to_params(self) -> dict:
        return {}

    @classmethod
    def from_params(cls, params: dict) -> 'NonlinearDemoModel':
        return cls()


def unit_box_problem(model: BaseBlackBox, output_range: Tuple[float, float] = (0., 1.)) -> Problem:
    """
    Problem with every input named ``x1, x2, ...`` on [0, 1] and every output
    named ``y`` (or ``y1, y2, ...``) on ``output_range``.
    """
    inputs = [InputDescriptor('x%d' % (i + 1), i, 0., 1.) for i in range(model.n_inputs)]
    if model.n_outputs == 1:
        names = ['y']
    else:
        names = ['y%d' % (j + 1) for j in range(model.n_outputs)]
    outputs = [OutputDescriptor(n, j, *output_range) for j, n in enumerate(names)]
    return validate_problem(model, inputs, outputs)
