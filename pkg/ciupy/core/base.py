#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

from abc import ABCMeta, abstractmethod
from typing import Callable

import numpy as np
from sklearn.base import BaseEstimator

__all__ = [
    'CIUError', 'ValidationError', 'SamplingError', 'ModelEvaluationError', 'ExternalModelError', 'DatasetError',
    'VocabularyError', 'TrainingError', 'BaseBlackBox', 'FunctionModel'
]


class CIUError(Exception):
    """Base exception for all ciupy errors"""
    pass


class ValidationError(CIUError, ValueError):
    """Malformed descriptors, contexts, index sets or problems"""
    pass


class SamplingError(CIUError):
    """Sample set construction, correction or filtering failed"""
    pass


class ModelEvaluationError(CIUError):
    """A black-box evaluation failed or returned non-finite values"""

    def __init__(self, msg: str, row: int = None):
        super().__init__(msg)
        self.row = row


class ExternalModelError(CIUError):
    """Failure of an external model process"""
    pass


class DatasetError(CIUError):
    """Dataset ingestion failed"""

    def __init__(self, msg: str, row: int = None, column: str = None):
        super().__init__(msg)
        self.row = row
        self.column = column


class VocabularyError(CIUError):
    """Malformed concept vocabulary"""
    pass


class TrainingError(CIUError):
    """Model training diverged"""

    def __init__(self, msg: str, epoch: int = None):
        super().__init__(msg)
        self.epoch = epoch


class BaseBlackBox(BaseEstimator, metaclass=ABCMeta):
    """
    Abstract black-box model, a deterministic transformation ``y = f(x)``.

    **Implementing a New Black Box**

    - ``n_inputs`` and ``n_outputs`` - the arities of the transformation. **Implement as properties**.
    - ``predict`` - takes an ``(n, n_inputs)`` matrix and returns an ``(n, n_outputs)`` matrix.

    ``predict`` must not change the state of the model: calling it twice with the
    same rows must give the same outputs.
    Set the class attribute ``concurrent_safe`` to ``True`` when ``predict`` may be
    called from several threads at once.
    """

    concurrent_safe = False

    @property
    @abstractmethod
    def n_inputs(self) -> int:
        """Number of inputs M."""

    @property
    @abstractmethod
    def n_outputs(self) -> int:
        """Number of outputs."""

    @abstractmethod
    def predict(self, x: np.ndarray) -> np.ndarray:
        """
        Evaluate the model.

        Parameters
        ----------
        x
            Input matrix with shape ``(n, n_inputs)``.

        Returns
        -------
        np.ndarray
            Output matrix with shape ``(n, n_outputs)``.
        """

    def check_input(self, x) -> np.ndarray:
        """Coerce ``x`` to a 2-d float matrix and check its width."""
        x = np.asarray(x, dtype=float)
        if x.ndim == 1:
            x = x.reshape(1, -1)
        if x.ndim != 2 or x.shape[1] != self.n_inputs:
            raise ValidationError('%s expects %d inputs but got an array of shape %s' %
                                  (self.__class__.__name__, self.n_inputs, x.shape))
        return x

    def __call__(self, x) -> np.ndarray:
        return self.predict(x)


class FunctionModel(BaseBlackBox):
    """
    Wrap a caller-supplied vectorised function as a black box.

    ::

        >>> model = FunctionModel(lambda x: x.sum(axis=1, keepdims=True), n_inputs=3, n_outputs=1)
    """

    def __init__(self, func: Callable[[np.ndarray], np.ndarray], n_inputs: int, n_outputs: int = 1, *,
                 concurrent_safe: bool = False):
        if n_inputs < 1 or n_outputs < 1:
            raise ValidationError('model arities must be positive')
        self.func = func
        self._n_inputs = n_inputs
        self._n_outputs = n_outputs
        self.concurrent_safe = concurrent_safe

    @property
    def n_inputs(self):
        return self._n_inputs

    @property
    def n_outputs(self):
        return self._n_outputs

    def predict(self, x):
        x = self.check_input(x)
        y = np.asarray(self.func(x), dtype=float)
        return y.reshape(x.shape[0], self._n_outputs)
