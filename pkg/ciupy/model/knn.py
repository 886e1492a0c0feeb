#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

from typing import Optional, Sequence

import numpy as np
from sklearn.neighbors import NearestNeighbors

from ciupy.core.base import BaseBlackBox, ValidationError
from ciupy.datatools.dataset import Dataset
from ciupy.datatools.transform import range_scaler
from ciupy.utils import config

__all__ = ['KnnModel', 'knn_predict']


class KnnModel(BaseBlackBox):
    """
    k-nearest-neighbours black box.

    Distances are Euclidean after scaling every input to [0, 1] by the training
    min/max. A prediction is the mean target of the ``k`` nearest training rows,
    which for one-hot class targets is the class-frequency vector, so predictions
    never leave the range of the training targets.
    """

    kind = 'knn'
    concurrent_safe = True

    def __init__(self, x_train, y_train, k: Optional[int] = None, *, task: str = 'regression'):
        x_train = np.asarray(x_train, dtype=float)
        y_train = np.asarray(y_train, dtype=float)
        if y_train.ndim == 1:
            y_train = y_train.reshape(-1, 1)
        if x_train.ndim != 2 or x_train.shape[0] == 0:
            raise ValidationError('training inputs must be a non-empty (n, M) matrix')
        if y_train.shape[0] != x_train.shape[0]:
            raise ValidationError('inputs have %d rows but targets have %d' % (x_train.shape[0], y_train.shape[0]))
        k = config('knn_k') if k is None else int(k)
        if not 1 <= k <= x_train.shape[0]:
            raise ValidationError('k must be in [1, %d] but got %d' % (x_train.shape[0], k))

        self.x_train = x_train
        self.y_train = y_train
        self.k = k
        self.task = task
        self._scaler = range_scaler(x_train.min(axis=0), x_train.max(axis=0))
        self._nn = NearestNeighbors(n_neighbors=k).fit(self._scaler.transform(x_train))

    @classmethod
    def from_dataset(cls, dataset: Dataset, k: Optional[int] = None) -> 'KnnModel':
        return cls(dataset.x, dataset.y, k, task=dataset.task)

    @property
    def n_inputs(self):
        return self.x_train.shape[1]

    @property
    def n_outputs(self):
        return self.y_train.shape[1]

    def predict(self, x):
        x = self.check_input(x)
        _, idx = self._nn.kneighbors(self._scaler.transform(x))
        return self.y_train[idx].mean(axis=1)

    def to_params(self) -> dict:
        return dict(x_train=self.x_train.tolist(), y_train=self.y_train.tolist(), k=self.k, task=self.task)

    @classmethod
    def from_params(cls, params: dict) -> 'KnnModel':
        return cls(params['x_train'], params['y_train'], params['k'], task=params.get('task', 'regression'))


def knn_predict(model: KnnModel, x: Sequence[float]) -> np.ndarray:
    """Prediction for a single input vector."""
    return model.predict(np.asarray(x, dtype=float).reshape(1, -1))[0]
