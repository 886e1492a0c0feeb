#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

import math
from collections import OrderedDict, namedtuple
from typing import List, Optional, Sequence, Union

import numpy as np
import pandas as pd
import torch
from sklearn.metrics import accuracy_score, mean_squared_error

from ciupy.core.base import TrainingError, ValidationError
from ciupy.datatools.dataset import CLASSIFICATION, Dataset
from ciupy.model.sequential import SmallMlp
from ciupy.utils import config

__all__ = ['train_mlp', 'TrainingResult']

TrainingResult = namedtuple('TrainingResult', 'model training_info accuracy mse')


def train_mlp(dataset: Union[Dataset, tuple],
              hidden: Sequence[int] = None,
              epochs: int = None,
              learning_rate: float = None,
              seed: Optional[int] = 0,
              *,
              batch_size: int = None,
              classification: bool = None,
              progress_bar: Union[str, None] = 'auto') -> TrainingResult:
    """
    Train a :class:`SmallMlp` by minibatch gradient descent on the squared error.

    The loss of a batch is the mean over its rows of the summed squared error of all
    outputs. Rows are shuffled every epoch with a generator seeded by ``seed``, so
    training is deterministic.

    Parameters
    ----------
    dataset
        A :class:`Dataset` or a ``(x, y)`` pair of matrices.
    hidden
        Neurons per hidden layer. Default from config ``mlp_hidden``.
    epochs
        Passes over the data. Default from config ``mlp_epochs``.
    learning_rate
        Step size. Default from config ``mlp_learning_rate``.
    seed
        Seed of weight initialisation and shuffling.
    batch_size
        Rows per step. Default from config ``mlp_batch_size``.
    classification
        Report accuracy. Inferred from ``dataset.task`` for a :class:`Dataset`.
    progress_bar
        Show progress bar for the epochs. Can be 'auto', 'console', or ``None``.

    Returns
    -------
    TrainingResult
        ``(model, training_info, accuracy, mse)``; ``training_info`` holds the mean
        loss per epoch, ``accuracy`` is ``None`` for regression.
    """
    if isinstance(dataset, Dataset):
        x, y = dataset.x, dataset.y
        if classification is None:
            classification = dataset.task == CLASSIFICATION
    else:
        x, y = dataset
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if y.ndim == 1:
        y = y.reshape(-1, 1)
    if x.ndim != 2 or x.shape[0] == 0:
        raise ValidationError('training needs a non-empty (n, M) input matrix')
    if y.shape[0] != x.shape[0]:
        raise ValidationError('inputs have %d rows but targets have %d' % (x.shape[0], y.shape[0]))

    hidden = config('mlp_hidden') if hidden is None else hidden
    epochs = config('mlp_epochs') if epochs is None else epochs
    learning_rate = config('mlp_learning_rate') if learning_rate is None else learning_rate
    batch_size = config('mlp_batch_size') if batch_size is None else batch_size
    if epochs < 1 or batch_size < 1:
        raise ValidationError('epochs and batch_size must be positive')
    if learning_rate < 0:
        raise ValidationError('learning_rate must not be negative')

    model = SmallMlp([x.shape[1]] + list(hidden) + [y.shape[1]],
                     input_min=x.min(axis=0),
                     input_max=x.max(axis=0),
                     seed=seed)
    module = model.module
    optimizer = torch.optim.SGD(module.parameters(), lr=learning_rate)
    x_t = model.scale(x)
    y_t = torch.from_numpy(y)
    rng = np.random.default_rng(seed)
    training_info: List[OrderedDict] = []

    def _epoch(i_epoch):
        module.train()
        order = rng.permutation(x.shape[0])
        losses = []
        for start in range(0, x.shape[0], batch_size):
            idx = torch.from_numpy(order[start:start + batch_size])
            optimizer.zero_grad()
            loss = ((module(x_t[idx]) - y_t[idx])**2).sum(dim=1).mean()
            loss.backward()
            optimizer.step()
            losses.append(loss.item())
        mean_loss = float(np.mean(losses))
        if not math.isfinite(mean_loss):
            raise TrainingError('loss became non-finite at epoch %d, lower the learning rate' % i_epoch,
                                epoch=i_epoch)
        training_info.append(OrderedDict(i_epoch=i_epoch, train_loss=mean_loss))

    if progress_bar is not None:
        if progress_bar == 'auto':
            from tqdm.auto import tqdm
        else:
            from tqdm import tqdm

        with tqdm(total=epochs, desc='Training') as pbar:
            for i in range(1, epochs + 1):
                _epoch(i)
                pbar.update(1)
    else:
        for i in range(1, epochs + 1):
            _epoch(i)

    pred = model.predict(x)
    mse = float(mean_squared_error(y, pred))
    accuracy = None
    if classification:
        accuracy = float(accuracy_score(np.argmax(y, axis=1), np.argmax(pred, axis=1)))
    return TrainingResult(model=model, training_info=pd.DataFrame(data=training_info), accuracy=accuracy, mse=mse)
