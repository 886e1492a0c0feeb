#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

import numpy as np
import pandas as pd
import pytest
import torch

from ciupy.core import TrainingError, ValidationError
from ciupy.model import LinearLayer, SequentialLinear, SmallMlp, train_mlp


@pytest.fixture(scope='module')
def data():
    rng = np.random.default_rng(0)
    x = rng.uniform(0., 10., (60, 2))
    y = (x.sum(axis=1, keepdims=True) / 20.)

    yield x, y
    print('test over')


def test_layer_1():
    layer = LinearLayer(3, 2)
    assert layer.linear.in_features == 3
    assert layer.linear.out_features == 2
    assert layer.linear.weight.dtype == torch.float64
    assert layer.activation.__class__.__name__ == 'Sigmoid'

    x = layer(torch.zeros(5, 3, dtype=torch.float64))
    assert x.size() == (5, 2)


def test_sequential_1():
    m = SequentialLinear(4, 3, h_neurons=(8,))
    assert m.neurons == (4, 8, 3)
    assert len(m.layers) == 2
    assert m.layers[0].linear.out_features == 8
    assert m(torch.ones(2, 4, dtype=torch.float64)).size() == (2, 3)

    assert len(SequentialLinear(4, 3).layers) == 1

    with pytest.raises(RuntimeError, match='illegal layer sizes'):
        SequentialLinear(4, 3, h_neurons=(0,))


def test_small_mlp_1():
    m = SmallMlp([2, 5, 3], input_min=[0., -1.], input_max=[10., 1.], seed=3)
    assert (m.n_inputs, m.n_outputs) == (2, 3)
    for v in m.state().values():
        assert np.all(np.abs(v) <= 0.5)
    assert m.state() == SmallMlp([2, 5, 3], seed=3).state()
    assert m.state() != SmallMlp([2, 5, 3], seed=4).state()

    assert m.scale([[10., 0.]]).numpy().tolist() == [[1., 0.5]]

    # far outside the training box the sigmoid output stays strictly inside (0, 1)
    far = np.random.default_rng(1).uniform(-100., 100., (500, 2))
    y = m.predict(far)
    assert y.shape == (500, 3)
    assert np.all((y > 0.) & (y < 1.))


def test_small_mlp_2():
    with pytest.raises(ValidationError, match='at least input and output'):
        SmallMlp([3])
    with pytest.raises(ValidationError, match='need 2 values'):
        SmallMlp([2, 1], input_min=[0., 0., 0.])


def test_train_mlp_1(data):
    x, y = data
    ret = train_mlp((x, y), hidden=[4], epochs=200, learning_rate=0.5, batch_size=8, progress_bar=None)
    assert isinstance(ret.model, SmallMlp)
    assert ret.model.layer_sizes == [2, 4, 1]
    assert isinstance(ret.training_info, pd.DataFrame)
    assert ret.training_info.columns.tolist() == ['i_epoch', 'train_loss']
    assert ret.training_info.shape[0] == 200
    assert ret.training_info.train_loss.iloc[-1] < ret.training_info.train_loss.iloc[0]
    assert ret.accuracy is None
    assert ret.mse < 0.02

    again = train_mlp((x, y), hidden=[4], epochs=200, learning_rate=0.5, batch_size=8, progress_bar=None)
    assert again.model.state() == ret.model.state()


def test_train_mlp_2(data):
    x, y = data
    ret = train_mlp((x, y), hidden=[3], epochs=3, learning_rate=0., progress_bar=None)
    assert ret.model.state() == SmallMlp([2, 3, 1], seed=0).state()

    labels = np.eye(2)[(x[:, 0] > 5).astype(int)]
    ret = train_mlp((x, labels), hidden=[4], epochs=5, progress_bar=None, classification=True)
    assert 0. <= ret.accuracy <= 1.


def test_train_mlp_3(data):
    x, y = data
    with pytest.raises(ValidationError, match='non-empty'):
        train_mlp((np.zeros((0, 2)), np.zeros((0, 1))), progress_bar=None)
    with pytest.raises(ValidationError, match='rows'):
        train_mlp((x, y[:10]), progress_bar=None)
    with pytest.raises(ValidationError, match='positive'):
        train_mlp((x, y), epochs=0, progress_bar=None)
    with pytest.raises(ValidationError, match='negative'):
        train_mlp((x, y), learning_rate=-1., progress_bar=None)

    with pytest.raises(TrainingError, match='non-finite') as e:
        train_mlp((x[:4], np.full((4, 1), 1e200)), epochs=3, progress_bar=None)
    assert e.value.epoch == 1


if __name__ == "__main__":
    pytest.main()
