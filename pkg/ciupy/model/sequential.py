#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

from typing import Optional, Sequence

import numpy as np
import torch
from torch import nn

from ciupy.core.base import BaseBlackBox, ValidationError

__all__ = ['LinearLayer', 'SequentialLinear', 'SmallMlp']


class LinearLayer(nn.Module):
    """
    Fully connected layer followed by a sigmoid.
    """

    def __init__(self, in_features: int, out_features: int):
        super().__init__()
        self.linear = nn.Linear(in_features, out_features).double()
        self.activation = nn.Sigmoid()

    def forward(self, x):
        return self.activation(self.linear(x))


class SequentialLinear(nn.Module):
    """
    Stack of :class:`LinearLayer`, sigmoid everywhere including the output layer.
    """

    def __init__(self, in_features: int, out_features: int, *, h_neurons: Sequence[int] = ()):
        """
        Parameters
        ----------
        in_features
            Size of input.
        out_features
            Size of output.
        h_neurons
            Number of neurons in hidden layers.
        """
        super().__init__()
        neurons = (in_features,) + tuple(int(n) for n in h_neurons) + (out_features,)
        if any(n < 1 for n in neurons):
            raise RuntimeError('illegal layer sizes %s, every layer needs at least one neuron' % (neurons,))
        self.neurons = neurons
        self.layers = nn.ModuleList([LinearLayer(neurons[i], neurons[i + 1]) for i in range(len(neurons) - 1)])

    def forward(self, x):
        for layer in self.layers:
            x = layer(x)
        return x


class SmallMlp(BaseBlackBox):
    """
    Multilayer perceptron with sigmoid hidden and output units, so every output lies in
    [0, 1] for any input. Inputs are scaled to [0, 1] by ``input_min``/``input_max``
    before the first layer. Weights start uniform in [-0.5, 0.5] drawn from ``seed``.

    Train it with :func:`ciupy.model.train_mlp`.
    """

    kind = 'mlp'

    def __init__(self,
                 layer_sizes: Sequence[int],
                 *,
                 input_min: Optional[Sequence[float]] = None,
                 input_max: Optional[Sequence[float]] = None,
                 seed: Optional[int] = 0):
        layer_sizes = [int(n) for n in layer_sizes]
        if len(layer_sizes) < 2:
            raise ValidationError('layer_sizes needs at least input and output sizes but got %s' % layer_sizes)
        self.layer_sizes = layer_sizes
        self.seed = seed

        m = layer_sizes[0]
        self.input_min = np.zeros(m) if input_min is None else np.asarray(input_min, dtype=float)
        self.input_max = np.ones(m) if input_max is None else np.asarray(input_max, dtype=float)
        if self.input_min.shape != (m,) or self.input_max.shape != (m,):
            raise ValidationError('input_min and input_max need %d values' % m)

        self.module = SequentialLinear(layer_sizes[0], layer_sizes[-1], h_neurons=layer_sizes[1:-1])
        rng = np.random.default_rng(seed)
        with torch.no_grad():
            for p in self.module.parameters():
                p.copy_(torch.from_numpy(rng.uniform(-0.5, 0.5, size=tuple(p.shape))))

    @property
    def n_inputs(self):
        return self.layer_sizes[0]

    @property
    def n_outputs(self):
        return self.layer_sizes[-1]

    def scale(self, x: np.ndarray) -> torch.Tensor:
        """Inputs scaled to [0, 1] by the stored ranges, as a tensor."""
        span = self.input_max - self.input_min
        span = np.where(span > 0, span, 1.)
        return torch.from_numpy((np.asarray(x, dtype=float) - self.input_min) / span)

    def predict(self, x):
        x = self.check_input(x)
        self.module.eval()
        with torch.no_grad():
            return self.module(self.scale(x)).numpy().copy()

    def state(self) -> dict:
        """Weights and biases as nested lists, layer by layer."""
        return {k: v.detach().numpy().tolist() for k, v in self.module.state_dict().items()}

    def to_params(self) -> dict:
        return dict(layer_sizes=list(self.layer_sizes),
                    input_min=self.input_min.tolist(),
                    input_max=self.input_max.tolist(),
                    seed=self.seed,
                    state=self.state())

    @classmethod
    def from_params(cls, params: dict) -> 'SmallMlp':
        model = cls(params['layer_sizes'], input_min=params['input_min'], input_max=params['input_max'],
                    seed=params.get('seed'))
        state = {k: torch.tensor(v, dtype=torch.float64) for k, v in params['state'].items()}
        model.module.load_state_dict(state)
        return model
