#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

import warnings
from collections import OrderedDict
from typing import Dict, Optional, Sequence, Tuple, Union

import numpy as np

from ciupy.core.base import BaseBlackBox, ValidationError
from ciupy.core.descriptor import ONE_HOT, Context, IndexSet, InputDescriptor, OutputDescriptor

__all__ = ['Problem', 'validate_problem']


class Problem(object):
    """
    A validated bundle of a black-box model and the descriptors of its inputs and outputs.
    Build it with :func:`validate_problem`.
    """

    def __init__(self, model: BaseBlackBox, inputs: Tuple[InputDescriptor, ...], outputs: Tuple[OutputDescriptor, ...],
                 training_data: Optional[np.ndarray] = None):
        self._model = model
        self._inputs = inputs
        self._outputs = outputs
        self._training_data = training_data

        groups = OrderedDict()
        for d in inputs:
            if d.kind == ONE_HOT:
                groups.setdefault(d.group, []).append(d.index)
        self._groups = OrderedDict((k, tuple(v)) for k, v in groups.items())

    @property
    def model(self) -> BaseBlackBox:
        return self._model

    @property
    def inputs(self) -> Tuple[InputDescriptor, ...]:
        return self._inputs

    @property
    def outputs(self) -> Tuple[OutputDescriptor, ...]:
        return self._outputs

    @property
    def training_data(self) -> Optional[np.ndarray]:
        return self._training_data

    @property
    def n_inputs(self) -> int:
        return len(self._inputs)

    @property
    def n_outputs(self) -> int:
        return len(self._outputs)

    @property
    def one_hot_groups(self) -> Dict[str, Tuple[int, ...]]:
        return dict(self._groups)

    @property
    def all_inputs(self) -> IndexSet:
        return IndexSet(tuple(range(self.n_inputs)))

    def input_index(self, key: Union[int, str]) -> int:
        """Resolve an input by 0-based index, numeric string or name."""
        return self._resolve(key, self._inputs, 'input')

    def output_index(self, key: Union[int, str]) -> int:
        """Resolve an output by 0-based index, numeric string or name."""
        return self._resolve(key, self._outputs, 'output')

    @staticmethod
    def _resolve(key, descriptors, what):
        if isinstance(key, (int, np.integer)) or (isinstance(key, str) and key.strip().isdigit()):
            idx = int(key)
            if not 0 <= idx < len(descriptors):
                raise ValidationError('%s index %d is out of range [0, %d)' % (what, idx, len(descriptors)))
            return idx
        lowered = {d.name.lower(): d.index for d in descriptors}
        name = str(key).strip().lower()
        if name not in lowered:
            raise ValidationError('no %s named <%s>, available: %s' % (what, key, [d.name for d in descriptors]))
        return lowered[name]

    def check_context(self, context: Union[Context, Sequence[float]]) -> Context:
        """
        Check arity of ``context``. Values outside the descriptor ranges only raise a
        :class:`RuntimeWarning`, as such contexts are legitimate questions to a model.
        """
        if not isinstance(context, Context):
            context = Context(tuple(np.asarray(context, dtype=float).ravel()))
        if len(context) != self.n_inputs:
            raise ValidationError('context has %d values but the model has %d inputs' % (len(context), self.n_inputs))
        outside = [d.name for d, v in zip(self._inputs, context.values) if not d.contains(v)]
        if outside:
            warnings.warn('context values of %s lie outside their descriptor ranges' % outside, RuntimeWarning)
        return context

    def __repr__(self):
        return '<%s> %s: %d inputs -> %d outputs' % (self.__class__.__name__, self._model.__class__.__name__,
                                                    self.n_inputs, self.n_outputs)


def validate_problem(model: BaseBlackBox,
                     inputs: Sequence[InputDescriptor],
                     outputs: Sequence[OutputDescriptor],
                     *,
                     training_data: Optional[np.ndarray] = None) -> Problem:
    """
    Check a model against its descriptors and bundle them.

    Parameters
    ----------
    model
        The black box.
    inputs
        One descriptor per model input, ``inputs[k].index == k``.
    outputs
        One descriptor per model output, ``outputs[k].index == k``.
    training_data
        Optional ``(n, M)`` matrix of training inputs used to filter unrealistic samples.

    Returns
    -------
    Problem
    """
    if not isinstance(model, BaseBlackBox):
        raise TypeError('parameter `model` must be a instance of <BaseBlackBox> but got %s' % type(model))
    inputs = tuple(inputs)
    outputs = tuple(outputs)

    if len(inputs) != model.n_inputs:
        raise ValidationError('arity mismatch: model has %d inputs but %d input descriptors were given' %
                              (model.n_inputs, len(inputs)))
    if len(outputs) != model.n_outputs:
        raise ValidationError('arity mismatch: model has %d outputs but %d output descriptors were given' %
                              (model.n_outputs, len(outputs)))

    for k, d in enumerate(inputs):
        if not isinstance(d, InputDescriptor):
            raise TypeError('input descriptor %d must be a <InputDescriptor> but got %s' % (k, type(d)))
        if d.index != k:
            raise ValidationError('input descriptor <%s> has index %d but sits at position %d' % (d.name, d.index, k))
    for k, d in enumerate(outputs):
        if not isinstance(d, OutputDescriptor):
            raise TypeError('output descriptor %d must be a <OutputDescriptor> but got %s' % (k, type(d)))
        if d.index != k:
            raise ValidationError('output descriptor <%s> has index %d but sits at position %d' % (d.name, d.index, k))

    names = [d.name for d in inputs]
    if len(set(names)) != len(names):
        raise ValidationError('input names must be unique')

    groups: Dict[str, list] = {}
    for d in inputs:
        if d.kind == ONE_HOT:
            groups.setdefault(d.group, []).append(d.index)
    for g, members in groups.items():
        if len(members) < 2:
            raise ValidationError('one-hot group <%s> must have at least 2 members but has %d' % (g, len(members)))

    if training_data is not None:
        training_data = np.asarray(training_data, dtype=float)
        if training_data.ndim != 2 or training_data.shape[1] != len(inputs) or training_data.shape[0] == 0:
            raise ValidationError('training data must be a non-empty (n, %d) matrix but got shape %s' %
                                  (len(inputs), training_data.shape))

    return Problem(model, inputs, outputs, training_data=training_data)
