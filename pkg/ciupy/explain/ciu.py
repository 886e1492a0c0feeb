#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

import itertools
from typing import List, Optional, Sequence

import numpy as np

from ciupy.core.base import BaseBlackBox, CIUError, ModelEvaluationError, ValidationError
from ciupy.core.descriptor import (CATEGORICAL, ONE_HOT, Context, IndexSet, InputDescriptor, OutputDescriptor,
                                   OutputRangeEstimate)
from ciupy.sampling import SampleMatrix

__all__ = [
    'NEUTRAL_CU', 'evaluate_samples', 'estimate_output_range', 'contextual_importance', 'contextual_utility',
    'generalized_contextual_importance', 'grid_output_range'
]

NEUTRAL_CU = 0.5


def evaluate_samples(model: BaseBlackBox, rows: np.ndarray) -> np.ndarray:
    """
    Evaluate ``model`` on all ``rows`` in one batch.

    When the batch call fails, the rows are evaluated one by one to locate the
    failing row, which is reported by :class:`ModelEvaluationError`.
    ciupy errors raised by the model propagate unchanged.

    Returns
    -------
    np.ndarray
        ``(n, n_outputs)`` matrix.
    """
    rows = np.asarray(rows, dtype=float)
    try:
        ret = np.asarray(model.predict(rows), dtype=float)
    except CIUError:
        raise
    except Exception as e:
        for i, row in enumerate(rows):
            try:
                model.predict(row.reshape(1, -1))
            except Exception as e_:
                raise ModelEvaluationError('model evaluation failed at sample row %d: %s' % (i, e_), row=i) from e_
        raise ModelEvaluationError('model evaluation failed: %s' % e) from e

    if ret.ndim == 1 and model.n_outputs == 1:
        ret = ret.reshape(-1, 1)
    if ret.shape != (rows.shape[0], model.n_outputs):
        raise ModelEvaluationError('model returned shape %s for %d rows and %d outputs' %
                                   (ret.shape, rows.shape[0], model.n_outputs))
    bad = ~np.isfinite(ret).all(axis=1)
    if bad.any():
        row = int(np.argmax(bad))
        raise ModelEvaluationError('model returned non-finite output at sample row %d' % row, row=row)
    return ret


def estimate_output_range(model: BaseBlackBox,
                          samples: SampleMatrix,
                          output_index: int,
                          predictions: Optional[np.ndarray] = None) -> OutputRangeEstimate:
    """
    Estimated range ``[cmin, cmax]`` of one output over a sample set.

    Parameters
    ----------
    model
        The black box.
    samples
        Sample set, anchor and extreme rows included.
    output_index
        Output to look at.
    predictions
        Outputs of ``model`` for ``samples.rows`` when already computed.

    Returns
    -------
    OutputRangeEstimate
    """
    if not 0 <= output_index < model.n_outputs:
        raise ValidationError('output index %d is out of range [0, %d)' % (output_index, model.n_outputs))
    if predictions is None:
        predictions = evaluate_samples(model, samples.rows)
    y = np.asarray(predictions, dtype=float)[:, output_index]
    y_context = None if samples.anchor is None else float(y[samples.anchor])
    return OutputRangeEstimate(cmin=float(y.min()),
                               cmax=float(y.max()),
                               n_samples=int(y.shape[0]),
                               contains_context=samples.contains_context,
                               y_context=y_context,
                               studied=samples.studied)


def contextual_importance(estimate: OutputRangeEstimate, output: OutputDescriptor) -> float:
    """Width of the estimated range relative to ``[absmin, absmax]``. Not clamped to 1."""
    return estimate.width / output.span


def contextual_utility(y_context: float, estimate: OutputRangeEstimate) -> float:
    """
    Position of ``y_context`` inside the estimated range, in [0, 1].

    A zero-width range gives :data:`NEUTRAL_CU`.
    """
    if not estimate.contains_context:
        raise ValidationError('contextual utility needs a range estimated with the context row included')
    y_context = float(y_context)
    if not estimate.cmin <= y_context <= estimate.cmax:
        raise ValidationError('y(C)=%s lies outside the estimated range [%s, %s]' %
                              (y_context, estimate.cmin, estimate.cmax))
    if estimate.degenerate:
        return NEUTRAL_CU
    return (y_context - estimate.cmin) / estimate.width


def generalized_contextual_importance(child: OutputRangeEstimate, parent: OutputRangeEstimate) -> float:
    """
    Width of the ``child`` range relative to the range of a parent concept.

    The child's studied inputs must be a subset of the parent's.
    """
    if child.studied is not None and parent.studied is not None and not child.studied.issubset(parent.studied):
        raise ValidationError('studied inputs %s are not a subset of the parent inputs %s' %
                              (child.studied.to_list(), parent.studied.to_list()))
    if parent.degenerate:
        raise ValidationError('importance relative to a parent with a zero-width range is undefined')
    return child.width / parent.width


def _grid_axes(context: Context, studied: IndexSet, inputs: Sequence[InputDescriptor],
               resolution: int) -> List[List[dict]]:
    # one axis per continuous/categorical input, one per studied one-hot group
    descs = {d.index: d for d in inputs}
    axes, seen_groups = [], set()
    for idx in studied:
        d = descs[idx]
        if d.kind == ONE_HOT:
            if d.group in seen_groups:
                continue
            seen_groups.add(d.group)
            members = [m.index for m in inputs if m.kind == ONE_HOT and m.group == d.group]
            axes.append([{m: float(m == hot) for m in members} for hot in members])
        elif d.kind == CATEGORICAL:
            axes.append([{idx: c} for c in d.categories])
        else:
            axes.append([{idx: v} for v in np.linspace(d.min_value, d.max_value, resolution)])
    return axes


def grid_output_range(model: BaseBlackBox,
                      context: Context,
                      studied: IndexSet,
                      inputs: Sequence[InputDescriptor],
                      output_index: int,
                      *,
                      resolution: int = 10000,
                      max_points: int = 10**7) -> OutputRangeEstimate:
    """
    Brute-force output range on a dense grid over the studied inputs.

    Continuous inputs get ``resolution`` evenly spaced values, categorical inputs
    their categories and one-hot groups each of their members. The context is
    evaluated too, so the result always contains it.

    Parameters
    ----------
    model
        The black box.
    context
        Values of the inputs that are not studied.
    studied
        Inputs spanning the grid.
    inputs
        Input descriptors.
    output_index
        Output to look at.
    resolution
        Grid points per continuous input.
    max_points
        Refuse grids larger than this.
    """
    studied = IndexSet.of(studied)
    studied.check(len(context))
    if resolution < 2:
        raise ValidationError('grid resolution must be at least 2')
    axes = _grid_axes(context, studied, inputs, resolution)
    n_points = int(np.prod([len(a) for a in axes]))
    if n_points > max_points:
        raise ValidationError('grid of %d points exceeds the limit of %d, lower the resolution' %
                              (n_points, max_points))

    base = context.as_array()
    rows = np.tile(base, (n_points + 1, 1))
    for r, combo in enumerate(itertools.product(*axes), start=1):
        for assign in combo:
            for idx, v in assign.items():
                rows[r, idx] = v
    predictions = evaluate_samples(model, rows)
    samples = SampleMatrix(rows=rows, studied=studied, base_context=context, anchor=0, n_extreme=0,
                           n_random=n_points, seed=None)
    return estimate_output_range(model, samples, output_index, predictions)
