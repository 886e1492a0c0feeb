#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.spatial import cKDTree

from ciupy.core.base import SamplingError, ValidationError
from ciupy.core.descriptor import CATEGORICAL, CONTINUOUS, ONE_HOT, Context, IndexSet, InputDescriptor
from ciupy.datatools.transform import range_scaler
from ciupy.utils import config

__all__ = ['SamplingConfig', 'SampleMatrix', 'generate_samples', 'correct_one_hot', 'filter_unrealistic']


@dataclass(frozen=True)
class SamplingConfig(object):
    """
    Parameters of the set of representative input vectors.

    ``n`` random rows are drawn; the context row (``include_context``) and, for each
    studied continuous input, a row at its minimum and one at its maximum
    (``include_extremes``) are added on top of them.
    ``filter_distance`` enables removal of rows too far from the training data.
    """
    n: int = 1000
    seed: Optional[int] = 0
    include_context: bool = True
    include_extremes: bool = True
    filter_distance: Optional[float] = None

    def __post_init__(self):
        if int(self.n) < 1:
            raise ValidationError('sample count n must be at least 1 but got %s' % self.n)
        object.__setattr__(self, 'n', int(self.n))
        if self.filter_distance is not None and not self.filter_distance > 0:
            raise ValidationError('filter_distance must be positive but got %s' % self.filter_distance)

    @classmethod
    def from_config(cls, **overrides) -> 'SamplingConfig':
        """Defaults from the package configuration, updated by ``overrides``."""
        params = dict(n=config('n_samples'),
                      seed=config('seed'),
                      include_context=config('include_context'),
                      include_extremes=config('include_extremes'))
        params.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**params)


@dataclass(frozen=True)
class SampleMatrix(object):
    """
    The set of representative input vectors for a context and a studied index set.

    Rows are laid out as ``[anchor row] + extreme rows + random rows``; ``anchor`` is
    the row index of the unmodified context, or ``None``.
    """
    rows: np.ndarray
    studied: IndexSet
    base_context: Context
    anchor: Optional[int]
    n_extreme: int
    n_random: int
    seed: Optional[int] = None

    def __post_init__(self):
        rows = np.array(self.rows, dtype=float)
        rows.setflags(write=False)
        object.__setattr__(self, 'rows', rows)
        if rows.ndim != 2 or rows.shape[0] < 1:
            raise SamplingError('a sample matrix needs at least one row')
        if rows.shape[1] != len(self.base_context):
            raise SamplingError('rows have %d columns but the context has %d values' %
                                (rows.shape[1], len(self.base_context)))

    @property
    def n_rows(self) -> int:
        return self.rows.shape[0]

    @property
    def n_fixed(self) -> int:
        """Number of leading rows that are not random draws."""
        return self.n_extreme + (0 if self.anchor is None else 1)

    @property
    def contains_context(self) -> bool:
        return self.anchor is not None

    def __len__(self):
        return self.n_rows


def _descriptor_map(inputs: Sequence[InputDescriptor], studied: IndexSet) -> Dict[int, InputDescriptor]:
    descs = {d.index: d for d in inputs}
    missing = [i for i in studied if i not in descs]
    if missing:
        raise SamplingError('no input descriptor for studied indices %s' % missing)
    return descs


def _one_hot_groups(inputs: Sequence[InputDescriptor]) -> Dict[str, Tuple[int, ...]]:
    groups: Dict[str, List[int]] = {}
    for d in inputs:
        if d.kind == ONE_HOT:
            groups.setdefault(d.group, []).append(d.index)
    return {k: tuple(v) for k, v in groups.items()}


def _studied_groups(inputs: Sequence[InputDescriptor], studied: IndexSet) -> Dict[str, Tuple[int, ...]]:
    ret = {}
    for g, members in _one_hot_groups(inputs).items():
        inside = [m for m in members if m in studied]
        if not inside:
            continue
        if len(inside) != len(members):
            raise SamplingError('one-hot group <%s> is only partially studied (%s of %s); '
                                'perturbing part of a one-hot group is incoherent' % (g, inside, list(members)))
        ret[g] = members
    return ret


def generate_samples(context: Context, studied: IndexSet, inputs: Sequence[InputDescriptor],
                     config: SamplingConfig) -> SampleMatrix:
    """
    Build the set of representative input vectors.

    Every row is a copy of ``context`` whose studied inputs are replaced by random
    values: continuous inputs uniformly on ``[min_value, max_value]``, categorical
    inputs uniformly among their categories, one-hot groups by a uniformly chosen hot
    member. Random rows come from a single uniform draw in row-major order, so the
    first ``n`` rows of a larger sample set equal the sample set of size ``n``.

    Parameters
    ----------
    context
        The instance being explained.
    studied
        Inputs to perturb.
    inputs
        Input descriptors, at least one for each studied index.
    config
        Sampling parameters.

    Returns
    -------
    SampleMatrix
    """
    studied = IndexSet.of(studied)
    studied.check(len(context))
    descs = _descriptor_map(inputs, studied)
    groups = _studied_groups(inputs, studied)
    base = context.as_array()

    rng = np.random.default_rng(config.seed)
    u = rng.random((config.n, len(studied)))
    random_rows = np.tile(base, (config.n, 1))
    for j, idx in enumerate(studied):
        d = descs[idx]
        if d.kind == CATEGORICAL:
            cats = np.asarray(d.categories)
            pick = np.minimum((u[:, j] * len(cats)).astype(int), len(cats) - 1)
            random_rows[:, idx] = cats[pick]
        elif d.kind == ONE_HOT:
            random_rows[:, idx] = u[:, j]
        else:
            random_rows[:, idx] = d.min_value + u[:, j] * d.span

    fixed = []
    if config.include_context:
        fixed.append(base.copy())
    n_extreme = 0
    if config.include_extremes:
        for idx in studied:
            d = descs[idx]
            if d.kind != CONTINUOUS:
                continue
            for v in (d.min_value, d.max_value):
                row = base.copy()
                row[idx] = v
                fixed.append(row)
                n_extreme += 1

    rows = np.vstack(fixed + [random_rows]) if fixed else random_rows
    samples = SampleMatrix(rows=rows,
                           studied=studied,
                           base_context=context,
                           anchor=0 if config.include_context else None,
                           n_extreme=n_extreme,
                           n_random=config.n,
                           seed=config.seed)
    if groups:
        samples = correct_one_hot(samples, inputs)
    return samples


def correct_one_hot(samples: SampleMatrix, inputs: Sequence[InputDescriptor]) -> SampleMatrix:
    """
    Make every random row a valid one-hot vector for each studied one-hot group.

    The member with the largest raw value becomes 1 and the others 0. Raw values of a
    freshly generated sample set are i.i.d. uniform, so the hot member is uniformly
    distributed; rows that are already one-hot keep their hot member.
    """
    groups = _studied_groups(inputs, samples.studied)
    if not groups:
        raise SamplingError('no one-hot group intersects the studied inputs %s' % samples.studied.to_list())

    rows = np.array(samples.rows)
    start = samples.n_fixed
    for members in groups.values():
        cols = list(members)
        block = rows[start:, cols]
        hot = np.argmax(block, axis=1)
        fixed = np.zeros_like(block)
        fixed[np.arange(block.shape[0]), hot] = 1.
        rows[start:, cols] = fixed
    return replace(samples, rows=rows)


def filter_unrealistic(samples: SampleMatrix, training_data: np.ndarray, threshold: float,
                       inputs: Sequence[InputDescriptor]) -> SampleMatrix:
    """
    Remove rows too far from every training example.

    Distances are Euclidean after scaling each input to [0, 1] by its descriptor range.
    A row is kept when its distance to the nearest training row is at most ``threshold``.
    The context row is never removed.

    Parameters
    ----------
    samples
        Sample set to filter.
    training_data
        ``(n, M)`` matrix of training inputs.
    threshold
        Largest accepted normalised distance.
    inputs
        Input descriptors, one per column.

    Returns
    -------
    SampleMatrix
    """
    training_data = np.asarray(training_data, dtype=float)
    if training_data.ndim != 2 or training_data.shape[0] == 0:
        raise SamplingError('training data must be a non-empty matrix')
    if not threshold > 0:
        raise SamplingError('filter threshold must be positive but got %s' % threshold)
    if training_data.shape[1] != samples.rows.shape[1] or len(inputs) != samples.rows.shape[1]:
        raise SamplingError('training data, samples and descriptors disagree on the number of inputs')

    ordered = sorted(inputs, key=lambda d: d.index)
    scaler = range_scaler([d.min_value for d in ordered], [d.max_value for d in ordered])
    tree = cKDTree(scaler.transform(training_data))
    dist, _ = tree.query(scaler.transform(samples.rows), k=1)

    keep = dist <= threshold
    # the anchor, when present, is always row 0
    n_anchor = 0 if samples.anchor is None else 1
    keep[:n_anchor] = True
    if not keep[n_anchor:].any():
        raise SamplingError('all sample rows were filtered out with threshold %s; '
                            'relax the threshold or disable filtering' % threshold)

    n_fixed = samples.n_fixed
    return replace(samples,
                   rows=samples.rows[keep],
                   n_extreme=int(keep[n_anchor:n_fixed].sum()),
                   n_random=int(keep[n_fixed:].sum()))
