#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

import math
from dataclasses import dataclass, field, asdict
from typing import Iterable, Optional, Tuple, Union

import numpy as np

from ciupy.core.base import ValidationError

__all__ = [
    'CONTINUOUS', 'CATEGORICAL', 'ONE_HOT', 'InputDescriptor', 'OutputDescriptor', 'Context', 'IndexSet',
    'OutputRangeEstimate', 'CiuResult'
]

CONTINUOUS = 'continuous'
CATEGORICAL = 'categorical'
ONE_HOT = 'one_hot'


@dataclass(frozen=True)
class InputDescriptor(object):
    """
    Description of one model input: its name, position, kind and the value range
    used when the input is perturbed.

    ``kind`` is ``continuous``, ``categorical`` (``categories`` required) or
    ``one_hot`` (member of the one-hot group ``group``, range [0, 1]).
    """
    name: str
    index: int
    min_value: float
    max_value: float
    kind: str = CONTINUOUS
    categories: Optional[Tuple[float, ...]] = None
    group: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, 'min_value', float(self.min_value))
        object.__setattr__(self, 'max_value', float(self.max_value))
        if self.categories is not None:
            object.__setattr__(self, 'categories', tuple(float(c) for c in self.categories))

        if self.index < 0:
            raise ValidationError('input <%s> has a negative index' % self.name)
        if not self.min_value <= self.max_value:
            raise ValidationError('input <%s>: min_value %s is greater than max_value %s' %
                                  (self.name, self.min_value, self.max_value))
        if self.kind == CATEGORICAL:
            if not self.categories:
                raise ValidationError('categorical input <%s> needs at least one category' % self.name)
            for c in self.categories:
                if not self.min_value <= c <= self.max_value:
                    raise ValidationError('category %s of input <%s> is outside [%s, %s]' %
                                          (c, self.name, self.min_value, self.max_value))
        elif self.kind == ONE_HOT:
            if self.group is None:
                raise ValidationError('one-hot input <%s> needs a group id' % self.name)
            if (self.min_value, self.max_value) != (0., 1.):
                raise ValidationError('one-hot group <%s>: member <%s> must have range [0, 1]' %
                                      (self.group, self.name))
        elif self.kind != CONTINUOUS:
            raise ValidationError('unknown input kind <%s> for input <%s>' % (self.kind, self.name))

    @property
    def span(self) -> float:
        return self.max_value - self.min_value

    def contains(self, value: float) -> bool:
        return self.min_value <= value <= self.max_value

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.categories is not None:
            d['categories'] = list(self.categories)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> 'InputDescriptor':
        return cls(**d)


@dataclass(frozen=True)
class OutputDescriptor(object):
    """
    One model output and its pre-defined value range ``[absmin, absmax]``.
    """
    name: str
    index: int
    absmin: float = 0.
    absmax: float = 1.

    def __post_init__(self):
        object.__setattr__(self, 'absmin', float(self.absmin))
        object.__setattr__(self, 'absmax', float(self.absmax))
        if self.index < 0:
            raise ValidationError('output <%s> has a negative index' % self.name)
        if not self.absmin < self.absmax:
            raise ValidationError('output <%s>: absmin %s must be strictly lower than absmax %s' %
                                  (self.name, self.absmin, self.absmax))

    @property
    def span(self) -> float:
        return self.absmax - self.absmin

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> 'OutputDescriptor':
        return cls(**d)


@dataclass(frozen=True)
class Context(object):
    """The input vector C being explained."""
    values: Tuple[float, ...]

    def __post_init__(self):
        values = tuple(float(v) for v in np.asarray(self.values, dtype=float).ravel())
        if len(values) == 0:
            raise ValidationError('context must not be empty')
        if not all(math.isfinite(v) for v in values):
            raise ValidationError('context values must be finite')
        object.__setattr__(self, 'values', values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, item):
        return self.values[item]

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=float)

    def to_dict(self) -> dict:
        return dict(values=list(self.values))

    @classmethod
    def from_dict(cls, d: dict) -> 'Context':
        return cls(tuple(d['values']))


@dataclass(frozen=True)
class IndexSet(object):
    """Ordered set of distinct, 0-based input indices."""
    indices: Tuple[int, ...]

    def __post_init__(self):
        if isinstance(self.indices, (int, np.integer)):
            indices = (int(self.indices),)
        else:
            indices = tuple(int(i) for i in self.indices)
        if len(indices) == 0:
            raise ValidationError('index set must not be empty')
        if len(set(indices)) != len(indices):
            raise ValidationError('index set %s contains duplicates' % (indices,))
        if min(indices) < 0:
            raise ValidationError('index set %s contains negative indices' % (indices,))
        object.__setattr__(self, 'indices', indices)

    @classmethod
    def of(cls, indices: Union[int, Iterable[int], 'IndexSet']) -> 'IndexSet':
        if isinstance(indices, IndexSet):
            return indices
        if isinstance(indices, (int, np.integer)):
            return cls((int(indices),))
        return cls(tuple(indices))

    def check(self, n_inputs: int) -> 'IndexSet':
        bad = [i for i in self.indices if i >= n_inputs]
        if bad:
            raise ValidationError('indices %s are out of range for %d inputs' % (bad, n_inputs))
        return self

    def issubset(self, other: 'IndexSet') -> bool:
        return set(self.indices) <= set(other.indices)

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, item):
        return item in self.indices

    def to_list(self):
        return list(self.indices)


@dataclass(frozen=True)
class OutputRangeEstimate(object):
    """
    Estimated range ``[cmin, cmax]`` of one output over a sample set.

    ``n_samples`` counts every evaluated row, anchor and extreme rows included.
    ``contains_context`` tells whether the context row itself was evaluated.
    """
    cmin: float
    cmax: float
    n_samples: int
    contains_context: bool
    y_context: Optional[float] = None
    studied: Optional[IndexSet] = None

    def __post_init__(self):
        object.__setattr__(self, 'cmin', float(self.cmin))
        object.__setattr__(self, 'cmax', float(self.cmax))
        if not self.cmin <= self.cmax:
            raise ValidationError('cmin %s is greater than cmax %s' % (self.cmin, self.cmax))
        if self.n_samples < 1:
            raise ValidationError('an output range needs at least one sample')
        if self.contains_context:
            if self.y_context is None:
                raise ValidationError('contains_context requires y_context')
            if not self.cmin <= self.y_context <= self.cmax:
                raise ValidationError('y(C)=%s lies outside the estimated range [%s, %s]' %
                                      (self.y_context, self.cmin, self.cmax))

    @property
    def width(self) -> float:
        return self.cmax - self.cmin

    @property
    def degenerate(self) -> bool:
        return self.cmax == self.cmin

    def merge(self, *others: 'OutputRangeEstimate') -> 'OutputRangeEstimate':
        """
        Union of this estimate and ``others``. The studied set and context
        information of ``self`` are kept.
        """
        ranges = (self,) + others
        return OutputRangeEstimate(cmin=min(r.cmin for r in ranges),
                                   cmax=max(r.cmax for r in ranges),
                                   n_samples=sum(r.n_samples for r in ranges),
                                   contains_context=self.contains_context,
                                   y_context=self.y_context,
                                   studied=self.studied)

    def to_dict(self) -> dict:
        return dict(cmin=self.cmin,
                    cmax=self.cmax,
                    n_samples=self.n_samples,
                    contains_context=self.contains_context,
                    y_context=self.y_context,
                    studied=None if self.studied is None else self.studied.to_list())

    @classmethod
    def from_dict(cls, d: dict) -> 'OutputRangeEstimate':
        d = dict(d)
        if d.get('studied') is not None:
            d['studied'] = IndexSet.of(d['studied'])
        return cls(**d)


@dataclass(frozen=True)
class CiuResult(object):
    """
    CI and CU of one target (feature set or concept) for one output.

    ``parent`` is ``ABSOLUTE`` when CI uses ``[absmin, absmax]``, otherwise the
    name of the concept (or ``ALL``) whose estimated range is the reference.
    ``degenerate`` flags a zero-width estimated range (CU reported as 0.5),
    ``overshoot`` flags a range leaving ``[absmin, absmax]``.
    """
    target: Union[IndexSet, str]
    output_index: int
    ci: float
    cu: float
    cmin: float
    cmax: float
    y_context: float
    n: int
    seed: Optional[int]
    label: str = ''
    output_name: str = ''
    parent: str = 'ABSOLUTE'
    degenerate: bool = False
    overshoot: bool = False
    indices: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        for k in ('ci', 'cu', 'cmin', 'cmax', 'y_context'):
            object.__setattr__(self, k, float(getattr(self, k)))
        if isinstance(self.target, IndexSet) and not self.indices:
            object.__setattr__(self, 'indices', self.target.indices)
        object.__setattr__(self, 'indices', tuple(int(i) for i in self.indices))
        if self.ci < 0:
            raise ValidationError('CI must not be negative, got %s' % self.ci)

    @property
    def is_concept(self) -> bool:
        return isinstance(self.target, str)

    def to_dict(self) -> dict:
        target = self.target if self.is_concept else self.target.to_list()
        return dict(target=target,
                    ci=self.ci,
                    cu=self.cu,
                    cmin=self.cmin,
                    cmax=self.cmax,
                    y=self.y_context,
                    n=self.n,
                    seed=self.seed,
                    output_index=self.output_index,
                    output_name=self.output_name,
                    label=self.label,
                    parent=self.parent,
                    degenerate=self.degenerate,
                    overshoot=self.overshoot,
                    indices=list(self.indices))

    @classmethod
    def from_dict(cls, d: dict) -> 'CiuResult':
        d = dict(d)
        target = d.pop('target')
        if not isinstance(target, str):
            target = IndexSet.of(target)
        d['y_context'] = d.pop('y')
        d['indices'] = tuple(d.get('indices', ()))
        return cls(target=target, **d)

