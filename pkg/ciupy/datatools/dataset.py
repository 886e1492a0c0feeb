#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from ciupy.core.base import DatasetError, ValidationError
from ciupy.core.descriptor import CATEGORICAL, CONTINUOUS, ONE_HOT, Context, InputDescriptor, OutputDescriptor

__all__ = ['Dataset', 'load_csv', 'load_dataset']

CLASSIFICATION = 'classification'
REGRESSION = 'regression'


class Dataset(object):
    """
    Feature matrix and target column(s) with the descriptors inferred from them.

    Categorical feature columns are integer-encoded, the mapping is kept in
    :attr:`categorical_mappings`. A non-numeric (or declared categorical) single
    target column is expanded into one-hot class outputs.
    """

    def __init__(self,
                 features: pd.DataFrame,
                 targets: pd.DataFrame,
                 *,
                 task: str,
                 categorical_mappings: Mapping[str, Dict[str, int]] = None,
                 one_hot_groups: Mapping[str, Sequence[str]] = None,
                 source: str = None):
        if features.shape[0] < 1:
            raise DatasetError('a dataset needs at least one row')
        if features.shape[0] != targets.shape[0]:
            raise DatasetError('features have %d rows but targets have %d' % (features.shape[0], targets.shape[0]))
        self._features = features.astype(float)
        self._targets = targets.astype(float)
        self._task = task
        self._mappings = dict(categorical_mappings or {})
        self._groups = {str(k): list(v) for k, v in (one_hot_groups or {}).items()}
        self._source = source

    @property
    def features(self) -> pd.DataFrame:
        return self._features

    @property
    def targets(self) -> pd.DataFrame:
        return self._targets

    @property
    def x(self) -> np.ndarray:
        return self._features.values

    @property
    def y(self) -> np.ndarray:
        return self._targets.values

    @property
    def task(self) -> str:
        return self._task

    @property
    def feature_names(self) -> List[str]:
        return [str(c) for c in self._features.columns]

    @property
    def target_names(self) -> List[str]:
        return [str(c) for c in self._targets.columns]

    @property
    def categorical_mappings(self) -> Dict[str, Dict[str, int]]:
        return {k: dict(v) for k, v in self._mappings.items()}

    @property
    def source(self) -> Optional[str]:
        return self._source

    def __len__(self):
        return self._features.shape[0]

    def input_descriptors(self) -> List[InputDescriptor]:
        """Descriptors with ranges taken from the per-column min/max of the data."""
        member_of = {col: g for g, cols in self._groups.items() for col in cols}
        ret = []
        for i, col in enumerate(self.feature_names):
            values = self._features[col]
            lo, hi = float(values.min()), float(values.max())
            if col in member_of:
                ret.append(InputDescriptor(col, i, 0., 1., kind=ONE_HOT, group=member_of[col]))
            elif col in self._mappings:
                ret.append(
                    InputDescriptor(col, i, lo, hi, kind=CATEGORICAL, categories=sorted(set(values.tolist()))))
            else:
                ret.append(InputDescriptor(col, i, lo, hi, kind=CONTINUOUS))
        return ret

    def output_descriptors(self) -> List[OutputDescriptor]:
        """Classification outputs get [0, 1], regression outputs the target min/max of the data."""
        if self._task == CLASSIFICATION:
            return [OutputDescriptor(name, i, 0., 1.) for i, name in enumerate(self.target_names)]
        ret = []
        for i, name in enumerate(self.target_names):
            lo, hi = float(self._targets[name].min()), float(self._targets[name].max())
            if not lo < hi:
                raise DatasetError('target <%s> is constant, its output range is undefined' % name, column=name)
            ret.append(OutputDescriptor(name, i, lo, hi))
        return ret

    def context(self, row: int) -> Context:
        """Context of the 1-based data row ``row``."""
        if not 1 <= row <= len(self):
            raise ValidationError('row %d is out of range [1, %d]' % (row, len(self)))
        return Context(tuple(self._features.iloc[row - 1].values))

    @classmethod
    def from_frame(cls,
                   frame: pd.DataFrame,
                   target_columns: Union[str, Sequence[str]],
                   categorical_columns: Sequence[str] = (),
                   *,
                   one_hot_groups: Mapping[str, Sequence[str]] = None,
                   source: str = None) -> 'Dataset':
        """
        Split a table into features and targets and encode it numerically.

        Parameters
        ----------
        frame
            The whole table, one header per column.
        target_columns
            Target column name(s).
        categorical_columns
            Feature or target columns to integer-encode (features) or one-hot expand (target).
        one_hot_groups
            Feature columns that already form one-hot groups, by group id.
        source
            Where the data come from, for messages.
        """
        if isinstance(target_columns, str):
            target_columns = [target_columns]
        target_columns = list(target_columns)
        categorical_columns = list(categorical_columns or [])
        frame = frame.rename(columns=lambda c: str(c).strip())

        for col in target_columns + categorical_columns:
            if col not in frame.columns:
                raise DatasetError('column <%s> not found in %s, available: %s' %
                                   (col, source or 'data', list(frame.columns)),
                                   column=col)
        if not target_columns:
            raise DatasetError('at least one target column is needed')
        if frame.shape[0] < 1:
            raise DatasetError('%s has no data rows' % (source or 'data'))

        missing = frame.isna()
        if missing.values.any():
            r, c = np.argwhere(missing.values)[0]
            raise DatasetError('missing value (ragged row?) at data row %d, column <%s>' % (r + 1, frame.columns[c]),
                               row=int(r) + 1,
                               column=str(frame.columns[c]))

        features = frame.drop(columns=target_columns)
        mappings = {}
        encoded = {}
        for col in features.columns:
            if col in categorical_columns:
                codes, mapping = _encode(features[col])
                mappings[col] = mapping
                encoded[col] = codes
            else:
                encoded[col] = _numeric(features[col], col)
        features = pd.DataFrame(encoded, index=frame.index, columns=features.columns)

        groups = {str(k): list(v) for k, v in (one_hot_groups or {}).items()}
        for g, cols in groups.items():
            for col in cols:
                if col not in features.columns:
                    raise DatasetError('one-hot group <%s>: unknown feature column <%s>' % (g, col), column=col)
                if not features[col].isin([0., 1.]).all():
                    raise DatasetError('one-hot group <%s>: column <%s> holds values other than 0 and 1' % (g, col),
                                       column=col)

        targets = frame[target_columns]
        is_class = len(target_columns) == 1 and (target_columns[0] in categorical_columns or
                                                  not pd.api.types.is_numeric_dtype(targets[target_columns[0]]))
        if is_class:
            col = target_columns[0]
            labels = targets[col].astype(str)
            classes = sorted(labels.unique())
            onehot = pd.DataFrame({c: (labels == c).astype(float) for c in classes}, index=frame.index)
            mappings[col] = {c: i for i, c in enumerate(classes)}
            return cls(features, onehot, task=CLASSIFICATION, categorical_mappings=mappings,
                       one_hot_groups=groups, source=source)

        targets = pd.DataFrame({c: _numeric(targets[c], c) for c in target_columns}, index=frame.index)
        return cls(features, targets, task=REGRESSION, categorical_mappings=mappings, one_hot_groups=groups,
                   source=source)

    def __repr__(self):
        return '<%s> %s: %d rows, %d features -> %d %s targets' % (self.__class__.__name__, self._source or '',
                                                                  len(self), self._features.shape[1],
                                                                  self._targets.shape[1], self._task)


def _encode(column: pd.Series) -> Tuple[pd.Series, Dict[str, int]]:
    labels = column.astype(str).str.strip()
    mapping = {c: i for i, c in enumerate(sorted(labels.unique()))}
    return labels.map(mapping).astype(float), mapping


def _numeric(column: pd.Series, name: str) -> pd.Series:
    values = pd.to_numeric(column, errors='coerce')
    bad = values.isna()
    if bad.any():
        pos = int(np.argmax(bad.values))
        raise DatasetError('non-numeric cell %r at data row %d, column <%s>' % (column.iloc[pos], pos + 1, name),
                           row=pos + 1,
                           column=name)
    return values.astype(float)


def load_csv(path: Union[str, Path],
             target_columns: Union[str, Sequence[str]],
             categorical_columns: Sequence[str] = (),
             *,
             one_hot_groups: Mapping[str, Sequence[str]] = None) -> Dataset:
    """
    Read a comma-separated file with one header row.

    Parameters
    ----------
    path
        CSV file.
    target_columns
        Target column name(s).
    categorical_columns
        Columns to encode, see :meth:`Dataset.from_frame`.
    one_hot_groups
        Feature columns forming one-hot groups.

    Returns
    -------
    Dataset
    """
    path = Path(path)
    if not path.is_file():
        raise DatasetError('%s does not exist' % path)
    try:
        frame = pd.read_csv(str(path), skipinitialspace=True)
    except pd.errors.ParserError as e:
        raise DatasetError('ragged rows in %s: %s' % (path, e)) from e
    except pd.errors.EmptyDataError as e:
        raise DatasetError('%s is empty' % path) from e
    return Dataset.from_frame(frame, target_columns, categorical_columns, one_hot_groups=one_hot_groups,
                              source=str(path))


def load_dataset(source: str, target_columns: Union[str, Sequence[str], None] = None,
                 categorical_columns: Sequence[str] = (), **kwargs) -> Dataset:
    """
    Load a built-in dataset by name (see :mod:`ciupy.datatools.preset`) or a CSV file by path.
    Built-in datasets know their target column; for CSV files without ``target_columns``
    the last column is the target.
    """
    from ciupy.datatools.preset import preset

    if source in preset:
        frame, target = preset[source]
        return Dataset.from_frame(frame, target_columns or target, categorical_columns, source=source, **kwargs)
    if target_columns is None:
        try:
            header = pd.read_csv(source, nrows=0)
        except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
            raise DatasetError('can not read %s: %s' % (source, e)) from e
        target_columns = [str(header.columns[-1]).strip()]
    return load_csv(source, target_columns, categorical_columns, **kwargs)
