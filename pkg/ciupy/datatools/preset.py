#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

from typing import Callable, Dict, Tuple

import pandas as pd

__all__ = ['Preset', 'preset']

IRIS_FEATURES = ('Sepal Length', 'Sepal Width', 'Petal Length', 'Petal Width')
IRIS_CLASSES = ('setosa', 'versicolor', 'virginica')


class Preset(object):
    """
    Built-in tables, addressable by name.

    ::

        >>> from ciupy.datatools import preset
        >>> frame, target = preset['iris']
        >>> frame.shape
        (150, 5)
    """

    __dataset__ = ('iris',)

    def __init__(self):
        self._builders: Dict[str, Callable[[], Tuple[pd.DataFrame, str]]] = {'iris': self.iris}

    def __contains__(self, name):
        return name in self._builders

    def __getitem__(self, name: str) -> Tuple[pd.DataFrame, str]:
        if name not in self._builders:
            raise KeyError('no built-in dataset named <%s>, available: %s' % (name, list(self._builders)))
        return self._builders[name]()

    @staticmethod
    def iris() -> Tuple[pd.DataFrame, str]:
        """
        The Iris flowers table: four measurements in cm and the species column.

        Returns
        -------
        tuple
            ``(frame, target column name)``.
        """
        from sklearn.datasets import load_iris

        raw = load_iris()
        frame = pd.DataFrame(raw.data, columns=list(IRIS_FEATURES))
        frame['species'] = [IRIS_CLASSES[t] for t in raw.target]
        return frame, 'species'


preset = Preset()
