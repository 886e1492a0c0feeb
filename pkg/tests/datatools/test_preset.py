#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

import pytest

from ciupy.datatools import Preset, preset


def test_preset_1():
    assert 'iris' in preset
    assert 'boston' not in preset
    assert Preset.__dataset__ == ('iris',)

    frame, target = preset['iris']
    assert frame.shape == (150, 5)
    assert target == 'species'
    assert frame.columns.tolist() == ['Sepal Length', 'Sepal Width', 'Petal Length', 'Petal Width', 'species']
    assert sorted(frame.species.unique()) == ['setosa', 'versicolor', 'virginica']
    assert frame.species.value_counts().tolist() == [50, 50, 50]


def test_preset_2():
    with pytest.raises(KeyError, match='no built-in dataset named <mnist>'):
        preset['mnist']


if __name__ == "__main__":
    pytest.main()
