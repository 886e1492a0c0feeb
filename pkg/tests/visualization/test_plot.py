#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

import numpy as np
import pytest

from ciupy.core import CiuResult, IndexSet, ValidationError
from ciupy.explain import Curve
from ciupy.visualization import barplot_spec, figure_to_svg, render_barplot, render_curve


def _result(i, ci, cu, label, output='virginica'):
    return CiuResult(target=IndexSet.of(i), output_index=2, ci=ci, cu=cu, cmin=0., cmax=ci, y_context=cu * ci, n=100,
                     seed=0, label=label, output_name=output)


@pytest.fixture(scope='module')
def data():
    results = [
        _result(0, 0.2, 0.6, 'Sepal Length'),
        _result(1, 0.4, 0.0, 'Sepal Width'),
        _result(2, 0.6, 1.0, 'Petal Length'),
        _result(3, 0.4, 0.5, 'Petal Width'),
    ]
    yield results
    print('test over')


def test_figure_to_svg():
    import matplotlib.pyplot as plt

    def _svg():
        fig, ax = plt.subplots()
        ax.barh([0, 1], [0.3, 0.7], color=['#dc3220', '#007828'], tick_label=['a < b', 'x & y'])
        return figure_to_svg(fig, 'two bars')

    doc = _svg()
    assert doc == _svg()
    assert doc.lstrip().startswith('<?xml')
    assert doc.rstrip().endswith('</svg>')
    assert 'two bars' in doc
    assert 'a &lt; b' in doc
    assert 'x &amp; y' in doc
    assert '<dc:date>' not in doc
    assert plt.get_fignums() == []


def test_barplot_spec(data):
    plot = barplot_spec(data)
    assert [b.label for b in plot.bars] == ['Petal Length', 'Sepal Width', 'Petal Width', 'Sepal Length']
    assert plot.bars[0].color == (0., 120., 40.)
    assert plot.bars[1].color == (220., 50., 32.)
    assert plot.bars[2].color == (255., 200., 0.)
    assert plot.xmax == 1.
    assert plot.title == 'CIU for virginica'

    plot = barplot_spec(data, sort='input', title='why')
    assert [b.label for b in plot.bars] == ['Sepal Length', 'Sepal Width', 'Petal Length', 'Petal Width']
    assert plot.title == 'why'

    plot = barplot_spec([_result(0, 1.5, 1.3, 'x')])
    assert plot.xmax == 1.5
    assert plot.bars[0].color == (0., 120., 40.)

    with pytest.raises(ValidationError, match='no results'):
        barplot_spec([])
    with pytest.raises(ValidationError, match='unknown bar order'):
        barplot_spec(data, sort='cu')


def test_render_barplot(data):
    doc = render_barplot(data)
    assert doc == render_barplot(list(data))
    for label in ('Petal Length', 'Sepal Width', 'Petal Width', 'Sepal Length'):
        assert label in doc
    assert '#007828' in doc
    assert '#dc3220' in doc
    assert '#ffc800' in doc
    assert 'CI 0.600, CU 1.000' in doc
    assert 'Contextual importance' in doc
    assert 'CIU for virginica' in doc
    assert render_barplot(data, sort='input') != doc


def test_render_curve():
    x = np.linspace(0., 1., 11)
    curve = Curve(x=x, y=x**2, context_x=0.5, context_y=0.25, input_name='x1', output_name='y')
    doc = render_curve(curve)
    assert doc == render_curve(curve)
    assert 'y as a function of x1' in doc
    assert '#1f4e9c' in doc
    assert '#dc3220' in doc

    doc = render_curve([(0., 1.), (1., 1.)], x_label='grade')
    assert '#dc3220' not in doc
    assert 'grade' in doc

    with pytest.raises(ValidationError, match='at least two'):
        render_curve([(0., 1.)])


if __name__ == "__main__":
    pytest.main()
