#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

import numpy as np
import pytest

from ciupy.core import Problem, ValidationError
from ciupy.model import LinearModel, NonlinearDemoModel, RuleStepModel, unit_box_problem


def test_linear_model():
    m = LinearModel([0.3, 0.7])
    assert (m.n_inputs, m.n_outputs) == (2, 1)
    assert m.predict([[1., 1.], [0., 0.], [1., 0.]]) == pytest.approx(np.array([[1.], [0.], [0.3]]))

    m = LinearModel([[1., 0.], [0., 2.]], bias=[0., -1.])
    assert (m.n_inputs, m.n_outputs) == (2, 2)
    assert m.predict([[0.5, 0.5]]).tolist() == [[0.5, 0.]]

    with pytest.raises(ValidationError, match='expects 2 inputs'):
        m.predict([[1., 2., 3.]])
    with pytest.raises(ValidationError, match='non-empty'):
        LinearModel([])


def test_rule_step_model():
    m = RuleStepModel.demo()
    x = np.array([[0.2, 0.2], [0.2, 0.7], [0.7, 0.2], [0.7, 0.7], [0.5, 0.5]])
    assert m.predict(x).ravel().tolist() == [0., 0.7, 0.3, 1., 1.]

    m = RuleStepModel([[1., 2.]], [0., 5., 10.])
    assert m.predict([[0.], [1.], [1.5], [3.]]).ravel().tolist() == [0., 5., 5., 10.]

    with pytest.raises(ValidationError, match='strictly increasing'):
        RuleStepModel([[2., 1.]], [0., 1., 2.])
    with pytest.raises(ValidationError, match='levels must have shape'):
        RuleStepModel([[0.5], [0.5]], [0., 1.])


def test_nonlinear_demo_model():
    m = NonlinearDemoModel()
    y = m.predict([[0.1, 0.2], [0., 0.], [1., 1.], [-1., 0.]]).ravel()
    assert y[0] == pytest.approx((np.sqrt(0.1) + 0.04) / 2)
    assert y[1:].tolist() == [0., 1., 0.]
    assert m(np.array([[0.25, 0.]])).item() == pytest.approx(0.25)


def test_unit_box_problem():
    p = unit_box_problem(NonlinearDemoModel())
    assert isinstance(p, Problem)
    assert [d.name for d in p.inputs] == ['x1', 'x2']
    assert [(d.name, d.absmin, d.absmax) for d in p.outputs] == [('y', 0., 1.)]

    p = unit_box_problem(LinearModel([[1., 1.], [2., 2.]]), output_range=(0., 4.))
    assert [(d.name, d.absmax) for d in p.outputs] == [('y1', 4.), ('y2', 4.)]


if __name__ == "__main__":
    pytest.main()
