#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

import numpy as np
import pytest

from ciupy.core import (ONE_HOT, FunctionModel, InputDescriptor, OutputDescriptor, ValidationError,
                        validate_problem)


@pytest.fixture(scope='module')
def data():
    model = FunctionModel(lambda x: np.column_stack([x.sum(axis=1)] * 3) / 20, n_inputs=4, n_outputs=3)
    names = ['Sepal Length', 'Sepal Width', 'Petal Length', 'Petal Width']
    bounds = [(4.3, 7.9), (2., 4.4), (1., 6.9), (0.1, 2.5)]
    inputs = [InputDescriptor(n, i, *b) for i, (n, b) in enumerate(zip(names, bounds))]
    outputs = [OutputDescriptor(n, j, 0., 1.) for j, n in enumerate(['setosa', 'versicolor', 'virginica'])]

    yield model, inputs, outputs
    print('test over')


def test_validate_problem_1(data):
    model, inputs, outputs = data
    problem = validate_problem(model, inputs, outputs)
    assert problem.n_inputs == 4
    assert problem.n_outputs == 3
    assert problem.all_inputs.to_list() == [0, 1, 2, 3]
    assert problem.input_index('petal length') == 2
    assert problem.input_index('3') == 3
    assert problem.output_index('Virginica') == 2
    assert problem.output_index(0) == 0
    with pytest.raises(ValidationError, match='no input named'):
        problem.input_index('petal area')
    with pytest.raises(ValidationError, match='out of range'):
        problem.output_index(3)


def test_validate_problem_2(data):
    model, inputs, outputs = data
    with pytest.raises(ValidationError, match='arity mismatch'):
        validate_problem(model, inputs[:3], outputs)
    with pytest.raises(ValidationError, match='arity mismatch'):
        validate_problem(model, inputs, outputs[:2])
    with pytest.raises(TypeError, match='BaseBlackBox'):
        validate_problem(lambda x: x, inputs, outputs)
    with pytest.raises(ValidationError, match='sits at position'):
        validate_problem(model, inputs[::-1], outputs)
    with pytest.raises(ValidationError, match='training data'):
        validate_problem(model, inputs, outputs, training_data=np.zeros((3, 2)))

    model_2 = FunctionModel(lambda x: x[:, :1], n_inputs=2)
    with pytest.raises(ValidationError, match='arity mismatch'):
        validate_problem(model_2, [InputDescriptor('x%d' % i, i, 0, 1) for i in range(3)],
                         [OutputDescriptor('y', 0)])


def test_validate_problem_3():
    model = FunctionModel(lambda x: x[:, :1], n_inputs=3)
    inputs = [
        InputDescriptor('a', 0, 0, 1, kind=ONE_HOT, group='color'),
        InputDescriptor('b', 1, 0, 1, kind=ONE_HOT, group='shape'),
        InputDescriptor('c', 2, 0, 1, kind=ONE_HOT, group='shape'),
    ]
    with pytest.raises(ValidationError, match='one-hot group <color>'):
        validate_problem(model, inputs, [OutputDescriptor('y', 0)])

    inputs[0] = InputDescriptor('a', 0, 0, 1, kind=ONE_HOT, group='shape')
    problem = validate_problem(model, inputs, [OutputDescriptor('y', 0)])
    assert problem.one_hot_groups == {'shape': (0, 1, 2)}


def test_check_context(data):
    problem = validate_problem(*data)
    c = problem.check_context([7, 3.2, 6, 1.8])
    assert c.values == (7., 3.2, 6., 1.8)
    with pytest.raises(ValidationError, match='context has 3 values'):
        problem.check_context([7, 3.2, 6])
    with pytest.warns(RuntimeWarning, match='outside their descriptor ranges'):
        problem.check_context([70, 3.2, 6, 1.8])


def test_function_model():
    model = FunctionModel(lambda x: x.sum(axis=1, keepdims=True), n_inputs=3)
    assert model.predict([[1., 2., 3.]]).tolist() == [[6.]]
    assert model([1., 2., 3.]).tolist() == [[6.]]
    with pytest.raises(ValidationError, match='expects 3 inputs'):
        model.predict([[1., 2.]])
    with pytest.raises(ValidationError, match='positive'):
        FunctionModel(lambda x: x, n_inputs=0)


if __name__ == "__main__":
    pytest.main()
