#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

import pytest

from ciupy.core import (CATEGORICAL, ONE_HOT, CiuResult, Context, IndexSet, InputDescriptor, OutputDescriptor,
                        OutputRangeEstimate, ValidationError)


def test_input_descriptor_1():
    d = InputDescriptor('Petal Length', 2, 1., 6.9)
    assert d.kind == 'continuous'
    assert d.span == pytest.approx(5.9)
    assert d.contains(6.0)
    assert not d.contains(7.0)
    assert InputDescriptor.from_dict(d.to_dict()) == d


def test_input_descriptor_2():
    d = InputDescriptor('rooms', 0, 1, 3, kind=CATEGORICAL, categories=[1, 2, 3])
    assert d.categories == (1., 2., 3.)
    assert InputDescriptor.from_dict(d.to_dict()) == d

    with pytest.raises(ValidationError, match='min_value'):
        InputDescriptor('x', 0, 2., 1.)
    with pytest.raises(ValidationError, match='at least one category'):
        InputDescriptor('x', 0, 0., 1., kind=CATEGORICAL)
    with pytest.raises(ValidationError, match='outside'):
        InputDescriptor('x', 0, 0., 1., kind=CATEGORICAL, categories=[0, 2])
    with pytest.raises(ValidationError, match='group id'):
        InputDescriptor('x', 0, 0., 1., kind=ONE_HOT)
    with pytest.raises(ValidationError, match='range \\[0, 1\\]'):
        InputDescriptor('x', 0, 0., 2., kind=ONE_HOT, group='g')
    with pytest.raises(ValidationError, match='unknown input kind'):
        InputDescriptor('x', 0, 0., 1., kind='ordinal')


def test_output_descriptor():
    d = OutputDescriptor('medv', 0, 5, 50)
    assert d.span == 45.
    assert OutputDescriptor.from_dict(d.to_dict()) == d
    with pytest.raises(ValidationError, match='strictly lower'):
        OutputDescriptor('y', 0, 0., 0.)
    with pytest.raises(ValidationError, match='strictly lower'):
        OutputDescriptor('y', 0, 1., 0.)


def test_context():
    c = Context((7, 3.2, 6, 1.8))
    assert len(c) == 4
    assert c[2] == 6.
    assert c.as_array().tolist() == [7., 3.2, 6., 1.8]
    assert Context.from_dict(c.to_dict()) == c
    with pytest.raises(ValidationError, match='empty'):
        Context(())
    with pytest.raises(ValidationError, match='finite'):
        Context((1., float('nan')))


def test_index_set():
    s = IndexSet.of([2, 3])
    assert list(s) == [2, 3]
    assert 3 in s
    assert IndexSet.of(2).to_list() == [2]
    assert IndexSet.of(s) is s
    assert s.issubset(IndexSet.of([0, 1, 2, 3]))
    assert not IndexSet.of([1, 4]).issubset(s)
    with pytest.raises(ValidationError, match='empty'):
        IndexSet.of([])
    with pytest.raises(ValidationError, match='duplicates'):
        IndexSet.of([1, 1])
    with pytest.raises(ValidationError, match='negative'):
        IndexSet.of([-1])
    with pytest.raises(ValidationError, match='out of range'):
        IndexSet.of([0, 4]).check(4)


def test_output_range_estimate_1():
    r = OutputRangeEstimate(0.02, 0.52, 1003, True, y_context=0.1781, studied=IndexSet.of(0))
    assert r.width == pytest.approx(0.5)
    assert not r.degenerate
    assert OutputRangeEstimate.from_dict(r.to_dict()) == r
    assert OutputRangeEstimate(0.7, 0.7, 5, True, y_context=0.7).degenerate

    with pytest.raises(ValidationError, match='greater than'):
        OutputRangeEstimate(1., 0., 1, False)
    with pytest.raises(ValidationError, match='requires y_context'):
        OutputRangeEstimate(0., 1., 1, True)
    with pytest.raises(ValidationError, match='outside the estimated range'):
        OutputRangeEstimate(0., 1., 1, True, y_context=1.5)


def test_output_range_estimate_merge():
    parent = OutputRangeEstimate(0.1, 0.6, 10, True, y_context=0.3, studied=IndexSet.of([0, 1]))
    child = OutputRangeEstimate(0.05, 0.4, 7, True, y_context=0.3, studied=IndexSet.of(0))
    merged = parent.merge(child)
    assert (merged.cmin, merged.cmax) == (0.05, 0.6)
    assert merged.n_samples == 17
    assert merged.studied == parent.studied
    assert merged.y_context == 0.3


def test_ciu_result():
    r = CiuResult(target=IndexSet.of(2), output_index=2, ci=0.638, cu=0.995, cmin=0.1, cmax=0.738,
                  y_context=0.735, n=1003, seed=0, label='Petal Length', output_name='virginica')
    assert r.indices == (2,)
    assert not r.is_concept
    d = r.to_dict()
    for k in ('target', 'ci', 'cu', 'cmin', 'cmax', 'y', 'n', 'seed'):
        assert k in d
    assert CiuResult.from_dict(d) == r

    c = CiuResult(target='Petal size and shape', output_index=0, ci=0.9, cu=0.9, cmin=0., cmax=0.9,
                  y_context=0.81, n=10, seed=1, indices=(2, 3))
    assert c.is_concept
    assert CiuResult.from_dict(c.to_dict()) == c

    with pytest.raises(ValidationError, match='negative'):
        CiuResult(target=IndexSet.of(0), output_index=0, ci=-0.1, cu=0.5, cmin=0., cmax=0., y_context=0.,
                  n=1, seed=0)


if __name__ == "__main__":
    pytest.main()
