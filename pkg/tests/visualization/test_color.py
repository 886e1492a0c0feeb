#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

import pytest

from ciupy.core import ValidationError
from ciupy.utils import dump_yaml
from ciupy.visualization import ColorSpec, cu_color, to_hex


def test_cu_color_1():
    assert cu_color(0.) == (220., 50., 32.)
    assert cu_color(0.5) == (255., 200., 0.)
    assert cu_color(1.) == (0., 120., 40.)
    assert cu_color(0.25) == pytest.approx((237.5, 125., 16.))
    assert cu_color(0.75) == pytest.approx((127.5, 160., 20.))


def test_cu_color_2():
    spec = ColorSpec(cu_neutral=0.2)
    assert cu_color(0.2, spec) == (255., 200., 0.)
    assert cu_color(0.1, spec) == pytest.approx((237.5, 125., 16.))

    with pytest.raises(ValidationError, match='CU must lie in'):
        cu_color(1.2)
    with pytest.raises(ValidationError, match='CU must lie in'):
        cu_color(-0.01)


def test_color_spec(tmp_path):
    with pytest.raises(ValidationError, match='cu_neutral'):
        ColorSpec(cu_neutral=1.)
    with pytest.raises(ValidationError, match='3 channels'):
        ColorSpec(red=(300, 0, 0))

    assert ColorSpec.from_config() == ColorSpec()
    assert ColorSpec.from_config(cu_neutral=0.3).cu_neutral == 0.3

    path = tmp_path / 'conf.yml'
    dump_yaml(dict(cu_neutral=0.4, colors=dict(red=[255, 0, 0], yellow=[255, 255, 0], green=[0, 255, 0])), path)
    spec = ColorSpec.from_config(path)
    assert spec.cu_neutral == 0.4
    assert spec.red == (255., 0., 0.)


def test_to_hex():
    assert to_hex((220., 50., 32.)) == '#dc3220'
    assert to_hex((0., 120., 40.)) == '#007828'
    assert to_hex((255., 200., 0.)) == '#ffc800'


if __name__ == "__main__":
    pytest.main()
