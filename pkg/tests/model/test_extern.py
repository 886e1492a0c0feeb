#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

import sys
from textwrap import dedent

import numpy as np
import pytest

from ciupy.core import ExternalModelError, ValidationError
from ciupy.explain import ExplanationRequest, explain
from ciupy.model import ExternalModel, LinearModel, run_external_model, unit_box_problem
from ciupy.sampling import SamplingConfig


def _script(tmp_path, name, body):
    path = tmp_path / name
    path.write_text(dedent(body))
    return [sys.executable, str(path)]


@pytest.fixture()
def weighted(tmp_path):
    # 0.3 x1 + 0.7 x2 and 2 x1, one line per input row
    return _script(
        tmp_path, 'weighted.py', """
        import sys
        for line in sys.stdin:
            if line.strip():
                x = [float(v) for v in line.split(',')]
                print('%r,%r' % (0.3 * x[0] + 0.7 * x[1], 2 * x[0]))
        """)


def test_run_external_model_1(weighted):
    rows = np.array([[0., 0.], [1., 1.], [0.25, 0.5]])
    y = run_external_model(weighted, rows, timeout=30)
    assert y.shape == (3, 2)
    assert y[:, 0] == pytest.approx([0., 1., 0.425], abs=1e-12)
    assert y[:, 1] == pytest.approx([0., 2., 0.5], abs=1e-12)

    assert run_external_model(weighted, [0.5, 0.5], timeout=30).shape == (1, 2)


def test_run_external_model_echo(tmp_path):
    echo = _script(tmp_path, 'echo.py', """
        import sys
        sys.stdout.write(sys.stdin.read())
        """)
    rows = np.array([[0.1, 2.], [3., -4.5], [1e-3, 7.]])
    assert run_external_model(echo, rows, timeout=30).tolist() == rows.tolist()


def test_run_external_model_padded(tmp_path):
    # spaces around cells, blank lines and CRLF endings are accepted
    padded = _script(tmp_path, 'padded.py', """
        import sys
        rows = [line for line in sys.stdin if line.strip()]
        sys.stdout.write('\\r\\n')
        for line in rows:
            x = [float(v) for v in line.split(',')]
            sys.stdout.write(' %r ,  %r\\r\\n\\n' % (x[0] + x[1], -x[0]))
        """)
    y = run_external_model(padded, np.array([[1., 2.], [0.5, 0.25]]), timeout=30)
    assert y.tolist() == [[3., -1.], [0.75, -0.5]]

    silent = _script(tmp_path, 'silent.py', """
        import sys
        sys.stdin.read()
        """)
    with pytest.raises(ExternalModelError, match='returned 0 rows for 3 input rows'):
        run_external_model(silent, np.zeros((3, 2)), timeout=30)


def test_run_external_model_2(tmp_path):
    short = _script(tmp_path, 'short.py', """
        import sys
        sys.stdin.read()
        print('1.0')
        """)
    with pytest.raises(ExternalModelError, match='returned 1 rows for 2 input rows'):
        run_external_model(short, np.zeros((2, 2)), timeout=30)

    words = _script(tmp_path, 'words.py', """
        import sys
        for line in sys.stdin:
            print('abc')
        """)
    with pytest.raises(ExternalModelError, match='not a numeric CSV matrix'):
        run_external_model(words, np.zeros((1, 2)), timeout=30)

    ragged = _script(tmp_path, 'ragged.py', """
        import sys
        for i, line in enumerate(sys.stdin):
            print(','.join(['1'] * (i + 1)))
        """)
    with pytest.raises(ExternalModelError, match='not a numeric CSV matrix'):
        run_external_model(ragged, np.zeros((2, 2)), timeout=30)

    failing = _script(tmp_path, 'failing.py', """
        import sys
        sys.stderr.write('model file is corrupted')
        sys.exit(3)
        """)
    with pytest.raises(ExternalModelError, match='status 3: model file is corrupted'):
        run_external_model(failing, np.zeros((1, 2)), timeout=30)

    sleepy = _script(tmp_path, 'sleepy.py', """
        import time
        time.sleep(10)
        """)
    with pytest.raises(ExternalModelError, match='timed out'):
        run_external_model(sleepy, np.zeros((1, 2)), timeout=0.5)

    with pytest.raises(ExternalModelError, match='can not launch'):
        run_external_model([str(tmp_path / 'no_such_program')], np.zeros((1, 2)), timeout=30)
    with pytest.raises(ValidationError, match='empty'):
        run_external_model('', np.zeros((1, 2)))


def test_external_model(weighted):
    m = ExternalModel(weighted, n_inputs=2, n_outputs=2, timeout=30)
    assert (m.n_inputs, m.n_outputs) == (2, 2)
    assert not m.concurrent_safe
    assert m.predict([[1., 0.]]).tolist() == [[0.3, 2.]]

    with pytest.raises(ExternalModelError, match='2 outputs per row but 1 are declared'):
        ExternalModel(weighted, n_inputs=2, timeout=30).predict([[1., 0.]])
    with pytest.raises(ValidationError, match='positive'):
        ExternalModel(weighted, n_inputs=0)


def test_external_model_explanation(weighted):
    config = SamplingConfig(n=50, seed=2)
    req = ExplanationRequest((0.4, 0.8), targets=[0, 1], output_index=0, sampling=config)
    external = explain(unit_box_problem(ExternalModel(weighted, n_inputs=2, n_outputs=2, timeout=30),
                                        output_range=(0., 2.)), req)
    local = explain(unit_box_problem(LinearModel([[0.3, 0.7], [2., 0.]]), output_range=(0., 2.)), req)
    for a, b in zip(external, local):
        assert a.ci == pytest.approx(b.ci, abs=1e-9)
        assert a.cu == pytest.approx(b.cu, abs=1e-9)
        assert a.y_context == pytest.approx(b.y_context, abs=1e-9)


if __name__ == "__main__":
    pytest.main()
