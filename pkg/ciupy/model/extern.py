#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

"""
Black boxes living in another process.

The external command reads input rows as CSV on its standard input (no header,
one row per line) and writes one CSV row of outputs per input row on its
standard output, in the same order. The whole batch is sent in one call.
"""

import shlex
import subprocess
from io import StringIO
from typing import Optional, Sequence, Union

import numpy as np

from ciupy.core.base import BaseBlackBox, ExternalModelError, ValidationError
from ciupy.utils import config

__all__ = ['ExternalModel', 'run_external_model']

Command = Union[str, Sequence[str]]


def _argv(command: Command):
    argv = shlex.split(command) if isinstance(command, str) else [str(c) for c in command]
    if not argv:
        raise ValidationError('external model command is empty')
    return argv


def run_external_model(command: Command, rows, *, timeout: Optional[float] = None) -> np.ndarray:
    """
    Send ``rows`` to ``command`` and read its outputs back.

    Parameters
    ----------
    command
        Command line as a string (split like a shell would) or an argument list.
    rows
        ``(n, M)`` input matrix.
    timeout
        Seconds to wait for the process. Default from config ``external_timeout``.

    Returns
    -------
    np.ndarray
        ``(n, K)`` output matrix.
    """
    argv = _argv(command)
    rows = np.asarray(rows, dtype=float)
    if rows.ndim == 1:
        rows = rows.reshape(1, -1)
    timeout = config('external_timeout') if timeout is None else timeout

    buf = StringIO()
    np.savetxt(buf, rows, fmt='%.17g', delimiter=',')
    try:
        proc = subprocess.run(argv, input=buf.getvalue(), capture_output=True, text=True, timeout=timeout)
    except subprocess.TimeoutExpired as e:
        raise ExternalModelError('external model %s timed out after %s s' % (argv[0], timeout)) from e
    except OSError as e:
        raise ExternalModelError('can not launch external model %s: %s' % (argv[0], e)) from e
    if proc.returncode != 0:
        raise ExternalModelError('external model %s exited with status %d: %s' %
                                 (argv[0], proc.returncode, proc.stderr.strip()[-500:]))

    if not proc.stdout.strip():
        raise ExternalModelError('external model returned 0 rows for %d input rows' % rows.shape[0])
    try:
        out = np.loadtxt(StringIO(proc.stdout), delimiter=',', ndmin=2)
    except ValueError as e:
        raise ExternalModelError('external model output is not a numeric CSV matrix: %s' % e) from e
    if out.shape[0] != rows.shape[0]:
        raise ExternalModelError('external model returned %d rows for %d input rows' %
                                 (out.shape[0], rows.shape[0]))
    return out


class ExternalModel(BaseBlackBox):
    """
    Black box evaluated by an external command, see :func:`run_external_model`.

    ::

        >>> model = ExternalModel('python my_gbm.py', n_inputs=13, n_outputs=1)
    """

    kind = 'external'

    def __init__(self, command: Command, n_inputs: int, n_outputs: int = 1, *, timeout: Optional[float] = None):
        if n_inputs < 1 or n_outputs < 1:
            raise ValidationError('model arities must be positive')
        _argv(command)
        self.command = command
        self.timeout = timeout
        self._n_inputs = int(n_inputs)
        self._n_outputs = int(n_outputs)

    @property
    def n_inputs(self):
        return self._n_inputs

    @property
    def n_outputs(self):
        return self._n_outputs

    def predict(self, x):
        x = self.check_input(x)
        ret = run_external_model(self.command, x, timeout=self.timeout)
        if ret.shape[1] != self._n_outputs:
            raise ExternalModelError('external model returned %d outputs per row but %d are declared' %
                                     (ret.shape[1], self._n_outputs))
        return ret

    def to_params(self) -> dict:
        command = self.command if isinstance(self.command, str) else list(self.command)
        return dict(command=command, n_inputs=self._n_inputs, n_outputs=self._n_outputs, timeout=self.timeout)

    @classmethod
    def from_params(cls, params: dict) -> 'ExternalModel':
        return cls(params['command'], params['n_inputs'], params.get('n_outputs', 1), timeout=params.get('timeout'))
