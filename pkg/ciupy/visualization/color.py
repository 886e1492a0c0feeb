#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

from dataclasses import dataclass
from pathlib import Path
from typing import Tuple, Union

from ciupy.core.base import ValidationError
from ciupy.utils import config

__all__ = ['ColorSpec', 'cu_color', 'to_hex']

RGB = Tuple[float, float, float]


def _rgb(value) -> RGB:
    value = tuple(float(v) for v in value)
    if len(value) != 3 or not all(0 <= v <= 255 for v in value):
        raise ValidationError('a color needs 3 channels in [0, 255] but got %s' % (value,))
    return value


@dataclass(frozen=True)
class ColorSpec(object):
    """
    CU color scale: red at CU=0, yellow at ``cu_neutral``, dark green at CU=1.
    """
    cu_neutral: float = 0.5
    red: RGB = (220., 50., 32.)
    yellow: RGB = (255., 200., 0.)
    green: RGB = (0., 120., 40.)

    def __post_init__(self):
        object.__setattr__(self, 'cu_neutral', float(self.cu_neutral))
        if not 0 < self.cu_neutral < 1:
            raise ValidationError('cu_neutral must lie strictly inside (0, 1) but got %s' % self.cu_neutral)
        for k in ('red', 'yellow', 'green'):
            object.__setattr__(self, k, _rgb(getattr(self, k)))

    @classmethod
    def from_config(cls, path: Union[str, Path, None] = None, **overrides) -> 'ColorSpec':
        """Build from the ``cu_neutral`` and ``colors`` items of the configuration."""
        colors = config('colors', path=path)
        params = dict(cu_neutral=config('cu_neutral', path=path),
                      red=colors['red'],
                      yellow=colors['yellow'],
                      green=colors['green'])
        params.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**params)


def _mix(a: RGB, b: RGB, t: float) -> RGB:
    return tuple(x + t * (y - x) for x, y in zip(a, b))


def cu_color(cu: float, spec: ColorSpec = None) -> RGB:
    """
    Color of a CU value, linear red to yellow on ``[0, cu_neutral]`` and
    yellow to dark green on ``[cu_neutral, 1]``.

    Parameters
    ----------
    cu
        Contextual utility in [0, 1].
    spec
        Color scale. Default :class:`ColorSpec`.

    Returns
    -------
    tuple
        RGB channels as floats in [0, 255].
    """
    spec = spec or ColorSpec()
    cu = float(cu)
    if not 0 <= cu <= 1:
        raise ValidationError('CU must lie in [0, 1] to get a color but got %s' % cu)
    if cu <= spec.cu_neutral:
        return _mix(spec.red, spec.yellow, cu / spec.cu_neutral)
    return _mix(spec.yellow, spec.green, (cu - spec.cu_neutral) / (1 - spec.cu_neutral))


def to_hex(rgb: RGB) -> str:
    return '#%02x%02x%02x' % tuple(int(round(c)) for c in rgb)
