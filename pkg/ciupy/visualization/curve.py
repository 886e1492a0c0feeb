#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

from typing import Optional, Sequence, Tuple, Union

import matplotlib.pyplot as plt
import numpy as np

from ciupy.core.base import ValidationError
from ciupy.explain.explainer import Curve
from ciupy.visualization.svg import SVG_RC, figure_to_svg

__all__ = ['render_curve']

Point = Tuple[float, float]


def render_curve(series: Union[Curve, Sequence[Point]],
                 context_point: Optional[Point] = None,
                 *,
                 title: str = None,
                 x_label: str = None,
                 y_label: str = None) -> str:
    """
    SVG line plot of an input-output sweep with the context point marked red.

    Parameters
    ----------
    series
        A :class:`Curve` or a sequence of ``(x, y)`` pairs, at least two.
    context_point
        ``(x, y)`` of the context. Taken from ``series`` when it is a :class:`Curve`.
    title, x_label, y_label
        Texts; defaults come from a :class:`Curve`.
    """
    if isinstance(series, Curve):
        if context_point is None:
            context_point = (series.context_x, series.context_y)
        x_label = series.input_name if x_label is None else x_label
        y_label = series.output_name if y_label is None else y_label
        if title is None:
            title = '%s as a function of %s' % (series.output_name, series.input_name)
        pts = np.column_stack([series.x, series.y])
    else:
        pts = np.asarray(series, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 2:
        raise ValidationError('a curve needs at least two (x, y) points')

    with plt.rc_context(SVG_RC):
        fig, ax = plt.subplots(figsize=(6., 4.))
        ax.plot(pts[:, 0], pts[:, 1], color='#1f4e9c', linewidth=2.)
        if context_point is not None:
            ax.plot([context_point[0]], [context_point[1]], 'o', color='#dc3220', markersize=7.)
        if title:
            ax.set_title(title)
        if x_label:
            ax.set_xlabel(x_label)
        if y_label:
            ax.set_ylabel(y_label)
        fig.tight_layout()
        return figure_to_svg(fig, title)
