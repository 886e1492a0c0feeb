#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

from collections import namedtuple
from dataclasses import dataclass
from typing import Sequence, Tuple

import matplotlib.pyplot as plt
import numpy as np

from ciupy.core.base import ValidationError
from ciupy.core.descriptor import CiuResult
from ciupy.visualization.color import ColorSpec, cu_color, to_hex
from ciupy.visualization.svg import SVG_RC, figure_to_svg

__all__ = ['Bar', 'BarPlotSpec', 'barplot_spec', 'render_barplot']

SORT_CI = 'ci'
SORT_INPUT = 'input'

Bar = namedtuple('Bar', 'label length color ci cu')


@dataclass(frozen=True)
class BarPlotSpec(object):
    """Horizontal bars, one per result, on the CI axis ``[0, xmax]``."""
    bars: Tuple[Bar, ...]
    xmax: float = 1.
    title: str = ''

    def __post_init__(self):
        if not self.bars:
            raise ValidationError('a bar plot needs at least one bar')
        longest = max(b.length for b in self.bars)
        if self.xmax < max(1., longest):
            raise ValidationError('xmax %s is shorter than the longest bar %s' % (self.xmax, longest))


def barplot_spec(results: Sequence[CiuResult],
                 spec: ColorSpec = None,
                 *,
                 sort: str = SORT_CI,
                 title: str = None) -> BarPlotSpec:
    """
    Bars for ``results``: length is CI, color comes from CU.

    ``sort='ci'`` orders bars by decreasing CI, ties keep their input order;
    ``sort='input'`` keeps the input order.
    """
    results = list(results)
    if not results:
        raise ValidationError('no results to plot')
    if sort == SORT_CI:
        results = sorted(results, key=lambda r: -r.ci)
    elif sort != SORT_INPUT:
        raise ValidationError('unknown bar order <%s>, use <%s> or <%s>' % (sort, SORT_CI, SORT_INPUT))
    spec = spec or ColorSpec()
    bars = tuple(Bar(r.label or str(r.target), r.ci, cu_color(min(max(r.cu, 0.), 1.), spec), r.ci, r.cu)
                 for r in results)
    if title is None:
        names = sorted({r.output_name for r in results})
        title = 'CIU for %s' % ', '.join(n for n in names if n) if any(names) else 'CIU'
    return BarPlotSpec(bars=bars, xmax=max([1.] + [b.length for b in bars]), title=title)


def render_barplot(results: Sequence[CiuResult], spec: ColorSpec = None, *, sort: str = SORT_CI,
                   title: str = None) -> str:
    """
    SVG bar plot of CI (bar length) and CU (bar color).

    Returns
    -------
    str
        The SVG document.
    """
    plot = barplot_spec(results, spec, sort=sort, title=title)
    n = len(plot.bars)
    # first bar on top
    pos = np.arange(n)[::-1]

    with plt.rc_context(SVG_RC):
        fig, ax = plt.subplots(figsize=(7., 1.2 + 0.45 * n))
        ax.barh(pos, [b.length for b in plot.bars],
                height=0.7,
                color=[to_hex(b.color) for b in plot.bars],
                edgecolor='#333333',
                linewidth=0.5,
                tick_label=[b.label for b in plot.bars])
        for y, bar in zip(pos, plot.bars):
            ax.text(bar.length + 0.01 * plot.xmax, y, 'CI %.3f, CU %.3f' % (bar.ci, bar.cu), va='center', fontsize=8)
        ax.set_xlim(0, plot.xmax * 1.25)
        ax.set_xticks(np.arange(0, plot.xmax + 1e-9, 0.25))
        ax.set_xlabel('Contextual importance')
        ax.set_title(plot.title)
        fig.tight_layout()
        return figure_to_svg(fig, plot.title)
