#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

from io import StringIO

import matplotlib
import matplotlib.pyplot as plt

__all__ = ['SVG_RC', 'figure_to_svg']

# fixed id salt and no embedded date: equal figures give byte-identical documents
SVG_RC = {
    'svg.hashsalt': 'ciupy',
    'svg.fonttype': 'none',
    'font.family': 'DejaVu Sans',
    'font.size': 10.,
}


def figure_to_svg(fig, title: str = None) -> str:
    """
    Render ``fig`` as an SVG document and close it.

    Text is kept as ``<text>`` elements. ``title`` is stored in the document metadata.
    """
    buf = StringIO()
    metadata = {'Date': None}
    if title:
        metadata['Title'] = title
    try:
        with matplotlib.rc_context(SVG_RC):
            fig.savefig(buf, format='svg', metadata=metadata)
    finally:
        plt.close(fig)
    return buf.getvalue()
