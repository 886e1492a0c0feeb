#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

import json
from typing import List, Sequence, Union

from ciupy._conf import __version__
from ciupy.core.base import ValidationError
from ciupy.core.descriptor import CiuResult

__all__ = ['RESULTS_SCHEMA', 'results_to_structured', 'results_document', 'results_from_structured', 'dumps']

RESULTS_SCHEMA = 'ciupy.results/1'


def results_to_structured(results: Sequence[CiuResult]) -> List[dict]:
    """JSON-compatible list with one mapping per result, see :meth:`CiuResult.to_dict`."""
    return [r.to_dict() for r in results]


def results_document(results: Sequence[CiuResult], **meta) -> dict:
    """
    Versioned envelope around :func:`results_to_structured`.
    Extra keyword arguments (context, model, ...) are stored under ``meta``.
    """
    return dict(schema=RESULTS_SCHEMA, version=__version__, meta=dict(meta),
                results=results_to_structured(results))


def results_from_structured(doc: Union[dict, list]) -> List[CiuResult]:
    """Read results back from :func:`results_to_structured` or :func:`results_document` output."""
    if isinstance(doc, dict):
        if doc.get('schema') != RESULTS_SCHEMA:
            raise ValidationError('unsupported results schema <%s>, expected <%s>' %
                                  (doc.get('schema'), RESULTS_SCHEMA))
        doc = doc['results']
    return [CiuResult.from_dict(d) for d in doc]


def dumps(doc) -> str:
    """Deterministic JSON text: sorted keys, shortest round-trip floats."""
    return json.dumps(doc, sort_keys=True, indent=2) + '\n'
