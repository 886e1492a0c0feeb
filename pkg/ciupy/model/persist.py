#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Type, Union

from ciupy.core.base import BaseBlackBox, ValidationError
from ciupy.core.descriptor import InputDescriptor, OutputDescriptor
from ciupy.model.analytic import LinearModel, NonlinearDemoModel, RuleStepModel
from ciupy.model.extern import ExternalModel
from ciupy.model.knn import KnnModel
from ciupy.model.sequential import SmallMlp
from ciupy.utils import dump_yaml, load_yaml

__all__ = ['MODEL_FORMAT', 'model_kinds', 'save_model', 'load_model']

MODEL_FORMAT = 'ciupy.model/1'

model_kinds: Dict[str, Type[BaseBlackBox]] = {
    c.kind: c for c in (LinearModel, RuleStepModel, NonlinearDemoModel, SmallMlp, KnnModel, ExternalModel)
}


def save_model(model: BaseBlackBox,
               path: Union[str, Path],
               inputs: Sequence[InputDescriptor] = None,
               outputs: Sequence[OutputDescriptor] = None) -> None:
    """
    Save a built-in model and, optionally, its descriptors as a YAML document.

    The document holds ``format``, ``kind``, ``n_inputs``, ``n_outputs``,
    ``params`` (kind specific) and the ``inputs``/``outputs`` descriptor lists.
    """
    kind = getattr(model, 'kind', None)
    if kind not in model_kinds or not isinstance(model, model_kinds[kind]):
        raise TypeError('only built-in models can be saved, got %s' % type(model))
    doc = dict(format=MODEL_FORMAT,
               kind=kind,
               n_inputs=model.n_inputs,
               n_outputs=model.n_outputs,
               params=model.to_params(),
               inputs=[d.to_dict() for d in inputs] if inputs is not None else None,
               outputs=[d.to_dict() for d in outputs] if outputs is not None else None)
    dump_yaml(doc, path)


def load_model(path: Union[str, Path]) -> Tuple[BaseBlackBox, Optional[List[InputDescriptor]],
                                                Optional[List[OutputDescriptor]]]:
    """
    Load a model saved by :func:`save_model`.

    Returns
    -------
    tuple
        ``(model, inputs, outputs)``; descriptors are ``None`` when they were not saved.
    """
    if not Path(path).is_file():
        raise ValidationError('model file %s does not exist' % path)
    doc = load_yaml(path)
    if not isinstance(doc, dict) or doc.get('format') != MODEL_FORMAT:
        raise ValidationError('%s is not a %s document' % (path, MODEL_FORMAT))
    kind = doc.get('kind')
    if kind not in model_kinds:
        raise ValidationError('unknown model kind <%s>, available: %s' % (kind, list(model_kinds)))
    model = model_kinds[kind].from_params(doc['params'])
    if (model.n_inputs, model.n_outputs) != (doc['n_inputs'], doc['n_outputs']):
        raise ValidationError('model file %s declares %d -> %d but the parameters give %d -> %d' %
                              (path, doc['n_inputs'], doc['n_outputs'], model.n_inputs, model.n_outputs))
    inputs = [InputDescriptor.from_dict(d) for d in doc['inputs']] if doc.get('inputs') else None
    outputs = [OutputDescriptor.from_dict(d) for d in doc['outputs']] if doc.get('outputs') else None
    return model, inputs, outputs
