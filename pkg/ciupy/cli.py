#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

import argparse
import logging
import re
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from ciupy._conf import __version__
from ciupy.core.base import BaseBlackBox, CIUError, ValidationError, VocabularyError
from ciupy.core.descriptor import Context, IndexSet
from ciupy.core.problem import Problem, validate_problem
from ciupy.core.vocabulary import ABSOLUTE, ALL, ConceptVocabulary
from ciupy.datatools.dataset import Dataset, load_dataset
from ciupy.explain.explainer import CIUExplainer, ExplanationRequest
from ciupy.model.analytic import LinearModel, NonlinearDemoModel, RuleStepModel, unit_box_problem
from ciupy.model.extern import ExternalModel
from ciupy.model.knn import KnnModel
from ciupy.model.persist import load_model, save_model
from ciupy.model.training import train_mlp
from ciupy.sampling import SamplingConfig
from ciupy.utils import config, load_yaml, set_env
from ciupy.visualization import (ColorSpec, WordTable, dumps, render_barplot, render_curve, results_document,
                                 textual_explanation)

__all__ = ['main', 'build_parser']

logger = logging.getLogger('ciupy')

TRAINED_MODELS = ('mlp', 'knn')
DEMO_MODELS = {
    'linear-demo': lambda: LinearModel([0.3, 0.7]),
    'rule-demo': RuleStepModel.demo,
    'nonlinear-demo': NonlinearDemoModel,
}
FORMATS = ('text', 'json', 'svg')


def _floats(text: str) -> List[float]:
    try:
        return [float(v) for v in text.split(',') if v.strip()]
    except ValueError as e:
        raise ValidationError('can not read numbers from <%s>' % text) from e


def _slug(name: str) -> str:
    return re.sub(r'[^A-Za-z0-9_.-]+', '_', name).strip('_') or 'output'


def _dataset(args) -> Optional[Dataset]:
    if not getattr(args, 'data', None):
        return None
    targets = [t.strip() for t in args.target.split(',')] if args.target else None
    categorical = [c.strip() for c in args.categorical.split(',')] if args.categorical else ()
    dataset = load_dataset(args.data, targets, categorical)
    logger.info('loaded %r', dataset)
    return dataset


def _train(args, dataset: Optional[Dataset]) -> BaseBlackBox:
    if dataset is None:
        raise ValidationError('model <%s> needs training data, give --data' % args.model)
    if args.model == 'knn':
        return KnnModel.from_dataset(dataset, args.k)
    hidden = [int(h) for h in args.hidden.split(',')] if args.hidden else None
    result = train_mlp(dataset, hidden, args.epochs, seed=args.seed,
                       progress_bar='console' if args.verbose else None)
    if result.accuracy is not None:
        logger.info('trained mlp: accuracy %.4f, mse %.6f', result.accuracy, result.mse)
    else:
        logger.info('trained mlp: mse %.6f', result.mse)
    return result.model


def _problem(args, dataset: Optional[Dataset]) -> Problem:
    """Validated problem from exactly one model source."""
    sources = [s for s in ('model', 'load', 'external_cmd') if getattr(args, s, None)]
    if len(sources) != 1:
        raise ValidationError('give exactly one of --model, --load or --external-cmd')
    inputs = outputs = None
    training_data = None if dataset is None else dataset.x
    if dataset is not None:
        inputs, outputs = dataset.input_descriptors(), dataset.output_descriptors()

    if args.load:
        model, saved_in, saved_out = load_model(args.load)
        inputs = saved_in or inputs
        outputs = saved_out or outputs
    elif args.external_cmd:
        if inputs is not None:
            n_in, n_out = len(inputs), len(outputs)
        elif args.instance:
            n_in, n_out = len(_floats(args.instance)), 1
        else:
            raise ValidationError('the arity of an external model comes from --data or --instance')
        model = ExternalModel(args.external_cmd, n_in, n_out, timeout=args.timeout)
    elif args.model in DEMO_MODELS:
        model = DEMO_MODELS[args.model]()
        inputs = outputs = None
        training_data = None
    else:
        model = _train(args, dataset)

    if inputs is None or outputs is None:
        problem = unit_box_problem(model)
        return validate_problem(model, problem.inputs, problem.outputs, training_data=training_data)
    return validate_problem(model, inputs, outputs, training_data=training_data)


def _context(args, problem: Problem, dataset: Optional[Dataset]) -> Context:
    if args.instance and args.row:
        raise ValidationError('give either --instance or --row, not both')
    if args.instance:
        return problem.check_context(_floats(args.instance))
    if args.row:
        if dataset is None:
            raise ValidationError('--row needs --data')
        return problem.check_context(dataset.context(args.row))
    raise ValidationError('give the instance to explain with --instance or --row')


def _vocabulary(args, problem: Problem) -> ConceptVocabulary:
    if not getattr(args, 'concepts', None):
        return ConceptVocabulary()
    return ConceptVocabulary.from_yaml(args.concepts, [d.name for d in problem.inputs])


def _targets(text: Optional[str], problem: Problem, vocabulary: ConceptVocabulary) -> Tuple:
    if not text:
        return tuple(IndexSet.of(i) for i in range(problem.n_inputs))
    ret = []
    for token in (t.strip() for t in text.split(',')):
        if not token:
            continue
        if token in vocabulary or token.upper() == ALL:
            ret.append(token)
        else:
            ret.append(IndexSet(tuple(problem.input_index(p) for p in token.split('+'))))
    return tuple(ret)


def _sampling(args) -> SamplingConfig:
    return SamplingConfig.from_config(n=args.n,
                                      seed=args.seed,
                                      include_extremes=False if args.no_extremes else None,
                                      filter_distance=args.filter_distance)


def _formats(text: str) -> List[str]:
    formats = [f.strip().lower() for f in text.split(',') if f.strip()]
    bad = [f for f in formats if f not in FORMATS]
    if bad:
        raise ValidationError('unknown format(s) %s, choose from %s' % (bad, list(FORMATS)))
    return formats


def explain_command(args) -> int:
    formats = _formats(args.format)
    dataset = _dataset(args)
    problem = _problem(args, dataset)
    context = _context(args, problem, dataset)
    vocabulary = _vocabulary(args, problem)
    sampling = _sampling(args)
    explainer = CIUExplainer(problem, vocabulary, n_jobs=args.n_jobs)

    parent = args.parent or ABSOLUTE
    if parent.upper() not in (ABSOLUTE, ALL) and not args.targets:
        results = explainer.explain_concept_decomposition(parent, context, sampling, args.output)
    else:
        request = ExplanationRequest(context=context,
                                     targets=_targets(args.targets, problem, vocabulary),
                                     output_index=args.output,
                                     parent=parent,
                                     sampling=sampling)
        results = explainer.explain(request)
    logger.info('explained %d target(s) in %.3f s', len(results), explainer.timer.elapsed)

    print('seed=%s N=%d' % (sampling.seed, sampling.n))
    out_dir = Path(args.out_dir)
    if 'json' in formats or 'svg' in formats:
        out_dir.mkdir(parents=True, exist_ok=True)
    if 'text' in formats:
        print(textual_explanation(results, vocabulary, WordTable.from_config(cu_neutral=args.cu_neutral),
                                  top_k=args.top_k))
        for r in results:
            print('  %-28s %-14s CI=%.4f CU=%.4f [%.4f, %.4f] y=%.4f%s' %
                  (r.label, r.output_name, r.ci, r.cu, r.cmin, r.cmax, r.y_context,
                   ' (degenerate)' if r.degenerate else ''))
    if 'json' in formats:
        doc = results_document(results,
                               context=list(context.values),
                               n=sampling.n,
                               seed=sampling.seed,
                               include_extremes=sampling.include_extremes,
                               model=problem.model.__class__.__name__)
        path = out_dir / 'ciu_results.json'
        path.write_text(dumps(doc))
        print('wrote %s' % path)
    if 'svg' in formats:
        spec = ColorSpec.from_config(cu_neutral=args.cu_neutral)
        by_output = {}
        for r in results:
            by_output.setdefault(r.output_index, []).append(r)
        for j, group in by_output.items():
            path = out_dir / ('ciu_%s.svg' % _slug(problem.outputs[j].name))
            path.write_text(render_barplot(group, spec))
            print('wrote %s' % path)
    return 0


def curve_command(args) -> int:
    dataset = _dataset(args)
    problem = _problem(args, dataset)
    context = _context(args, problem, dataset)
    output = args.output if args.output.upper() != ALL else 0
    curve = CIUExplainer(problem).input_output_curve(context, args.input, output, args.resolution)
    print('%s -> %s' % (curve.input_name, curve.output_name))
    for x, y in zip(curve.x, curve.y):
        print('%.6g,%.6g' % (x, y))
    print('context: %.6g,%.6g' % (curve.context_x, curve.context_y))
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / ('curve_%s_%s.svg' % (_slug(curve.input_name), _slug(curve.output_name)))
    path.write_text(render_curve(curve))
    print('wrote %s' % path)
    return 0


def train_command(args) -> int:
    dataset = _dataset(args)
    if dataset is None:
        raise ValidationError('train needs --data')
    model = _train(args, dataset)
    save_model(model, args.save, dataset.input_descriptors(), dataset.output_descriptors())
    print('saved %s model to %s' % (args.model, args.save))
    return 0


def vocab_validate_command(args) -> int:
    if not Path(args.vocabulary).is_file():
        raise VocabularyError('vocabulary file %s does not exist' % args.vocabulary)
    data = load_yaml(args.vocabulary)
    features = None
    if args.data:
        features = _dataset(args).feature_names
    elif args.features:
        features = [f.strip() for f in args.features.split(',')]
    elif isinstance(data, dict) and data.get('features'):
        features = [str(f) for f in data['features']]
    vocabulary = ConceptVocabulary.from_dict(data, features)
    print('OK: %d concepts' % len(vocabulary))
    print(vocabulary.tree(features))
    return 0


def _add_data(p):
    p.add_argument('--data', help='CSV file or built-in dataset name (iris)')
    p.add_argument('--target', help='target column(s), comma separated; default the last column')
    p.add_argument('--categorical', help='categorical column(s), comma separated')


def _add_model(p, trained_only=False):
    choices = TRAINED_MODELS if trained_only else TRAINED_MODELS + tuple(DEMO_MODELS)
    p.add_argument('--model', choices=choices, help='built-in model kind')
    p.add_argument('--epochs', type=int, help='mlp training epochs')
    p.add_argument('--hidden', help='mlp hidden layer sizes, comma separated')
    p.add_argument('--k', type=int, help='neighbours of the knn model')
    p.add_argument('--seed', type=int, default=None, help='random seed of sampling and training')


def _add_source(p):
    p.add_argument('--load', help='saved model file')
    p.add_argument('--external-cmd', help='command evaluating CSV rows from stdin')
    p.add_argument('--timeout', type=float, help='external model timeout in seconds')
    p.add_argument('--instance', help='context values, comma separated')
    p.add_argument('--row', type=int, help='1-based data row used as context')
    p.add_argument('--out-dir', default='.', help='directory of written files')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='ciupy',
        description='''
        Contextual importance and utility explanations for black-box models.
        ''')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('--config', help='user configuration file overriding the defaults')
    parser.add_argument('-v', '--verbose', action='store_true', help='log progress to stderr')
    subparsers = parser.add_subparsers()

    p = subparsers.add_parser('explain', help='see `explain -h`')
    _add_data(p)
    _add_model(p)
    _add_source(p)
    p.add_argument('--output', default=ALL, help='output name, 0-based index or ALL')
    p.add_argument('--targets', help='features (name or index, `a+b` for a set) or concepts, comma separated')
    p.add_argument('--concepts', help='vocabulary file')
    p.add_argument('--parent', default=ABSOLUTE, help='ABSOLUTE, ALL or a concept name')
    p.add_argument('--n', type=int, help='random samples per target')
    p.add_argument('--format', default='text', help='text, json and/or svg, comma separated')
    p.add_argument('--cu-neutral', type=float, help='CU of the yellow color stop')
    p.add_argument('--filter-distance', type=float, help='drop samples farther from the training data')
    p.add_argument('--no-extremes', action='store_true', help='do not add the input range end points')
    p.add_argument('--top-k', type=int, default=3, help='targets named in the text explanation')
    p.add_argument('--n-jobs', type=int, default=1, help='parallel target evaluation')
    p.set_defaults(handler=explain_command)

    p = subparsers.add_parser('curve', help='see `curve -h`')
    _add_data(p)
    _add_model(p)
    _add_source(p)
    p.add_argument('--input', required=True, help='swept input, name or 0-based index')
    p.add_argument('--output', default='0', help='output name or 0-based index')
    p.add_argument('--resolution', type=int, default=101, help='points of the sweep')
    p.set_defaults(handler=curve_command)

    p = subparsers.add_parser('train', help='see `train -h`')
    _add_data(p)
    _add_model(p, trained_only=True)
    p.add_argument('--save', required=True, help='model file to write')
    p.set_defaults(handler=train_command)

    p = subparsers.add_parser('vocab-validate', help='see `vocab-validate -h`')
    p.add_argument('vocabulary', help='vocabulary file')
    _add_data(p)
    p.add_argument('--features', help='feature names, comma separated')
    p.set_defaults(handler=vocab_validate_command)
    return parser


def main(argv: Sequence[str] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=logging.INFO if args.verbose else logging.WARNING,
                        format='%(name)s %(levelname)s: %(message)s')
    if not hasattr(args, 'handler'):
        parser.print_help()
        return 2
    if getattr(args, 'seed', 0) is None:
        args.seed = config('seed', path=args.config)
    try:
        if args.config:
            with set_env(CIUPY_CONFIG=str(args.config)):
                return args.handler(args)
        return args.handler(args)
    except CIUError as e:
        logger.error('%s: %s', e.__class__.__name__, e)
        return 1
