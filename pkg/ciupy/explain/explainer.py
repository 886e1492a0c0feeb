#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

import warnings
from collections import namedtuple
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple, Union

import numpy as np
from joblib import Parallel, delayed

from ciupy.core.base import ValidationError, VocabularyError
from ciupy.core.descriptor import CATEGORICAL, CiuResult, Context, IndexSet, OutputRangeEstimate
from ciupy.core.problem import Problem
from ciupy.core.vocabulary import ABSOLUTE, ALL, ConceptVocabulary
from ciupy.explain.ciu import (NEUTRAL_CU, contextual_importance, contextual_utility, estimate_output_range,
                               evaluate_samples, generalized_contextual_importance)
from ciupy.sampling import SampleMatrix, SamplingConfig, filter_unrealistic, generate_samples
from ciupy.utils import TimedMetaClass

__all__ = [
    'ExplanationRequest', 'CIUExplainer', 'Curve', 'explain', 'explain_concept_decomposition', 'input_output_curve'
]

ALL_INPUTS_LABEL = 'All inputs'

Curve = namedtuple('Curve', ['x', 'y', 'context_x', 'context_y', 'input_name', 'output_name'])
"""Input-output sweep of one input, the other inputs held at the context."""

Target = Union[IndexSet, str]


@dataclass(frozen=True)
class ExplanationRequest(object):
    """
    What to explain: the context, the targets (input index sets or concept names),
    the output (an index, a name or ``ALL``) and the reference for CI.

    ``parent`` is ``ABSOLUTE`` for CI relative to ``[absmin, absmax]``, or ``ALL`` or
    a concept name for CI relative to the estimated range of that concept.
    """
    context: Context
    targets: Tuple[Target, ...]
    output_index: Union[int, str] = ALL
    parent: str = ABSOLUTE
    sampling: SamplingConfig = field(default_factory=SamplingConfig)

    def __post_init__(self):
        if not isinstance(self.context, Context):
            object.__setattr__(self, 'context', Context(tuple(np.asarray(self.context, dtype=float).ravel())))
        targets = (self.targets,) if isinstance(self.targets, (str, int, IndexSet)) else tuple(self.targets)
        if not targets:
            raise ValidationError('an explanation request needs at least one target')
        object.__setattr__(self, 'targets',
                           tuple(t if isinstance(t, str) else IndexSet.of(t) for t in targets))
        if self.parent is None:
            object.__setattr__(self, 'parent', ABSOLUTE)


class _Range(object):
    """Output ranges of one sample set for every output."""

    def __init__(self, samples: SampleMatrix, predictions: np.ndarray, estimates: List[OutputRangeEstimate]):
        self.samples = samples
        self.predictions = predictions
        self.estimates = estimates


class CIUExplainer(object, metaclass=TimedMetaClass):
    """
    Contextual importance and utility of inputs and concepts for a validated problem.

    ::

        >>> from ciupy.model import NonlinearDemoModel, unit_box_problem
        >>> problem = unit_box_problem(NonlinearDemoModel())
        >>> explainer = CIUExplainer(problem)
        >>> explainer.explain(ExplanationRequest((0.1, 0.2), targets=[0, 1], output_index=0))

    Targets are sampled with the same seed. When ``n_jobs`` is not 1 and the model
    declares ``concurrent_safe``, targets are evaluated in parallel threads.
    The time spent in each public method is kept in :attr:`timer`.
    """

    def __init__(self, problem: Problem, vocabulary: ConceptVocabulary = None, *, n_jobs: int = 1):
        if not isinstance(problem, Problem):
            raise TypeError('parameter `problem` must be a instance of <Problem> but got %s' % type(problem))
        self._problem = problem
        self._vocabulary = (vocabulary or ConceptVocabulary()).check(problem.n_inputs)
        self._n_jobs = n_jobs

    @property
    def problem(self) -> Problem:
        return self._problem

    @property
    def vocabulary(self) -> ConceptVocabulary:
        return self._vocabulary

    def resolve_target(self, target: Target) -> Tuple[IndexSet, str]:
        """Index set and display label of a target."""
        if isinstance(target, str):
            if target.upper() == ALL:
                return self._problem.all_inputs, ALL_INPUTS_LABEL
            return self._vocabulary.index_set(target), self._vocabulary.display_name(target)
        target = IndexSet.of(target).check(self._problem.n_inputs)
        return target, ' + '.join(self._feature_label(i) for i in target)

    def _feature_label(self, i: int) -> str:
        return self._vocabulary.feature_name(i, self._problem.inputs[i].name)

    def _outputs(self, output_index: Union[int, str]) -> List[int]:
        if isinstance(output_index, str) and output_index.strip().upper() == ALL:
            return list(range(self._problem.n_outputs))
        return [self._problem.output_index(output_index)]

    def _sample(self, context: Context, studied: IndexSet, config: SamplingConfig) -> SampleMatrix:
        samples = generate_samples(context, studied, self._problem.inputs, config)
        if config.filter_distance is not None:
            if self._problem.training_data is None:
                raise ValidationError('filter_distance needs a problem with training data')
            samples = filter_unrealistic(samples, self._problem.training_data, config.filter_distance,
                                         self._problem.inputs)
        return samples

    def _range(self, context: Context, studied: IndexSet, config: SamplingConfig) -> _Range:
        samples = self._sample(context, studied, config)
        predictions = evaluate_samples(self._problem.model, samples.rows)
        estimates = [
            estimate_output_range(self._problem.model, samples, j, predictions)
            for j in range(self._problem.n_outputs)
        ]
        return _Range(samples, predictions, estimates)

    def _ranges(self, context: Context, studied: Sequence[IndexSet], config: SamplingConfig) -> List[_Range]:
        if self._n_jobs != 1 and self._problem.model.concurrent_safe and len(studied) > 1:
            return Parallel(n_jobs=self._n_jobs, prefer='threads')(
                delayed(self._range)(context, s, config) for s in studied)
        return [self._range(context, s, config) for s in studied]

    def _context_output(self, context: Context) -> np.ndarray:
        return evaluate_samples(self._problem.model, context.as_array().reshape(1, -1))[0]

    def explain(self, request: ExplanationRequest) -> List[CiuResult]:
        """
        CI and CU of every target of ``request`` for the requested output(s).

        Results are ordered by output, then by target in request order.

        Parameters
        ----------
        request
            What to explain.

        Returns
        -------
        list of CiuResult
        """
        problem = self._problem
        context = problem.check_context(request.context)
        outputs = self._outputs(request.output_index)
        config = request.sampling
        resolved = [self.resolve_target(t) for t in request.targets]

        parent = request.parent
        parent_idx = None
        if parent.upper() == ALL:
            parent = ALL
            parent_idx = problem.all_inputs
        elif parent.upper() == ABSOLUTE:
            parent = ABSOLUTE
        else:
            parent_idx = self._vocabulary.index_set(parent)
        if parent_idx is not None:
            for (idx, label) in resolved:
                if not idx.issubset(parent_idx):
                    raise ValidationError('target <%s> %s is not a subset of parent <%s> %s' %
                                          (label, idx.to_list(), parent, parent_idx.to_list()))

        studied = [idx for idx, _ in resolved]
        if parent_idx is not None:
            studied.append(parent_idx)
        ranges = self._ranges(context, studied, config)
        parent_range = ranges.pop() if parent_idx is not None else None

        y_direct = None
        if not config.include_context:
            y_direct = self._context_output(context)

        results = []
        for j in outputs:
            out = problem.outputs[j]
            reference = None
            if parent_range is not None:
                reference = parent_range.estimates[j].merge(*[r.estimates[j] for r in ranges])
            for (target, (idx, label), rng) in zip(request.targets, resolved, ranges):
                est = rng.estimates[j]
                y = est.y_context if est.contains_context else float(y_direct[j])
                if reference is None:
                    ci = contextual_importance(est, out)
                else:
                    ci = generalized_contextual_importance(est, reference)
                degenerate = est.degenerate
                if est.contains_context:
                    cu = contextual_utility(y, est)
                elif degenerate:
                    cu = NEUTRAL_CU
                else:
                    cu = (y - est.cmin) / est.width
                    if not 0 <= cu <= 1:
                        warnings.warn('CU %.4g of <%s> is outside [0, 1] as the context row was not sampled' %
                                      (cu, label), RuntimeWarning)
                overshoot = est.cmin < out.absmin or est.cmax > out.absmax
                if overshoot:
                    warnings.warn('output <%s> range [%.6g, %.6g] for <%s> leaves [%.6g, %.6g]' %
                                  (out.name, est.cmin, est.cmax, label, out.absmin, out.absmax), RuntimeWarning)
                results.append(
                    CiuResult(target=target,
                              output_index=j,
                              ci=ci,
                              cu=cu,
                              cmin=est.cmin,
                              cmax=est.cmax,
                              y_context=y,
                              n=est.n_samples,
                              seed=config.seed,
                              label=label,
                              output_name=out.name,
                              parent=parent,
                              degenerate=degenerate,
                              overshoot=overshoot,
                              indices=idx.indices))
        return results

    def explain_concept_decomposition(self,
                                      concept: str,
                                      context: Union[Context, Sequence[float]],
                                      sampling: SamplingConfig = None,
                                      output_index: Union[int, str] = ALL) -> List[CiuResult]:
        """
        Explain a concept by its registered sub-concepts, or by its member inputs when it
        has none, with CI relative to the concept's own estimated range.

        ``concept`` may be ``ALL``; its parts are then the top-level concepts, or every input.
        """
        if concept.upper() == ALL:
            members = self._problem.all_inputs
            children = self._vocabulary.children(None)
            concept = ALL
        else:
            if concept not in self._vocabulary:
                raise VocabularyError('unknown concept <%s>, available: %s' %
                                      (concept, list(self._vocabulary.concepts)))
            members = self._vocabulary.index_set(concept)
            children = self._vocabulary.children(concept)
        if len(members) < 2:
            raise ValidationError('concept <%s> has a single member input, its decomposition is vacuous' % concept)

        targets: List[Target] = list(children) if children else [IndexSet.of(i) for i in members]
        request = ExplanationRequest(context=context,
                                     targets=tuple(targets),
                                     output_index=output_index,
                                     parent=concept,
                                     sampling=sampling or SamplingConfig.from_config())
        return self.explain(request)

    def input_output_curve(self,
                           context: Union[Context, Sequence[float]],
                           input_index: Union[int, str],
                           output_index: Union[int, str],
                           resolution: int = 101) -> Curve:
        """
        Output as a function of one input across its descriptor range, the other inputs
        held at the context. Categorical inputs are swept over their categories.

        Returns
        -------
        Curve
            ``x`` and ``y`` of the sweep plus the context point.
        """
        problem = self._problem
        context = problem.check_context(context)
        i = problem.input_index(input_index)
        j = problem.output_index(output_index)
        if resolution < 2:
            raise ValidationError('curve resolution must be at least 2 but got %s' % resolution)

        d = problem.inputs[i]
        if d.kind == CATEGORICAL:
            xs = np.asarray(d.categories, dtype=float)
        else:
            xs = np.linspace(d.min_value, d.max_value, resolution)
        rows = np.tile(context.as_array(), (xs.shape[0] + 1, 1))
        rows[1:, i] = xs
        y = evaluate_samples(problem.model, rows)[:, j]
        return Curve(x=xs, y=y[1:], context_x=context[i], context_y=float(y[0]), input_name=d.name,
                     output_name=problem.outputs[j].name)


def explain(problem: Problem, request: ExplanationRequest, vocabulary: ConceptVocabulary = None) -> List[CiuResult]:
    """Shortcut for ``CIUExplainer(problem, vocabulary).explain(request)``."""
    return CIUExplainer(problem, vocabulary).explain(request)


def explain_concept_decomposition(problem: Problem,
                                  concept: str,
                                  context: Union[Context, Sequence[float]],
                                  sampling: SamplingConfig = None,
                                  vocabulary: ConceptVocabulary = None,
                                  output_index: Union[int, str] = ALL) -> List[CiuResult]:
    """Shortcut for :meth:`CIUExplainer.explain_concept_decomposition`."""
    return CIUExplainer(problem, vocabulary).explain_concept_decomposition(concept, context, sampling, output_index)


def input_output_curve(problem: Problem,
                       context: Union[Context, Sequence[float]],
                       input_index: Union[int, str],
                       output_index: Union[int, str],
                       resolution: int = 101) -> Curve:
    """Shortcut for :meth:`CIUExplainer.input_output_curve`."""
    return CIUExplainer(problem).input_output_curve(context, input_index, output_index, resolution)
