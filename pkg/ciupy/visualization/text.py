#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

import math
from collections import OrderedDict
from dataclasses import dataclass
from pathlib import Path
from typing import List, Sequence, Tuple, Union

from ciupy.core.base import ValidationError
from ciupy.core.descriptor import CiuResult
from ciupy.core.vocabulary import ConceptVocabulary
from ciupy.utils import config

__all__ = ['WordTable', 'textual_explanation']

Words = Tuple[Tuple[float, str], ...]


def _words(pairs, what) -> Words:
    pairs = tuple((float(b), str(w)) for b, w in pairs)
    if not pairs:
        raise ValidationError('%s word table is empty' % what)
    bounds = [b for b, _ in pairs]
    if any(b2 <= b1 for b1, b2 in zip(bounds, bounds[1:])):
        raise ValidationError('%s word table bounds must be strictly increasing but got %s' % (what, bounds))
    if bounds[-1] < 1:
        raise ValidationError('the last %s word table bound must be at least 1 but got %s' % (what, bounds[-1]))
    return pairs


@dataclass(frozen=True)
class WordTable(object):
    """
    ``(upper bound, word)`` pairs for CI and for CU. A value gets the word of the
    first bound it does not exceed; values above the last bound get the last word.

    A CU equal to ``cu_neutral``, or the CU of a zero-width range, gets ``neutral_word``.
    """
    ci_words: Words
    cu_words: Words
    neutral_word: str = 'neither favorable nor unfavorable'
    cu_neutral: float = 0.5

    def __post_init__(self):
        object.__setattr__(self, 'ci_words', _words(self.ci_words, 'CI'))
        object.__setattr__(self, 'cu_words', _words(self.cu_words, 'CU'))

    @classmethod
    def from_config(cls, path: Union[str, Path, None] = None, **overrides) -> 'WordTable':
        params = dict(neutral_word=config('cu_neutral_word', path=path), cu_neutral=config('cu_neutral', path=path))
        params.update({k: v for k, v in overrides.items() if v is not None})
        return cls(config('ci_words', path=path), config('cu_words', path=path), **params)

    @staticmethod
    def _lookup(value: float, words: Words) -> str:
        for bound, word in words:
            if value <= bound:
                return word
        return words[-1][1]

    def ci_word(self, ci: float) -> str:
        return self._lookup(ci, self.ci_words)

    def cu_word(self, cu: float, degenerate: bool = False) -> str:
        if degenerate or math.isclose(cu, self.cu_neutral, rel_tol=0., abs_tol=1e-12):
            return self.neutral_word
        return self._lookup(cu, self.cu_words)


def _label(r: CiuResult, vocabulary: ConceptVocabulary = None) -> str:
    if vocabulary is not None:
        if r.is_concept and r.target in vocabulary:
            return vocabulary.display_name(r.target)
        if not r.is_concept and len(r.indices) == 1:
            return vocabulary.feature_name(r.indices[0], r.label or str(r.indices[0]))
    return r.label or str(r.target)


def _join(parts: List[str]) -> str:
    if len(parts) == 1:
        return parts[0]
    return ', '.join(parts[:-1]) + ' and ' + parts[-1]


def textual_explanation(results: Sequence[CiuResult],
                        vocabulary: ConceptVocabulary = None,
                        word_table: WordTable = None,
                        top_k: int = 3) -> str:
    """
    One sentence per output naming its ``top_k`` most important targets with their
    CU and CI words, e.g.::

        virginica = 0.962 because Petal Length is very favorable (extremely important)
        and Petal Width is favorable (very important).

    Parameters
    ----------
    results
        Results to describe, possibly for several outputs.
    vocabulary
        Registered synonyms replace target labels.
    word_table
        Words for CI and CU. Default from the configuration.
    top_k
        Targets mentioned per output, by decreasing CI (ties keep input order).
    """
    results = list(results)
    if not results:
        raise ValidationError('no results to explain')
    if top_k < 1:
        raise ValidationError('top_k must be at least 1 but got %s' % top_k)
    word_table = word_table or WordTable.from_config()

    by_output = OrderedDict()
    for r in results:
        by_output.setdefault(r.output_index, []).append(r)

    sentences = []
    for group in by_output.values():
        head = group[0]
        top = sorted(group, key=lambda r: -r.ci)[:top_k]
        parts = [
            '%s is %s (%s)' % (_label(r, vocabulary), word_table.cu_word(r.cu, r.degenerate), word_table.ci_word(r.ci))
            for r in top
        ]
        sentences.append('%s = %.3f because %s.' % (head.output_name or 'output %d' % head.output_index,
                                                   head.y_context, _join(parts)))
    return '\n'.join(sentences)
