#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

from collections import OrderedDict
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Union

from ciupy.core.base import ValidationError, VocabularyError
from ciupy.core.descriptor import IndexSet
from ciupy.utils import load_yaml

__all__ = ['ALL', 'ABSOLUTE', 'ConceptVocabulary']

ALL = 'ALL'
ABSOLUTE = 'ABSOLUTE'


class ConceptVocabulary(object):
    """
    Named Intermediate Concepts, each standing for a set of input indices.

    Concepts may have a parent concept whose index set contains their own, and any
    number of synonyms used as display names. Input features may get synonyms too.

    The YAML form refers to features by name (or 0-based index)::

        features: [Sepal Length, Sepal Width, Petal Length, Petal Width]
        concepts:
          Sepal size and shape:
            members: [Sepal Length, Sepal Width]
          Petal size and shape:
            members: [Petal Length, Petal Width]
            synonyms: [petals]
        feature_synonyms:
          Petal Length: [length of the petals]

    The ``features`` list is optional when feature names are supplied by the caller.
    """

    def __init__(self,
                 concepts: Mapping[str, Union[IndexSet, Sequence[int]]] = None,
                 *,
                 synonyms: Mapping[str, Sequence[str]] = None,
                 parents: Mapping[str, str] = None,
                 feature_synonyms: Mapping[int, Sequence[str]] = None,
                 n_inputs: Optional[int] = None):
        self._concepts: Dict[str, IndexSet] = OrderedDict()
        for name, idx in (concepts or {}).items():
            name = str(name)
            if name.upper() in (ALL, ABSOLUTE):
                raise VocabularyError('<%s> is a reserved concept name' % name)
            if name in self._concepts:
                raise VocabularyError('duplicated concept <%s>' % name)
            try:
                self._concepts[name] = IndexSet.of(idx)
            except ValidationError as e:
                raise VocabularyError('concept <%s>: %s' % (name, e)) from e

        self._synonyms = {str(k): [str(s) for s in v] for k, v in (synonyms or {}).items()}
        self._parents = {str(k): str(v) for k, v in (parents or {}).items() if v is not None}
        self._feature_synonyms = {int(k): [str(s) for s in v] for k, v in (feature_synonyms or {}).items()}

        for name in self._synonyms:
            if name not in self._concepts:
                raise VocabularyError('synonyms given for unknown concept <%s>' % name)
        for child, parent in self._parents.items():
            if child not in self._concepts:
                raise VocabularyError('parent given for unknown concept <%s>' % child)
            if parent not in self._concepts:
                raise VocabularyError('concept <%s> has unknown parent <%s>' % (child, parent))
            if not self._concepts[child].issubset(self._concepts[parent]):
                raise VocabularyError('concept <%s> is not a subset of its parent <%s>' % (child, parent))
        for child in self._parents:
            seen = {child}
            node = child
            while node in self._parents:
                node = self._parents[node]
                if node in seen:
                    raise VocabularyError('cyclic parent structure at concept <%s>' % child)
                seen.add(node)

        if n_inputs is not None:
            self.check(n_inputs)

    def check(self, n_inputs: int) -> 'ConceptVocabulary':
        """Make sure every referenced index is a valid input index."""
        for name, idx in self._concepts.items():
            bad = [i for i in idx if i >= n_inputs]
            if bad:
                raise VocabularyError('concept <%s> references feature index %s but there are only %d inputs' %
                                      (name, bad, n_inputs))
        bad = [i for i in self._feature_synonyms if not 0 <= i < n_inputs]
        if bad:
            raise VocabularyError('feature synonyms reference unknown feature index %s' % bad)
        return self

    @property
    def concepts(self) -> Dict[str, IndexSet]:
        return dict(self._concepts)

    @property
    def synonyms(self) -> Dict[str, List[str]]:
        return {k: list(v) for k, v in self._synonyms.items()}

    @property
    def parents(self) -> Dict[str, str]:
        return dict(self._parents)

    def __contains__(self, name):
        return name in self._concepts

    def __len__(self):
        return len(self._concepts)

    def __getitem__(self, name: str) -> IndexSet:
        return self.index_set(name)

    def index_set(self, name: str) -> IndexSet:
        if name not in self._concepts:
            raise VocabularyError('unknown concept <%s>, available: %s' % (name, list(self._concepts)))
        return self._concepts[name]

    def children(self, name: Optional[str]) -> List[str]:
        """Concepts registered under ``name``; ``None`` gives the top-level concepts."""
        return [c for c in self._concepts if self._parents.get(c) == name]

    def display_name(self, name: str) -> str:
        """First synonym of a concept, or the concept name itself."""
        syn = self._synonyms.get(name)
        return syn[0] if syn else name

    def feature_name(self, index: int, default: str) -> str:
        syn = self._feature_synonyms.get(index)
        return syn[0] if syn else default

    def tree(self, feature_names: Sequence[str] = None) -> str:
        """Render the concept hierarchy as indented text."""

        def fmt(idx: IndexSet):
            if feature_names is None:
                return ', '.join(str(i) for i in idx)
            return ', '.join(feature_names[i] for i in idx)

        lines = []

        def walk(parent, depth):
            for c in self.children(parent):
                syn = self._synonyms.get(c)
                tail = ' (aka %s)' % ', '.join(syn) if syn else ''
                lines.append('%s- %s: [%s]%s' % ('  ' * depth, c, fmt(self._concepts[c]), tail))
                walk(c, depth + 1)

        walk(None, 0)
        return '\n'.join(lines)

    def to_dict(self, feature_names: Sequence[str] = None) -> dict:
        def ref(i):
            return i if feature_names is None else feature_names[i]

        concepts = OrderedDict()
        for name, idx in self._concepts.items():
            entry = dict(members=[ref(i) for i in idx])
            if name in self._synonyms:
                entry['synonyms'] = list(self._synonyms[name])
            if name in self._parents:
                entry['parent'] = self._parents[name]
            concepts[name] = entry
        ret = dict(concepts=dict(concepts))
        if feature_names is not None:
            ret['features'] = list(feature_names)
        if self._feature_synonyms:
            ret['feature_synonyms'] = {ref(k): list(v) for k, v in self._feature_synonyms.items()}
        return ret

    @classmethod
    def from_dict(cls, data: Mapping, feature_names: Sequence[str] = None) -> 'ConceptVocabulary':
        """
        Build a vocabulary from its mapping form, resolving feature names to indices.

        Parameters
        ----------
        data
            Mapping with ``concepts`` and optional ``features`` and ``feature_synonyms``.
        feature_names
            Input names of the problem. Overrides ``features`` given in ``data``.
        """
        if not isinstance(data, Mapping) or 'concepts' not in data:
            raise VocabularyError('a vocabulary needs a `concepts` mapping')
        if feature_names is None:
            feature_names = data.get('features')
        lookup = None
        if feature_names is not None:
            feature_names = [str(f) for f in feature_names]
            lookup = {f.lower(): i for i, f in enumerate(feature_names)}

        def resolve(ref):
            if isinstance(ref, int) or (isinstance(ref, str) and ref.strip().isdigit()):
                return int(ref)
            if lookup is None:
                raise VocabularyError('feature <%s> given by name but no feature names are known' % ref)
            key = str(ref).strip().lower()
            if key not in lookup:
                raise VocabularyError('unknown feature <%s>, available: %s' % (ref, feature_names))
            return lookup[key]

        concepts, synonyms, parents = OrderedDict(), {}, {}
        for name, entry in (data['concepts'] or {}).items():
            if isinstance(entry, Mapping):
                members = entry.get('members', entry.get('features'))
                if entry.get('synonyms'):
                    synonyms[name] = list(entry['synonyms'])
                if entry.get('parent'):
                    parents[name] = entry['parent']
            else:
                members = entry
            if not members:
                raise VocabularyError('concept <%s> has no members' % name)
            concepts[name] = [resolve(m) for m in members]

        feature_synonyms = {resolve(k): list(v) for k, v in (data.get('feature_synonyms') or {}).items()}
        n_inputs = None if feature_names is None else len(feature_names)
        return cls(concepts, synonyms=synonyms, parents=parents, feature_synonyms=feature_synonyms, n_inputs=n_inputs)

    @classmethod
    def from_yaml(cls, path: Union[str, Path], feature_names: Sequence[str] = None) -> 'ConceptVocabulary':
        if not Path(path).exists():
            raise VocabularyError('vocabulary file %s does not exist' % path)
        return cls.from_dict(load_yaml(path), feature_names)

    def __repr__(self):
        return '<%s> %d concepts: %s' % (self.__class__.__name__, len(self), list(self._concepts))
