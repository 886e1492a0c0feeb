#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

import pytest

from ciupy.core import ConceptVocabulary, IndexSet, VocabularyError
from ciupy.utils import dump_yaml

FEATURES = ['Sepal Length', 'Sepal Width', 'Petal Length', 'Petal Width']


@pytest.fixture(scope='module')
def data():
    doc = {
        'concepts': {
            'Sepal size and shape': {
                'members': ['Sepal Length', 'Sepal Width']
            },
            'Petal size and shape': {
                'members': ['Petal Length', 'Petal Width'],
                'synonyms': ['petals']
            },
            'Petal length only': {
                'members': [2],
                'parent': 'Petal size and shape'
            },
        },
        'feature_synonyms': {
            'Petal Width': ['width of the petals']
        },
    }
    yield doc
    print('test over')


def test_vocabulary_1(data):
    vocab = ConceptVocabulary.from_dict(data, FEATURES)
    assert len(vocab) == 3
    assert vocab['Sepal size and shape'] == IndexSet.of([0, 1])
    assert vocab.index_set('Petal size and shape').to_list() == [2, 3]
    assert vocab.display_name('Petal size and shape') == 'petals'
    assert vocab.display_name('Sepal size and shape') == 'Sepal size and shape'
    assert vocab.feature_name(3, 'Petal Width') == 'width of the petals'
    assert vocab.feature_name(0, 'Sepal Length') == 'Sepal Length'
    assert vocab.children(None) == ['Sepal size and shape', 'Petal size and shape']
    assert vocab.children('Petal size and shape') == ['Petal length only']
    assert vocab.parents == {'Petal length only': 'Petal size and shape'}

    tree = vocab.tree(FEATURES)
    assert '- Petal size and shape: [Petal Length, Petal Width] (aka petals)' in tree
    assert '  - Petal length only: [Petal Length]' in tree


def test_vocabulary_2(data):
    vocab = ConceptVocabulary.from_dict(data, FEATURES)
    again = ConceptVocabulary.from_dict(vocab.to_dict(FEATURES))
    assert again.concepts == vocab.concepts
    assert again.synonyms == vocab.synonyms
    assert again.parents == vocab.parents


def test_vocabulary_yaml(data, tmp_path):
    path = tmp_path / 'iris-vocab.yml'
    dump_yaml(dict(data, features=FEATURES), path)
    vocab = ConceptVocabulary.from_yaml(path)
    assert vocab['Petal size and shape'].to_list() == [2, 3]
    with pytest.raises(VocabularyError, match='does not exist'):
        ConceptVocabulary.from_yaml(tmp_path / 'missing.yml')


def test_vocabulary_errors():
    with pytest.raises(VocabularyError, match='index \\[9\\]'):
        ConceptVocabulary({'bad': [0, 9]}, n_inputs=4)
    with pytest.raises(VocabularyError, match='reserved'):
        ConceptVocabulary({'ALL': [0, 1]})
    with pytest.raises(VocabularyError, match='unknown concept'):
        ConceptVocabulary({'a': [0]}, synonyms={'b': ['bee']})
    with pytest.raises(VocabularyError, match='not a subset'):
        ConceptVocabulary({'a': [0, 1], 'b': [2]}, parents={'b': 'a'})
    with pytest.raises(VocabularyError, match='cyclic'):
        ConceptVocabulary({'a': [0], 'b': [0]}, parents={'a': 'b', 'b': 'a'})
    with pytest.raises(VocabularyError, match='unknown feature'):
        ConceptVocabulary.from_dict({'concepts': {'a': ['Petal Area']}}, FEATURES)
    with pytest.raises(VocabularyError, match='no members'):
        ConceptVocabulary.from_dict({'concepts': {'a': []}}, FEATURES)
    with pytest.raises(VocabularyError, match='unknown concept'):
        ConceptVocabulary({'a': [0]}).index_set('b')


if __name__ == "__main__":
    pytest.main()
