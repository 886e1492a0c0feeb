#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

from pathlib import Path
from types import MappingProxyType
from typing import Mapping

from ruamel.yaml import YAML

__all__ = [
    '__pkg_name__',
    '__version__',
    '__release__',
    '__short_description__',
    '__license__',
    '__author__',
    '__conf_file__',
    'packaged_config',
]

__conf_file__ = str(Path(__file__).parent / 'conf.yml')


def _read_packaged() -> Mapping:
    with open(__conf_file__, 'r') as f:
        conf = YAML(typ='safe').load(f)
    if not isinstance(conf, dict) or 'version' not in conf:
        raise RuntimeError('packaged config %s is broken, reinstall ciupy' % __conf_file__)
    return MappingProxyType(conf)


_PACKAGED = _read_packaged()


def packaged_config() -> dict:
    """
    Copy of the settings shipped in ``conf.yml``: the package info and the run defaults.
    User overrides are applied by :func:`ciupy.utils.config`, not here.
    """
    return dict(_PACKAGED)


__pkg_name__ = _PACKAGED['name']
__version__ = _PACKAGED['version']
__release__ = _PACKAGED.get('release') or ''
__short_description__ = _PACKAGED.get('short_description')
__license__ = _PACKAGED.get('license')
__author__ = _PACKAGED.get('author')
