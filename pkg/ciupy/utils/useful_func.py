#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

from contextlib import contextmanager
from os import getenv
from pathlib import Path
from typing import Any, Union

from ruamel.yaml import YAML

from ciupy._conf import packaged_config

__all__ = ['set_env', 'config', 'load_yaml', 'dump_yaml']

CONFIG_ENV = 'CIUPY_CONFIG'


def _yaml() -> YAML:
    yaml = YAML(typ='safe')
    yaml.indent(mapping=2, sequence=4, offset=2)
    yaml.default_flow_style = False
    return yaml


def load_yaml(path: Union[str, Path]) -> Any:
    """Read a YAML document from ``path``."""
    with open(str(path), 'r') as f:
        return _yaml().load(f)


def dump_yaml(obj: Any, path: Union[str, Path]) -> None:
    """Write ``obj`` to ``path`` as a YAML document."""
    with open(str(path), 'w') as f:
        _yaml().dump(obj, f)


@contextmanager
def set_env(**kwargs):
    """
    Set temp environment variable with ``with`` statement.

    Examples
    --------
    >>> import os
    >>> with set_env(CIUPY_CONFIG='my_conf.yml'):
    >>>    print(os.getenv('CIUPY_CONFIG'))
    my_conf.yml

    Parameters
    ----------
    kwargs: dict[str]
        Dict with string value.
    """
    import os

    tmp = dict()
    for k, v in kwargs.items():
        tmp[k] = os.getenv(k)
        os.environ[k] = v
    try:
        yield
    finally:
        for k, v in tmp.items():
            if v is None:
                del os.environ[k]
            else:
                os.environ[k] = v


def config(key: str = None, *, path: Union[str, Path, None] = None) -> Any:
    """
    Return config value with key or all config.

    Values in a user file override the packaged defaults. The user file is
    ``path`` when given, otherwise the file named by the ``CIUPY_CONFIG``
    environment variable, if any.

    Parameters
    ----------
    key: str
        Keys of config item. ``None`` returns the whole merged mapping.
    path
        Optional user config file.

    Returns
    -------
    Any
        The value corresponding to the key.
    """
    conf = packaged_config()

    if path is None:
        path = getenv(CONFIG_ENV)
    if path:
        user = load_yaml(path)
        if user:
            if not isinstance(user, dict):
                raise RuntimeError('config file %s must contain a mapping' % path)
            conf.update(user)

    if key is None:
        return conf
    if key not in conf:
        raise RuntimeError('No item(s) named %s in configurations' % key)
    return conf[key]

