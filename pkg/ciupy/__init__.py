#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

# change version in conf.yml only, setup.py reads it from there

from ._conf import *
from .core import *
from .explain import *
