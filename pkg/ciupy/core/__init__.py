#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

from .base import *
from .descriptor import *
from .problem import *
from .vocabulary import *
