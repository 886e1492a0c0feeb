#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

from .analytic import *
from .extern import *
from .knn import *
from .persist import *
from .sequential import *
from .training import *
