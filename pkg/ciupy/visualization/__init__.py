#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

from .barplot import *
from .color import *
from .curve import *
from .structured import *
from .svg import *
from .text import *
