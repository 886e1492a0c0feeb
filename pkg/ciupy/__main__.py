#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

import sys

from .cli import main

sys.exit(main())
