"""python3 -m degreelab"""

import sys

from .cli import main

sys.exit(main())
