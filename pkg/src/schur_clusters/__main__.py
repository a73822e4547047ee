"""Allow ``python -m schur_clusters``."""

import sys

from .cli import main

sys.exit(main())
