"""Run the command line via ``python -m moycalc``."""

from __future__ import annotations

import sys

from .cli import main

sys.exit(main())
