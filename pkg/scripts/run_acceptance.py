#!/usr/bin/env python3
"""Run the acceptance suite and show the per-criterion pass/fail lines.

Extra arguments are forwarded to pytest, so e.g.

    python3 scripts/run_acceptance.py -k "not 02"

skips the long exhaustive criterion during development. Set CACTUSLAB_SOAK
(seconds) to shorten the criterion-5 soak from its 1800 s default.
"""

import os
import subprocess
import sys


def main() -> int:
    here = os.path.dirname(os.path.abspath(__file__))
    target = os.path.join(here, "..", "tests", "test_acceptance.py")
    cmd = [sys.executable, "-m", "pytest", "-v", "-s", target] + sys.argv[1:]
    return subprocess.call(cmd)


if __name__ == "__main__":
    sys.exit(main())
