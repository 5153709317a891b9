"""Run only the acceptance criteria and show their PASS/FAIL lines.

    python scripts/run_acceptance.py            # default Hypothesis profile
    python scripts/run_acceptance.py -x -q      # extra pytest flags pass through
"""

import sys
from pathlib import Path

import pytest

if __name__ == "__main__":
    here = Path(__file__).resolve().parent.parent
    sys.exit(pytest.main([str(here / "tests" / "test_acceptance.py"), *sys.argv[1:]]))
