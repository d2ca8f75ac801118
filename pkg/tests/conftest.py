import os
import sys

import hypothesis
import numpy as np

# Add repository root to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

np.seterr(all="raise")

hypothesis.settings.register_profile("fast", max_examples=25, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile("fast")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: distinct-labelling scans over magic sums 17..23")
