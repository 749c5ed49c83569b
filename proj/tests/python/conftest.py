import os
import sys

import pytest

_pythonpath = os.environ.get("PTOSC_PYTHONPATH")
if _pythonpath and _pythonpath not in sys.path:
    sys.path.insert(0, _pythonpath)


@pytest.fixture(scope="session")
def cli_path():
    path = os.environ.get("PTOSC_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("PTOSC_CLI not set; run through ctest")
    return path
