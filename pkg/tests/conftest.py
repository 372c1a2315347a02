import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))


def pytest_collection_modifyitems(config, items):
    if os.environ.get("CAGEKIT_EXTENDED") == "1":
        return
    skip = pytest.mark.skip(reason="long run, set CAGEKIT_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)
