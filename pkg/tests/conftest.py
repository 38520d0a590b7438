import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from autotrans.lseries import make_params  # noqa: E402

# exact arithmetic in pure Python is slow but deterministic; timing limits live in the acceptance tests
settings.register_profile("default", deadline=None)
settings.load_profile("default")


@pytest.fixture
def p3():
    return make_params(3, 2, 0)


@pytest.fixture(params=[0, 1, 2], ids=lambda a: f"a={a}")
def p3_each_a(request):
    return make_params(3, 2, request.param)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
