import pytest

from seqcorr import _purepy

try:
    from seqcorr import _kernels
except ImportError:  # extension not built
    _kernels = None

BACKENDS = [_purepy] + ([_kernels] if _kernels is not None else [])


@pytest.fixture(params=BACKENDS, ids=lambda m: m.NAME)
def kernels(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS):
            terminalreporter.write_line(line)
