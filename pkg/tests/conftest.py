import pytest

from addrseq import GenerationMatrix

from _tables import WORKED_ROWS


@pytest.fixture
def worked_matrix() -> GenerationMatrix:
    """The 4-bit matrix used throughout the worked examples."""
    return GenerationMatrix(WORKED_ROWS)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion that ran."""
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
