import sys

from hypothesis import settings

# derandomized so a run is reproducible; the heavy properties set their own limits
settings.register_profile("repo", derandomize=True, deadline=None, max_examples=100)
settings.load_profile("repo")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
