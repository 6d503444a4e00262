import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo the acceptance-criteria verdict lines into the summary so they
    survive output capture."""
    for name, mod in sys.modules.items():
        if name.endswith("test_acceptance") and getattr(mod, "VERDICTS", None):
            terminalreporter.section("acceptance criteria")
            for line in mod.VERDICTS:
                terminalreporter.write_line(line)
            break
