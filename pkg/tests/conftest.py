import sys

import pytest

from ribbonmod.cli import run


@pytest.fixture
def cli(capsys):
    """Run the CLI in-process; returns (exit_code, stdout, stderr)."""

    def invoke(*args):
        code = run([str(a) for a in args])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # one verdict line per acceptance criterion, printed whether it passed
    # or not; populated only when test_acceptance ran
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None) if mod else None
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        name, ok, elapsed, detail = results[num]
        line = f"criterion {num} ({name}): {'PASS' if ok else 'FAIL'} in {elapsed:.2f}s"
        if detail:
            line += f" [{detail}]"
        terminalreporter.write_line(line)
