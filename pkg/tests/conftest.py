import _checklist


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # one visible line per acceptance criterion, after capture is done
    if _checklist.results:
        terminalreporter.section("acceptance checklist")
        for name, ok in _checklist.results:
            terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}")
