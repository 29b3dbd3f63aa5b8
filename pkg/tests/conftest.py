def pytest_terminal_summary(terminalreporter):
    """Repeat the acceptance lines after the run; per-test output is captured."""
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "LINES", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
    results = mod.RESULTS
    terminalreporter.write_line(f"acceptance: {sum(results.values())}/{len(results)} criteria passed")
