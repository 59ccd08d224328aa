import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion, aggregating its tests."""
    results: dict[int, list[tuple[str, bool]]] = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            match = _CRITERION.search(getattr(rep, "nodeid", ""))
            if match and (rep.when == "call" or key == "error"):
                results.setdefault(int(match.group(1)), []).append((rep.nodeid.split("::")[-1], key == "passed"))
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        tests = results[number]
        failed = [name for name, ok in tests if not ok]
        status = "FAIL" if failed else "PASS"
        detail = f" (failing: {', '.join(failed)})" if failed else ""
        terminalreporter.write_line(f"criterion {number}: {status} [{len(tests)} test(s)]{detail}")
