_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        _ACCEPTANCE[report.nodeid] = report


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, report in sorted(_ACCEPTANCE.items()):
        name = nodeid.split("::")[-1]
        detail = "; ".join(f"{k}={v}" for k, v in report.user_properties)
        terminalreporter.write_line(f"{report.outcome.upper():6} {name}  {detail}")
