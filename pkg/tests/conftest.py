import pytest

_ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when != "call" or not item.fspath.basename == "test_acceptance.py":
        return
    label = (item.function.__doc__ or item.name).strip().splitlines()[0]
    detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
    _ACCEPTANCE.append((label, rep.passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        line = f"{'PASS' if ok else 'FAIL'}  {label}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
