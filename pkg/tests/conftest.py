"""Collects one verdict per acceptance criterion and prints them at the end."""

from collections import OrderedDict

import pytest

_RESULTS: "OrderedDict[int, dict]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        num, title = mark.args
        entry = _RESULTS.setdefault(num, {"title": title, "ok": True, "notes": []})
        details = [v for k, v in item.user_properties if k == "detail"]
        if hasattr(rep, "wasxfail"):
            entry["ok"] = False
            entry["notes"].append(f"{item.name}: expected failure ({rep.wasxfail})")
        elif rep.outcome != "passed":
            entry["ok"] = False
            entry["notes"].append(f"{item.name}: {rep.outcome}")
        entry["notes"].extend(details)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_RESULTS):
        r = _RESULTS[num]
        tr.write_line(f"criterion {num}: {'PASS' if r['ok'] else 'FAIL'}  {r['title']}")
        for note in r["notes"]:
            tr.write_line(f"    {note}")
