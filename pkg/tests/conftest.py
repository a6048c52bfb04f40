import pytest

_results = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(number, title): acceptance criterion checked by this test"
    )


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            item.user_properties.append(("criterion", m.args))


def pytest_runtest_logreport(report):
    for key, value in report.user_properties:
        if key != "criterion":
            continue
        num, title = value
        prev = _results.get(num, (title, True))
        ok = prev[1] and not report.failed
        if report.when == "call" or report.failed:
            _results[num] = (title, ok)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        title, ok = _results[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture
def corpus_file(tmp_path):
    def make(text, name="text.txt"):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return p

    return make
