import sys
from pathlib import Path

from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

# at least 100 random cases per property
settings.register_profile("default", max_examples=100, deadline=None)
settings.register_profile("thorough", max_examples=1000, deadline=None)
settings.load_profile("default")


# -- acceptance reporting ----------------------------------------------------------------

_criteria: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number n")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    n, title = mark.args
    passed = call.excinfo is None
    prev = _criteria.get(n)
    ok = passed and (prev is None or prev[1] == "PASS")
    elapsed = call.duration + (prev[2] if prev else 0.0)
    _criteria[n] = (title, "PASS" if ok else "FAIL", elapsed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, verdict, elapsed = _criteria[n]
        terminalreporter.write_line(f"criterion {n:2d}: {verdict}  {title}  ({elapsed:.3f} s)")
