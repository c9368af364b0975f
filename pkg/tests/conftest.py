import time
from contextlib import contextmanager

import pytest

_RESULTS = []


@contextmanager
def _criterion(number, title, time_limit):
    start = time.perf_counter()
    ok = False
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        ok = elapsed < time_limit
        detail = f"{elapsed:.2f}s (limit {time_limit:g}s)"
        assert ok, f"criterion {number} took {elapsed:.2f}s, limit {time_limit}s"
    except BaseException as exc:
        if not detail:
            detail = f"{type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
        raise
    finally:
        _RESULTS.append((number, title, ok, detail))


@pytest.fixture
def criterion():
    return _criterion


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(_RESULTS):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {number}. {title}  [{detail}]")
