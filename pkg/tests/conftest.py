import contextlib
import time

import pytest

_ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE_KEY] = []


@pytest.fixture
def criterion(request):
    """``with criterion(n, title, seconds):`` times the block, records a
    PASS/FAIL line and re-raises any failure."""
    lines = request.config.stash[_ACCEPTANCE_KEY]

    @contextlib.contextmanager
    def run(number: int, title: str, limit: float):
        start = time.perf_counter()
        ok = False
        detail = ""
        try:
            yield
            elapsed = time.perf_counter() - start
            ok = elapsed < limit
            detail = f"{elapsed:.2f}s (limit {limit:g}s)"
            assert ok, f"criterion {number} took {elapsed:.2f}s, limit {limit:g}s"
        except BaseException as e:
            if not detail:
                detail = f"{type(e).__name__}: {str(e).splitlines()[0] if str(e) else ''}"
            raise
        finally:
            line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title} [{detail}]"
            lines.append(line)
            print(line)

    return run


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
