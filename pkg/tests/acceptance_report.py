"""One pass/fail line per acceptance criterion, collected for the terminal summary."""

import time
from contextlib import contextmanager

LINES = []


@contextmanager
def criterion(number, title, limit=None):
    """Time the body, enforce ``limit`` seconds if given, and record the outcome.

    The body may append a short detail string to the yielded list.
    """
    notes = []
    start = time.perf_counter()
    try:
        yield notes
        elapsed = time.perf_counter() - start
        if limit is not None:
            assert elapsed <= limit, f"took {elapsed:.2f}s, limit {limit}s"
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        _record("FAIL", number, title, elapsed, [f"{type(exc).__name__}: {exc}".splitlines()[0]])
        raise
    _record("PASS", number, title, elapsed, notes)


def _record(status, number, title, elapsed, notes):
    detail = f" ({'; '.join(notes)})" if notes else ""
    line = f"[{status}] criterion {number}: {title} [{elapsed:.2f}s]{detail}"
    LINES.append(line)
    print(line)
