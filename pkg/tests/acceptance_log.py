"""Collects one summary line per acceptance criterion."""

import time
from contextlib import contextmanager

RESULTS: list[str] = []


@contextmanager
def criterion(number: int, title: str, limit_s: float):
    """Time the block; record PASS only if it neither fails nor exceeds ``limit_s``."""
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        line = f"criterion {number:>2}: FAIL  {title} ({elapsed:.3f} s): {type(exc).__name__}: {exc}"
        RESULTS.append(line)
        print(line)
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < limit_s
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title} ({elapsed:.3f} s, limit {limit_s} s)"
    RESULTS.append(line)
    print(line)
    assert ok, f"criterion {number} exceeded its time limit: {elapsed:.3f} s >= {limit_s} s"
