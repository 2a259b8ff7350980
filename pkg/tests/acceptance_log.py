"""Collects one verdict per acceptance criterion across the acceptance tests."""

LINES = {}


def record(criterion, ok, detail):
    LINES[criterion] = (bool(ok), detail)


def report():
    return [f"[{'PASS' if ok else 'FAIL'}] criterion {c}: {detail}"
            for c, (ok, detail) in sorted(LINES.items())]
