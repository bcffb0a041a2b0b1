from itertools import combinations_with_replacement

import pytest

from schubcon.partitions import Box

# criterion number -> (title, passed, detail); filled in by test_acceptance
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def small_boxes(max_cells: int = 12) -> list[Box]:
    """Every box with w >= 1 and at most ``max_cells`` cells."""
    return [Box(d, w) for d in range(max_cells) for w in range(1, max_cells + 1) if (d + 1) * w <= max_cells]


def sorted_words(max_len: int, top: int, min_value: int = 0):
    """Non-increasing integer lists of length <= max_len with entries in [min_value, top]."""
    for k in range(max_len + 1):
        for combo in combinations_with_replacement(range(top, min_value - 1, -1), k):
            yield list(combo)


@pytest.fixture(scope="session")
def boxes():
    return small_boxes()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}")
