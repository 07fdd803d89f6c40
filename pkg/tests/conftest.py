import contextlib
from pathlib import Path

import pytest

from csfa_holonomy import Automaton, parse_automaton

DATA = Path(__file__).parent / "data"

_acceptance = []


def four_state():
    return parse_automaton((DATA / "four_state.aut").read_text())


def make(rows, initial=0, finals=(0,), alphabet=None):
    n = len(rows[0])
    if alphabet is None:
        alphabet = "abcdefgh"[: len(rows)]
    return Automaton(n, tuple(alphabet), tuple(tuple(r) for r in rows), initial, set(finals))


def cycle_rows(n):
    return [i + 1 if i + 1 < n else 0 for i in range(n)]


@pytest.fixture
def four():
    return four_state()


@contextlib.contextmanager
def criterion(number, title):
    """Record one acceptance criterion's outcome for the terminal summary."""
    try:
        yield
    except BaseException as exc:
        _acceptance.append((number, title, "FAIL", f"{type(exc).__name__}: {exc}"))
        raise
    _acceptance.append((number, title, "PASS", ""))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, info in sorted(_acceptance):
        line = f"[{status}] criterion {number:>2}: {title}"
        if info:
            line += f" -- {info.splitlines()[0][:160]}"
        terminalreporter.write_line(line)
