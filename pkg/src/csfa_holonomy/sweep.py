"""Exhaustive enumeration of small complete deterministic automata."""

import itertools

from .automaton import Automaton

LETTERS = "abcdefgh"


def transition_tables(max_states=3, max_letters=2):
    """Every ``(n, rows)`` with ``1 <= n <= max_states`` and 1..max_letters rows."""
    for n in range(1, max_states + 1):
        all_rows = list(itertools.product(range(n), repeat=n))
        for k in range(1, max_letters + 1):
            for rows in itertools.product(all_rows, repeat=k):
                yield n, rows


def all_automata(max_states=3, max_letters=2):
    """Every complete DFA up to the given size, with every initial state and
    every nonempty set of final states."""
    for n, rows in transition_tables(max_states, max_letters):
        alphabet = tuple(LETTERS[: len(rows)])
        finals_choices = [
            frozenset(c)
            for size in range(1, n + 1)
            for c in itertools.combinations(range(n), size)
        ]
        for initial in range(n):
            for finals in finals_choices:
                yield Automaton(n, alphabet, rows, initial, finals)
