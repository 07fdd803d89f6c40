"""Complete deterministic automata: file format, digraph checks, DOT export.

States are the integers ``0..n-1``.  Each letter carries an image row, so
``delta[i][p]`` is the state reached from ``p`` on ``alphabet[i]``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .bits import MAX_STATES
from .errors import InputError, ParseError

HEADER_KEYS = ("states", "alphabet", "initial", "finals")
_BAD_NAME = re.compile(r"[\s:#]")


@dataclass(frozen=True)
class Automaton:
    n: int
    alphabet: tuple
    delta: tuple
    initial: int
    finals: frozenset

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        object.__setattr__(self, "finals", frozenset(self.finals))
        n = self.n
        if not isinstance(n, int) or n < 1:
            raise InputError(f"state count must be a positive integer, got {n!r}")
        if n > MAX_STATES:
            raise InputError(f"at most {MAX_STATES} states are supported, got {n}")
        if not self.alphabet:
            raise InputError("alphabet is empty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InputError("duplicate letter in alphabet")
        for name in self.alphabet:
            if not isinstance(name, str) or not name or _BAD_NAME.search(name):
                raise InputError(f"invalid letter name {name!r}")
            if name in HEADER_KEYS:
                raise InputError(f"letter name {name!r} clashes with a header keyword")
        if len(self.delta) != len(self.alphabet):
            raise InputError("need exactly one image row per letter")
        for name, row in zip(self.alphabet, self.delta):
            if len(row) != n:
                raise InputError(f"row for {name!r} has {len(row)} entries, expected {n}")
            for q in row:
                if not 0 <= q < n:
                    raise InputError(f"state {q} out of range")
        if not 0 <= self.initial < n:
            raise InputError(f"initial state {self.initial} out of range")
        for q in self.finals:
            if not 0 <= q < n:
                raise InputError(f"final state {q} out of range")

    @property
    def states(self):
        return range(self.n)

    def row(self, letter):
        try:
            return self.delta[self.alphabet.index(letter)]
        except ValueError:
            raise InputError(f"unknown letter {letter!r}") from None

    def step(self, p, letter):
        return self.row(letter)[p]

    def run(self, p, word):
        for letter in word:
            p = self.row(letter)[p]
        return p

    def edges(self):
        """All transitions ``(p, letter, q)``, states ascending then alphabet order."""
        return [
            (p, name, row[p])
            for p in range(self.n)
            for name, row in zip(self.alphabet, self.delta)
        ]


def parse_automaton(text):
    """Parse the line-oriented automaton format.

    ::

        states: 4
        alphabet: a b
        initial: 0
        finals: 0
        a: 1 2 3 0
        b: 0 2 0 0
    """
    header = {}
    rows = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(f"expected '<key>: <values>', got {line!r}", lineno)
        key, _, rest = line.partition(":")
        key = key.strip()
        values = rest.split()
        if not key or _BAD_NAME.search(key):
            raise ParseError(f"invalid key {key!r}", lineno)
        if key in HEADER_KEYS:
            if key in header:
                raise ParseError(f"duplicate header field {key!r}", lineno)
            header[key] = (values, lineno)
        else:
            if key in rows:
                raise ParseError(f"duplicate row for letter {key!r}", lineno)
            rows[key] = (values, lineno)

    for key in HEADER_KEYS:
        if key not in header:
            raise ParseError(f"missing header field {key!r}")

    values, lineno = header["states"]
    if len(values) != 1:
        raise ParseError("'states' takes exactly one value", lineno)
    n = _int(values[0], lineno)
    if n < 1:
        raise ParseError("state count must be at least 1", lineno)
    if n > MAX_STATES:
        raise ParseError(f"at most {MAX_STATES} states are supported", lineno)

    alphabet, lineno = header["alphabet"]
    if not alphabet:
        raise ParseError("alphabet is empty", lineno)
    seen = set()
    for name in alphabet:
        if name in seen:
            raise ParseError(f"duplicate letter {name!r}", lineno)
        if name in HEADER_KEYS:
            raise ParseError(f"letter name {name!r} clashes with a header keyword", lineno)
        seen.add(name)

    values, lineno = header["initial"]
    if len(values) != 1:
        raise ParseError("'initial' takes exactly one state", lineno)
    initial = _state(values[0], n, lineno)

    values, lineno = header["finals"]
    if not values:
        raise ParseError("'finals' needs at least one state", lineno)
    finals = frozenset(_state(v, n, lineno) for v in values)

    delta = []
    for name in alphabet:
        if name not in rows:
            raise ParseError(f"missing row for letter {name!r}")
        values, lineno = rows.pop(name)
        if len(values) != n:
            raise ParseError(
                f"row for {name!r} has {len(values)} entries, expected {n}", lineno)
        delta.append(tuple(_state(v, n, lineno) for v in values))
    if rows:
        name, (_, lineno) = min(rows.items(), key=lambda kv: kv[1][1])
        raise ParseError(f"row for letter {name!r} not in alphabet", lineno)

    return Automaton(n, tuple(alphabet), tuple(delta), initial, finals)


def _int(token, lineno):
    try:
        return int(token, 10)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def _state(token, n, lineno):
    q = _int(token, lineno)
    if not 0 <= q < n:
        raise ParseError(f"state {q} out of range", lineno)
    return q


def serialize_automaton(aut):
    """Canonical text form; ``parse_automaton`` inverts it exactly."""
    lines = [
        f"states: {aut.n}",
        "alphabet: " + " ".join(aut.alphabet),
        f"initial: {aut.initial}",
        "finals: " + " ".join(str(q) for q in sorted(aut.finals)),
    ]
    for name, row in zip(aut.alphabet, aut.delta):
        lines.append(f"{name}: " + " ".join(str(q) for q in row))
    return "\n".join(lines) + "\n"


# -- digraph analysis ---------------------------------------------------------

@dataclass(frozen=True)
class Cycle:
    """A cycle ``states[0] -word[0]-> states[1] ... -> states[-1] == states[0]``."""
    states: tuple
    word: tuple


@dataclass(frozen=True)
class ValidationReport:
    accessible: frozenset
    coaccessible: frozenset
    trim: bool
    is_sfa: bool
    sfa_violation: Optional[Cycle]
    bpis: frozenset
    indegree: tuple
    reasons: tuple = ()


def indegrees(aut):
    deg = [0] * aut.n
    for row in aut.delta:
        for q in row:
            deg[q] += 1
    return tuple(deg)


def bpis(aut):
    """States entered by at least two transitions (branch points going in)."""
    return frozenset(q for q, d in enumerate(indegrees(aut)) if d >= 2)


def _reach(starts, succ):
    seen = set(starts)
    queue = deque(starts)
    while queue:
        p = queue.popleft()
        for q in succ[p]:
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return frozenset(seen)


def find_cycle_avoiding(aut, avoid):
    """First cycle not visiting ``avoid``, or None.

    Three-colour DFS over states ascending, edges in alphabet order; the
    witness is closed by the first back edge met.
    """
    WHITE, GRAY, BLACK = 0, 1, 2
    color = [WHITE] * aut.n
    color[avoid] = BLACK
    for root in range(aut.n):
        if color[root] != WHITE:
            continue
        color[root] = GRAY
        path = [root]
        labels = []
        stack = [0]
        while stack:
            p = path[-1]
            i = stack[-1]
            if i == len(aut.alphabet):
                color[p] = BLACK
                stack.pop()
                path.pop()
                if labels:
                    labels.pop()
                continue
            stack[-1] += 1
            q = aut.delta[i][p]
            if color[q] == GRAY:
                start = path.index(q)
                states = tuple(path[start:]) + (q,)
                word = tuple(labels[start:]) + (aut.alphabet[i],)
                return Cycle(states, word)
            if color[q] == WHITE:
                color[q] = GRAY
                path.append(q)
                labels.append(aut.alphabet[i])
                stack.append(0)
    return None


def validate(aut):
    n = aut.n
    succ = [set() for _ in range(n)]
    pred = [set() for _ in range(n)]
    for row in aut.delta:
        for p, q in enumerate(row):
            succ[p].add(q)
            pred[q].add(p)
    acc = _reach([aut.initial], succ)
    coacc = _reach(sorted(aut.finals), pred)
    everything = frozenset(range(n))
    trim = acc == everything and coacc == everything
    violation = find_cycle_avoiding(aut, aut.initial)

    reasons = []
    if not trim:
        reasons.append("not trim")
    if aut.finals != {aut.initial}:
        reasons.append("final states are not exactly {initial}")
    if violation is not None:
        reasons.append("a cycle avoids the initial state")
    deg = indegrees(aut)
    return ValidationReport(
        accessible=acc,
        coaccessible=coacc,
        trim=trim,
        is_sfa=not reasons,
        sfa_violation=violation,
        bpis=frozenset(q for q, d in enumerate(deg) if d >= 2),
        indegree=deg,
        reasons=tuple(reasons),
    )


def export_automaton_dot(aut):
    lines = [
        "digraph automaton {",
        "  rankdir=LR;",
        '  __start [shape=none, label="", width=0, height=0];',
    ]
    for p in range(aut.n):
        shape = "doublecircle" if p in aut.finals else "circle"
        lines.append(f"  {p} [shape={shape}];")
    lines.append(f"  __start -> {aut.initial};")
    for p, name, q in aut.edges():
        lines.append(f'  {p} -> {q} [label="{name}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
