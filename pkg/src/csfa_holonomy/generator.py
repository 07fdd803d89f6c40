"""Seeded random circular semi-flower automata.

The circular letter ``a`` is always ``i -> i+1 mod n`` so state ``i`` is
``q_i`` in the cyclic ordering.  With one branch point every extra letter
is forced to be the constant map to ``q_0``, so that case is built directly.
Otherwise extra letters are drawn uniformly, then patched so that
``q_(n-1)`` goes to ``q_0`` (every CSFA with a branch point has this), and
the candidate is kept only if it is an SFA with exactly the requested
number of branch points.
"""

from __future__ import annotations

import string
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .automaton import Automaton, validate
from .errors import InputError, ResourceLimitError

MASK64 = (1 << 64) - 1
EXTRA_LETTER_NAMES = string.ascii_lowercase[1:]


class SplitMix64:
    """Steele, Lea and Flood's splitmix64: a 64-bit counter passed through
    a bijective mixer.  Fully specified here so streams never depend on the
    platform RNG."""

    def __init__(self, seed):
        self.state = seed & MASK64

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n):
        """Integer in ``[0, n)`` by multiply-shift (bias below n / 2**64)."""
        return (self.next() * n) >> 64


@dataclass(frozen=True)
class GenSpec:
    n: int
    bpi_count: int
    extra_letters: Optional[int] = None
    seed: int = 0
    max_attempts: int = 10000

    def __post_init__(self):
        if self.extra_letters is None:
            object.__setattr__(self, "extra_letters", 0 if self.bpi_count == 0 else 1)
        if not 2 <= self.n <= 64:
            raise InputError(f"n must be in 2..64, got {self.n}")
        if not 0 <= self.bpi_count <= self.n - 1:
            raise InputError(f"bpi_count must be in 0..{self.n - 1}, got {self.bpi_count}")
        if self.bpi_count == 0 and self.extra_letters != 0:
            raise InputError("an SFA without branch points has a single letter")
        if self.bpi_count >= 1 and self.extra_letters < 1:
            raise InputError("branch points need at least one extra letter")
        if self.extra_letters > len(EXTRA_LETTER_NAMES):
            raise InputError(f"at most {len(EXTRA_LETTER_NAMES)} extra letters")
        if not 0 <= self.seed <= MASK64:
            raise InputError("seed must fit in 64 bits")
        if self.max_attempts < 1:
            raise InputError("max_attempts must be positive")


class GenerationError(ResourceLimitError):
    def __init__(self, message, histogram):
        self.histogram = dict(histogram)
        detail = ", ".join(f"{k}: {v}" for k, v in sorted(self.histogram.items()))
        super().__init__(f"{message} (rejections: {detail})")


def cycle_automaton(n):
    """The single-letter ``n``-cycle with initial-final state 0."""
    return Automaton(n, ("a",), (tuple((i + 1) % n for i in range(n)),), 0, {0})


def generate_csfa(spec):
    n = spec.n
    if spec.bpi_count == 0:
        return cycle_automaton(n)
    alphabet = ("a",) + tuple(EXTRA_LETTER_NAMES[: spec.extra_letters])
    cycle = tuple((i + 1) % n for i in range(n))
    if spec.bpi_count == 1:
        # a uniform row is constant with probability n**-(n-1); don't sample
        aut = Automaton(n, alphabet, (cycle,) + ((0,) * n,) * spec.extra_letters, 0, {0})
        report = validate(aut)
        assert report.is_sfa and report.bpis == {0}
        return aut
    rng = SplitMix64(spec.seed)
    rejections = Counter()
    for _ in range(spec.max_attempts):
        rows = [cycle]
        for _ in range(spec.extra_letters):
            row = [rng.below(n) for _ in range(n)]
            row[n - 1] = 0
            rows.append(tuple(row))
        deg = indegrees_of(rows, n)
        count = sum(1 for d in deg if d >= 2)
        if count != spec.bpi_count:
            rejections[f"bpis={count}"] += 1
            continue
        aut = Automaton(n, alphabet, tuple(rows), 0, {0})
        if not validate(aut).is_sfa:
            rejections["not-sfa"] += 1
            continue
        return aut
    raise GenerationError(
        f"no CSFA with n={n}, {spec.bpi_count} branch points after "
        f"{spec.max_attempts} attempts", rejections)


def indegrees_of(rows, n):
    deg = [0] * n
    for row in rows:
        for q in row:
            deg[q] += 1
    return deg
