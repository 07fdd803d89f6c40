"""Transition monoids of complete deterministic automata.

Maps act on the right and compose left to right: ``compose(f, g)`` applies
``f`` first, so ``p . compose(f, g) == g[f[p]]`` and the transformation of a
word ``xy`` is ``compose(x, y)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .automaton import validate
from .errors import NotAnSFAError, PreconditionError, ResourceLimitError

DEFAULT_MONOID_CAP = 10**6


def format_word(word):
    """Render a letter sequence; single-character alphabets concatenate."""
    if not word:
        return "ε"
    if all(len(letter) == 1 for letter in word):
        return "".join(word)
    return ".".join(word)


@dataclass(frozen=True, eq=False)
class Transformation:
    images: tuple
    witness: tuple = field(default=())

    def __eq__(self, other):
        if not isinstance(other, Transformation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __len__(self):
        return len(self.images)

    def __repr__(self):
        return f"Transformation({list(self.images)}, {format_word(self.witness)!r})"

    @property
    def n(self):
        return len(self.images)

    @property
    def rank(self):
        return len(set(self.images))

    @property
    def is_permutation(self):
        return self.rank == len(self.images)

    def image_set(self):
        return frozenset(self.images)

    def then(self, other):
        """``self`` followed by ``other``; witnesses concatenate."""
        return Transformation(compose(self.images, other.images),
                              self.witness + other.witness)


def compose(f, g):
    return tuple(g[x] for x in f)


def identity(n):
    return tuple(range(n))


def transformation_of_word(aut, word):
    images = list(range(aut.n))
    for letter in word:
        row = aut.row(letter)
        images = [row[x] for x in images]
    return Transformation(tuple(images), tuple(word))


@dataclass(frozen=True)
class Monoid:
    """Elements in BFS discovery order; ``elements[0]`` is the identity."""
    n: int
    alphabet: tuple
    elements: tuple
    generator_index: dict
    index: dict = field(repr=False)

    @property
    def size(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, f):
        images = f.images if isinstance(f, Transformation) else tuple(f)
        return images in self.index

    def lookup(self, images):
        return self.elements[self.index[tuple(images)]]

    def generator(self, letter):
        return self.elements[self.generator_index[letter]]

    def permutations(self):
        return [f for f in self.elements if f.is_permutation]


def enumerate_monoid(aut, cap=DEFAULT_MONOID_CAP):
    """Breadth-first closure of the letter maps under right composition.

    Frontier elements are extended by each letter in alphabet order, so the
    first word reaching an element is the shortest one and, among those, the
    least in the alphabet order.
    """
    ident = identity(aut.n)
    elements = [Transformation(ident, ())]
    index = {ident: 0}
    queue = deque([0])
    rows = list(zip(aut.alphabet, aut.delta))
    while queue:
        f = elements[queue.popleft()]
        for name, row in rows:
            images = tuple(row[x] for x in f.images)
            if images in index:
                continue
            if len(elements) >= cap:
                raise ResourceLimitError(
                    f"transition monoid exceeds the cap of {cap} elements")
            index[images] = len(elements)
            elements.append(Transformation(images, f.witness + (name,)))
            queue.append(index[images])
    gens = {name: index[tuple(row)] for name, row in rows}
    return Monoid(aut.n, aut.alphabet, tuple(elements), gens, index)


def cycle_type(images):
    """Sorted cycle lengths of a permutation given as an image tuple."""
    n = len(images)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        p = start
        while not seen[p]:
            seen[p] = True
            p = images[p]
            length += 1
        lengths.append(length)
    return sorted(lengths)


def is_circular_permutation(f):
    images = f.images if isinstance(f, Transformation) else tuple(f)
    if len(set(images)) != len(images):
        return False
    return cycle_type(images) == [len(images)]


def circular_letters(aut):
    return frozenset(name for name, row in zip(aut.alphabet, aut.delta)
                     if is_circular_permutation(row))


def cyclic_ordering(aut, letter, start=None):
    """States ``q0, q1, ...`` visited by iterating ``letter`` from ``start``."""
    row = aut.row(letter)
    p = aut.initial if start is None else start
    order = [p]
    for _ in range(aut.n - 1):
        p = row[p]
        order.append(p)
    return tuple(order)


@dataclass(frozen=True)
class UniqueCircularReport:
    permutation_letters: tuple
    all_circular: bool
    all_equal: bool
    violation: Optional[str] = None

    @property
    def holds(self):
        return self.violation is None


def check_unique_circular(aut):
    """Permutation letters of an SFA are circular and pairwise identical."""
    report = validate(aut)
    if not report.is_sfa:
        raise NotAnSFAError("not a semi-flower automaton: " + "; ".join(report.reasons))
    perm_letters = tuple(name for name, row in zip(aut.alphabet, aut.delta)
                         if len(set(row)) == aut.n)
    rows = {aut.row(name) for name in perm_letters}
    non_circular = [name for name in perm_letters
                    if not is_circular_permutation(aut.row(name))]
    violation = None
    if non_circular:
        violation = f"permutation letter {non_circular[0]!r} is not circular"
    elif len(rows) > 1:
        violation = "permutation letters induce different maps"
    return UniqueCircularReport(perm_letters, not non_circular, len(rows) <= 1, violation)


def is_cyclic_group(elems):
    """Return ``(order, generator)`` if the permutations in ``elems`` form a
    cyclic group, else None.  The generator is the least image tuple whose
    powers exhaust the set.
    """
    items = {}
    for f in elems:
        images = f.images if isinstance(f, Transformation) else tuple(f)
        items.setdefault(images, f)
    if not items:
        raise PreconditionError("empty set of transformations")
    n = len(next(iter(items)))
    for images in items:
        if len(images) != n or len(set(images)) != n:
            raise PreconditionError("not all elements are permutations of one set")
    for f in items:
        for g in items:
            if compose(f, g) not in items:
                raise PreconditionError("set is not closed under composition")
    for images in sorted(items):
        power = images
        order = 1
        while power != identity(n):
            power = compose(power, images)
            order += 1
        if order == len(items):
            return order, items[images]
    return None


def element_order(images):
    n = len(images)
    power = tuple(images)
    order = 1
    while power != identity(n):
        power = compose(power, images)
        order += 1
    return order
