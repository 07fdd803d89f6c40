"""Skeleton space, pavings and holonomy groups of a transition monoid.

Subsets of states are bitmasks (see :mod:`csfa_holonomy.bits`).  Ordering of
subsets is always by integer value, i.e. lexicographic with state 0 least
significant; class representatives and pavings follow it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Optional

from . import bits
from .errors import PreconditionError
from .monoid import format_word, identity, is_cyclic_group


@dataclass(frozen=True)
class Skeleton:
    n: int
    members: tuple          # ascending masks
    orbits: dict            # mask -> frozenset of S.m over the monoid
    classes: tuple          # tuple of ascending mask tuples, ordered (height, rep)
    class_of: dict          # mask -> class index
    heights: tuple          # per class

    @property
    def full(self):
        return bits.full(self.n)

    def class_rep(self, c):
        return self.classes[c][0]

    def leq(self, r, s):
        """R <= S iff R is contained in S.m for some monoid element m."""
        return any(r & ~x == 0 for x in self.orbits[s])

    def equivalent(self, r, s):
        return self.leq(r, s) and self.leq(s, r)

    def height(self, mask):
        return self.heights[self.class_of[mask]]

    def cardinality(self, c):
        return bits.popcount(self.classes[c][0])

    def of_size(self, k):
        """Members of cardinality ``k``."""
        return [m for m in self.members if bits.popcount(m) == k]

    def strictly_below(self, c, d):
        r, s = self.class_rep(c), self.class_rep(d)
        return self.leq(r, s) and not self.leq(s, r)

    def classes_at(self, h):
        return [c for c, hc in enumerate(self.heights) if hc == h]


def skeleton_space(monoid):
    n = monoid.n
    images = [f.images for f in monoid.elements]
    members = {bits.full(n)}
    for f in images:
        members.add(bits.mask_of(f))
    for p in range(n):
        members.add(1 << p)
    members = tuple(sorted(members))

    orbits = {s: frozenset(bits.image(s, f) for f in images) for s in members}

    def leq(r, s):
        return any(r & ~x == 0 for x in orbits[s])

    # every S.m is itself a member, so S ~ R only for R in the orbit of S
    class_of = {}
    raw = []
    for s in members:
        if s in class_of:
            continue
        cls = sorted(r for r in orbits[s] if leq(s, r))
        cls = [r for r in cls if r not in class_of]
        for r in cls:
            class_of[r] = len(raw)
        raw.append(tuple(cls))

    def below(ci, cj):
        r, s = raw[ci][0], raw[cj][0]
        return leq(r, s) and not leq(s, r)

    memo = {}

    def height(ci):
        if ci in memo:
            return memo[ci]
        if bits.popcount(raw[ci][0]) == 1:
            memo[ci] = 0
            return 0
        h = 1 + max((height(cj) for cj in range(len(raw))
                     if cj != ci and below(cj, ci)), default=0)
        memo[ci] = h
        return h

    heights = [height(ci) for ci in range(len(raw))]
    order = sorted(range(len(raw)), key=lambda ci: (heights[ci], raw[ci][0]))
    classes = tuple(raw[ci] for ci in order)
    renumber = {old: new for new, old in enumerate(order)}
    class_of = {m: renumber[ci] for m, ci in class_of.items()}
    return Skeleton(
        n=n,
        members=members,
        orbits=orbits,
        classes=classes,
        class_of=class_of,
        heights=tuple(heights[ci] for ci in order),
    )


def paving(skel, t):
    """Maximal skeleton members properly contained in ``t``, ascending."""
    if t not in skel.class_of:
        raise PreconditionError(f"{bits.fmt(t)} is not in the skeleton")
    if bits.popcount(t) < 2:
        raise PreconditionError("paving needs a set of at least two states")
    inside = [r for r in skel.members if r != t and r & ~t == 0]
    return [r for r in inside
            if not any(s != r and r & ~s == 0 for s in inside)]


def stabilizer(monoid, t):
    """Elements mapping ``t`` onto itself, in monoid order."""
    if not t:
        raise PreconditionError("stabilizer of the empty set")
    return [f for f in monoid.elements if bits.image(t, f.images) == t]


@dataclass(frozen=True)
class HolonomyGroup:
    """Permutation group induced on the paving of one skeleton member."""
    tile: int
    paving: tuple
    permutations: tuple     # action on paving indices, identity first
    witnesses: tuple        # shortest word inducing each permutation
    cyclic_order: Optional[int]
    generator: Optional[int]

    @property
    def degree(self):
        return len(self.paving)

    @property
    def order(self):
        return len(self.permutations)

    @property
    def generator_word(self):
        if self.generator is None:
            return None
        return format_word(self.witnesses[self.generator])


def holonomy_group(skel, monoid, t):
    tiles = tuple(paving(skel, t))
    position = {r: i for i, r in enumerate(tiles)}
    perms = {}
    for f in stabilizer(monoid, t):
        action = []
        for r in tiles:
            q = bits.image(r, f.images)
            if q not in position:
                raise AssertionError(
                    f"{format_word(f.witness)} maps tile {bits.fmt(r)} of "
                    f"{bits.fmt(t)} to {bits.fmt(q)}, outside the paving")
            action.append(position[q])
        if len(set(action)) != len(tiles):
            raise AssertionError(
                f"{format_word(f.witness)} does not permute the paving of {bits.fmt(t)}")
        perms.setdefault(tuple(action), f.witness)
    permutations = tuple(perms)
    cyc = is_cyclic_group(permutations)
    cyclic_order = generator = None
    if cyc is not None:
        cyclic_order = cyc[0]
        generator = permutations.index(tuple(cyc[1]))
    return HolonomyGroup(t, tiles, permutations, tuple(perms.values()),
                         cyclic_order, generator)


@dataclass(frozen=True)
class HolonomyComponent:
    """One level of the cascade: the direct product of the holonomy groups
    of the class representatives at that height, later closed with constants.
    """
    level: int
    class_reps: tuple
    factors: tuple
    closed: bool = True

    @property
    def pavings(self):
        return tuple(g.paving for g in self.factors)

    @property
    def groups(self):
        return tuple(g.permutations for g in self.factors)

    @property
    def degree(self):
        return math.prod(g.degree for g in self.factors)

    @property
    def order(self):
        return math.prod(g.order for g in self.factors)

    @property
    def cyclic_order(self):
        """Order of the product group if it is cyclic, else None."""
        orders = [g.cyclic_order for g in self.factors]
        if any(o is None for o in orders):
            return None
        if reduce(math.lcm, orders, 1) != math.prod(orders):
            return None
        return math.prod(orders)

    @property
    def generator_word(self):
        if len(self.factors) == 1:
            return self.factors[0].generator_word
        return None

    def symbol(self):
        """``(degree, cyclic order or None)``."""
        return self.degree, self.cyclic_order


def components(skel, monoid):
    """Holonomy components for heights ``1 .. height(Q)``, bottom first."""
    full = skel.full
    if skel.n == 1:
        # height 0: report the trivial group on the single point as one level
        trivial = HolonomyGroup(full, (full,), (identity(1),), ((),), 1, 0)
        return [HolonomyComponent(1, (full,), (trivial,))]
    top = skel.height(full)
    out = []
    for level in range(1, top + 1):
        reps = tuple(skel.class_rep(c) for c in skel.classes_at(level))
        factors = tuple(holonomy_group(skel, monoid, t) for t in reps)
        out.append(HolonomyComponent(level, reps, factors))
    return out


def chain_symbols(comps):
    return [c.symbol() for c in comps]


def export_skeleton_dot(skel):
    """Hasse diagram of the class order; edges point from a class down to
    the classes it covers."""
    k = len(skel.classes)
    lines = ["digraph skeleton {", "  rankdir=BT;", "  node [shape=box];"]
    for c in range(k):
        label = (f"h={skel.heights[c]} |T|={skel.cardinality(c)} "
                 f"reps={len(skel.classes[c])}")
        lines.append(f'  c{c} [label="{label}", tooltip="{bits.fmt(skel.class_rep(c))}"];')
    below = [[skel.strictly_below(d, c) for d in range(k)] for c in range(k)]
    for c in range(k):
        for d in range(k):
            if not below[c][d]:
                continue
            if any(below[c][e] and below[e][d] for e in range(k)):
                continue
            lines.append(f"  c{c} -> c{d};")
    lines.append("}")
    return "\n".join(lines) + "\n"
