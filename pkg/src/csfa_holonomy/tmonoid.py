"""Small explicit transformation monoids: closure, wreath product, division.

Everything here materializes monoids element by element, so each operation
carries a size guard.  Maps are tuples of point indices acting on the right.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import ResourceLimitError
from .monoid import compose, identity

WREATH_MAX_POINTS = 64
WREATH_MAX_MAPS = 10**6
DIVIDES_MAX_SMALL = 4
DIVIDES_MAX_BIG = 16
ISOMORPHISM_MAX_POINTS = 8


@dataclass(frozen=True)
class TransformationMonoidValue:
    points: tuple
    maps: frozenset

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "maps", frozenset(tuple(m) for m in self.maps))

    @property
    def degree(self):
        return len(self.points)

    @property
    def size(self):
        return len(self.maps)

    @property
    def is_group(self):
        k = len(self.points)
        return all(len(set(m)) == k for m in self.maps)

    def is_closed(self):
        return identity(len(self.points)) in self.maps and all(
            compose(f, g) in self.maps for f in self.maps for g in self.maps)

    @classmethod
    def generated_by(cls, points, generators):
        points = tuple(points)
        return cls(points, _close(len(points), generators, with_identity=True))


def _close(k, generators, with_identity, cap=WREATH_MAX_MAPS):
    gens = [tuple(g) for g in generators]
    seen = set()
    queue = deque()
    if with_identity:
        seen.add(identity(k))
        queue.append(identity(k))
    for g in gens:
        if g not in seen:
            seen.add(g)
            queue.append(g)
    while queue:
        f = queue.popleft()
        for g in gens:
            h = compose(f, g)
            if h not in seen:
                if len(seen) >= cap:
                    raise ResourceLimitError(f"monoid exceeds {cap} maps")
                seen.add(h)
                queue.append(h)
    return frozenset(seen)


def cyclic(k):
    """𝒞ₖ: the cyclic group generated by ``i -> i+1 mod k`` on ``k`` points."""
    shift = tuple((i + 1) % k for i in range(k))
    return TransformationMonoidValue.generated_by(range(k), [shift])


def closure(tm):
    """Add every constant map and close under composition."""
    k = len(tm.points)
    constants = [(p,) * k for p in range(k)]
    return TransformationMonoidValue(
        tm.points, _close(k, list(tm.maps) + constants, with_identity=True))


def direct_product(tms):
    """Componentwise action on the product of the point sets."""
    tms = list(tms)
    points = tuple(itertools.product(*(tm.points for tm in tms)))
    sizes = [len(tm.points) for tm in tms]
    coords = list(itertools.product(*(range(s) for s in sizes)))
    where = {c: i for i, c in enumerate(coords)}
    count = math.prod(len(tm.maps) for tm in tms)
    if count > WREATH_MAX_MAPS:
        raise ResourceLimitError(f"direct product would have {count} maps")
    maps = set()
    for combo in itertools.product(*(sorted(tm.maps) for tm in tms)):
        maps.add(tuple(where[tuple(m[x] for m, x in zip(combo, c))] for c in coords))
    return TransformationMonoidValue(points, maps)


def wreath_product(bottom, top):
    """``bottom ≀ top`` acting on pairs ``(x, y)``.

    A map is a pair ``(f, g)`` with ``f: top.points -> bottom.maps`` and
    ``g`` in ``top.maps``; it sends ``(x, y)`` to ``(x.(y f), y.g)``.  The
    top coordinate evolves on its own, the bottom one depends on it.
    Point ``(x, y)`` has index ``x + |X| * y``.
    """
    nx, ny = len(bottom.points), len(top.points)
    if nx * ny > WREATH_MAX_POINTS:
        raise ResourceLimitError(f"wreath product would have {nx * ny} points")
    count = len(bottom.maps) ** ny * len(top.maps)
    if count > WREATH_MAX_MAPS:
        raise ResourceLimitError(f"wreath product would have {count} maps")
    s = np.array(sorted(bottom.maps), dtype=np.int64).reshape(len(bottom.maps), nx)
    t = np.array(sorted(top.maps), dtype=np.int64).reshape(len(top.maps), ny)
    # all functions top.points -> bottom.maps, as index rows
    choice = np.array(list(itertools.product(range(len(s)), repeat=ny)),
                      dtype=np.int64).reshape(-1, ny)
    lower = s[choice]                                  # (K, ny, nx)
    rows = []
    for g in t:
        upper = (nx * g)[None, :, None]                # (1, ny, 1)
        rows.append((lower + upper).reshape(len(choice), ny * nx))
    images = np.concatenate(rows)
    points = tuple((x, y) for y in top.points for x in bottom.points)
    return TransformationMonoidValue(points, map(tuple, images.tolist()))


def _semigroup_generators(tm):
    """A subset whose semigroup closure is all of ``tm.maps``."""
    k = len(tm.points)
    ident = identity(k)
    order = sorted(tm.maps, key=lambda m: (m == ident, -len(set(m)), m))
    gens = []
    reached = set()
    for m in order:
        if m not in reached:
            gens.append(m)
            reached = set(_close(k, gens, with_identity=False))
    return gens


def find_division(small, big):
    """Search for ``(phi, covers)`` showing ``small`` divides ``big``.

    ``phi`` maps a subset of big's point indices onto small's point indices;
    ``covers`` maps each generator of ``small`` to a map of ``big`` that
    keeps ``phi``'s domain inside itself and commutes with ``phi``.  Covering
    a generating set suffices: covers compose.  Returns None if no such
    pair exists.
    """
    if len(small.points) > DIVIDES_MAX_SMALL or len(big.points) > DIVIDES_MAX_BIG:
        raise ResourceLimitError(
            f"division search limited to {DIVIDES_MAX_SMALL} and "
            f"{DIVIDES_MAX_BIG} points")
    p, n = len(small.points), len(big.points)
    if p > n:
        return None
    gens = _semigroup_generators(small)
    big_maps = np.array(sorted(big.maps), dtype=np.int64).reshape(len(big.maps), n)
    UNSET, OUT = -2, -1
    phi = np.full(n, UNSET, dtype=np.int64)
    hit = [0] * p

    def extend(x, cands):
        if x == n:
            if min(hit) == 0:
                return None
            return [c.copy() for c in cands]
        missing = sum(1 for h in hit if h == 0)
        if missing > n - x:
            return None
        # unhit values first: surjectivity is the usual reason to backtrack
        values = sorted(range(p), key=lambda v: hit[v] > 0) + [OUT]
        for v in values:
            phi[x] = v
            ys = big_maps[:, x]
            new = []
            for m, cand in zip(gens, cands):
                ok = cand.copy()
                if v != OUT:
                    phi_y = phi[ys]
                    ok &= (phi_y == UNSET) | (phi_y == m[v])
                for xp in range(x):
                    vp = phi[xp]
                    if vp == OUT:
                        continue
                    into = big_maps[:, xp] == x
                    if v == OUT or m[vp] != v:
                        ok &= ~into
                if not ok.any():
                    break
                new.append(ok)
            else:
                if v != OUT:
                    hit[v] += 1
                found = extend(x + 1, new)
                if v != OUT:
                    hit[v] -= 1
                if found is not None:
                    return found
        phi[x] = UNSET
        return None

    start = [np.ones(len(big_maps), dtype=bool) for _ in gens]
    result = extend(0, start)
    if result is None:
        return None
    mapping = {x: int(v) for x, v in enumerate(phi) if v >= 0}
    covers = {m: tuple(int(i) for i in big_maps[np.flatnonzero(ok)[0]])
              for m, ok in zip(gens, result)}
    return mapping, covers


def divides(small, big):
    return find_division(small, big) is not None


def transformation_group_isomorphic(a, b):
    """Is there a bijection of points conjugating one group onto the other?

    ``a`` and ``b`` are ``(points, permutations)`` pairs with permutations
    given as index tuples.
    """
    pa, ga = a
    pb, gb = b
    ga = {tuple(g) for g in ga}
    gb = {tuple(g) for g in gb}
    k = len(pa)
    if k > ISOMORPHISM_MAX_POINTS or len(pb) > ISOMORPHISM_MAX_POINTS:
        raise ResourceLimitError(
            f"isomorphism test limited to {ISOMORPHISM_MAX_POINTS} points")
    if k != len(pb) or len(ga) != len(gb):
        return False
    for sigma in itertools.permutations(range(k)):
        # g on a's points becomes sigma^-1 g sigma on b's points
        inv = [0] * k
        for i, s in enumerate(sigma):
            inv[s] = i
        if all(tuple(sigma[g[inv[j]]] for j in range(k)) in gb for g in ga):
            return True
    return False


# -- bridges from the holonomy engine -------------------------------------------

def monoid_tm(monoid):
    return TransformationMonoidValue(range(monoid.n), (f.images for f in monoid.elements))


def component_tm(component):
    """The level's transformation group: product of pavings and of groups."""
    factors = [TransformationMonoidValue(g.paving, g.permutations)
               for g in component.factors]
    if len(factors) == 1:
        return factors[0]
    return direct_product(factors)


def cascade(levels):
    """Fold ``levels[0] ≀ levels[1] ≀ ...`` with level 0 at the bottom."""
    levels = list(levels)
    result = levels[0]
    for tm in levels[1:]:
        result = wreath_product(result, tm)
    return result


def holonomy_cascade(comps):
    """Closed wreath product of the holonomy components (bottom first)."""
    return cascade(closure(component_tm(c)) for c in comps)


def predicted_cascade(chain):
    """Closed wreath product of regular cyclic groups ``[(k, order), ...]``."""
    return cascade(closure(cyclic(k)) for k, _ in chain)
