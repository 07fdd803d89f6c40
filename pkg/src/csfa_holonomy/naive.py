"""Definitional reference implementation of the skeleton and holonomy groups.

Deliberately naive: subsets are frozensets, every relation is re-derived by
scanning the whole monoid, nothing is cached.  Used as an independent oracle
for :mod:`csfa_holonomy.holonomy`; only sensible for a handful of states.
"""

import functools


def monoid(aut):
    """All maps induced by words, by fixed-point iteration."""
    n = aut.n
    result = {tuple(range(n))}
    changed = True
    while changed:
        changed = False
        for f in list(result):
            for row in aut.delta:
                g = tuple(row[f[p]] for p in range(n))
                if g not in result:
                    result.add(g)
                    changed = True
    return result


def apply(subset, f):
    return frozenset(f[p] for p in subset)


def skeleton(aut):
    n = aut.n
    M = monoid(aut)
    Q = frozenset(range(n))
    J = {apply(Q, m) for m in M} | {frozenset([p]) for p in range(n)}

    def leq(R, S):
        return any(R <= apply(S, m) for m in M)

    def equiv(R, S):
        return leq(R, S) and leq(S, R)

    classes = set()
    for R in J:
        classes.add(frozenset(S for S in J if equiv(R, S)))

    def strictly_below(C, D):
        R, S = next(iter(C)), next(iter(D))
        return leq(R, S) and not leq(S, R)

    @functools.cache
    def height(C):
        if len(next(iter(C))) == 1:
            return 0
        return 1 + max((height(D) for D in classes if strictly_below(D, C)), default=0)

    heights = {C: height(C) for C in classes}

    def paving(T):
        return {R for R in J if R < T
                and not any(R < S < T for S in J)}

    pavings = {}
    group_orders = {}
    for T in J:
        if len(T) < 2:
            continue
        B = paving(T)
        pavings[T] = B
        K = [m for m in M if apply(T, m) == T]
        induced = set()
        for m in K:
            induced.add(frozenset((R, apply(R, m)) for R in B))
        group_orders[T] = len(induced)
    return {
        "monoid": M,
        "members": J,
        "classes": classes,
        "heights": heights,
        "pavings": pavings,
        "group_orders": group_orders,
    }
