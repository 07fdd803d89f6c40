"""
Exhaustive cross-check
======================

Every complete automaton with at most three states and two letters is run
through both the bitmask engine and a slow frozenset implementation that
follows the definitions literally.  Any disagreement is printed.
"""

import time
from collections import Counter

from csfa_holonomy import components, enumerate_monoid, skeleton_space, validate
from csfa_holonomy import bits, naive
from csfa_holonomy.sweep import all_automata

start = time.perf_counter()
tables = {}
sfa_count = 0
for aut in all_automata(3, 2):
    tables.setdefault(aut.delta, aut)
    sfa_count += validate(aut).is_sfa
print(f"{sum(1 for _ in all_automata(3, 2))} automata, {len(tables)} transition tables, "
      f"{sfa_count} semi-flower automata")

heights = Counter()
bad = 0
for delta, aut in tables.items():
    monoid = enumerate_monoid(aut)
    skel = skeleton_space(monoid)
    ref = naive.skeleton(aut)
    mine = {frozenset(bits.members(m)) for m in skel.members}
    if mine != ref["members"]:
        bad += 1
        print("members differ for", delta)
    heights[len(components(skel, monoid))] += 1
print("discrepancies:", bad)
print("number of levels:", dict(sorted(heights.items())))
print(f"{time.perf_counter() - start:.2f}s")
