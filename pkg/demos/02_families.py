"""
Decompositions across families
==============================

Sample circular semi-flower automata with zero, one and two branch points
and tabulate the component chains.  With two branch points the top
component's order is the orbit length r of the branch-point pair under the
circular letter.
"""

from collections import Counter

from csfa_holonomy import GenSpec, classify, components, enumerate_monoid, generate_csfa, skeleton_space
from csfa_holonomy.csfa import format_chain


def chain_of(aut):
    monoid = enumerate_monoid(aut)
    skel = skeleton_space(monoid)
    return format_chain([c.symbol() for c in components(skel, monoid)])


print("no branch points (the bare cycle):")
for n in range(2, 7):
    print(f"  n={n}: {chain_of(generate_csfa(GenSpec(n, 0)))}")

print("\none branch point:")
for n in range(2, 7):
    aut = generate_csfa(GenSpec(n, 1))
    print(f"  n={n}: {chain_of(aut)}  b = {aut.row('b')}")

###############################################################################
# Two branch points: odd n always gives r = n, even n splits between n and n/2.

print("\ntwo branch points, 15 samples each:")
for n in range(3, 9):
    tally = Counter()
    for seed in range(15):
        aut = generate_csfa(GenSpec(n, 2, seed=seed, max_attempts=200000))
        tally[(classify(aut).r, chain_of(aut))] += 1
    for (r, chain), count in sorted(tally.items()):
        print(f"  n={n}: r={r}  {chain}  x{count}")
