"""
Cascades and division
=====================

Build the closed wreath product of the holonomy components and find an
explicit division of the automaton's monoid into it: a partial map from
cascade states onto automaton states plus, for each generator, a cascade
map that covers it.
"""

from csfa_holonomy import bits, components, enumerate_monoid, parse_automaton, skeleton_space
from csfa_holonomy.tmonoid import closure, cyclic, find_division, holonomy_cascade, monoid_tm, wreath_product

###############################################################################
# Wreath products of small cyclic groups.

c2 = cyclic(2)
print("C2 wr C2:", wreath_product(c2, c2).size, "maps")
print("closed C2 wr closed C2:", wreath_product(closure(c2), closure(c2)).size, "maps")

###############################################################################
# The cascade for a two-branch-point automaton on three states.

aut = parse_automaton("""
states: 3
alphabet: a b
initial: 0
finals: 0
a: 1 2 0
b: 1 0 0
""")
monoid = enumerate_monoid(aut)
skel = skeleton_space(monoid)
comps = components(skel, monoid)
cascade = holonomy_cascade(comps)
print("\nautomaton monoid:", monoid.size, "maps on", monoid.n, "states")
print("cascade:", cascade.size, "maps on", cascade.degree, "states")

phi, covers = find_division(monoid_tm(monoid), cascade)
###############################################################################
# Cascade states are pairs (tile of the bottom level, tile of the top level).

print("\nphi (cascade state -> automaton state):")
for x, v in sorted(phi.items()):
    low, high = cascade.points[x]
    print(f"  ({bits.fmt(low)}, {bits.fmt(high)}) -> {v}")
print("covers:")
for m, big in covers.items():
    print(f"  {m} covered by {big}")
