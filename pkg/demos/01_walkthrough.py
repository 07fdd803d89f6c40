"""
A four-state circular automaton, end to end
===========================================

Parse a small automaton, look at its branch points, enumerate its
transition monoid, build the skeleton and read off the holonomy
components.  Finally compare against the closed-form prediction.
"""

from csfa_holonomy import (
    classify,
    components,
    enumerate_monoid,
    parse_automaton,
    skeleton_space,
    validate,
    verify,
)
from csfa_holonomy import bits
from csfa_holonomy.csfa import format_chain

TEXT = """
states: 4
alphabet: a b
initial: 0
finals: 0
a: 1 2 3 0
b: 0 2 0 0
"""

aut = parse_automaton(TEXT)

###############################################################################
# Validation: a trim automaton whose only final state is the initial one and
# in which every cycle passes through it.

report = validate(aut)
print("semi-flower:", report.is_sfa)
print("in-degrees:", report.indegree)
print("branch points:", sorted(report.bpis))

cls = classify(aut)
print("circular letter:", cls.circular_letter, " ordering:", cls.ordering)
print("orbit length r of the branch-point pair:", cls.r)

###############################################################################
# The transition monoid.  Each element keeps the shortest word reaching it.

monoid = enumerate_monoid(aut)
print("\nmonoid size:", monoid.size)
for f in monoid.elements[:8]:
    print("  ", f)
print("   ...")

###############################################################################
# Skeleton: images of Q together with the singletons, grouped into classes.

skel = skeleton_space(monoid)
for c, masks in enumerate(skel.classes):
    sets = " ".join(bits.fmt(m) for m in masks)
    print(f"height {skel.heights[c]}: {sets}")

###############################################################################
# One component per height.  Degree is the paving size, the group is the
# permutation group induced on the paving.

comps = components(skel, monoid)
for comp in comps:
    print(f"level {comp.level}: degree {comp.degree}, C{comp.cyclic_order}, "
          f"generated by {comp.generator_word}")
print("chain:", format_chain([c.symbol() for c in comps]))

###############################################################################
# The checker recomputes everything and compares against the prediction.

rep = verify(aut)
for check in rep.checks:
    print(f"{check.status:4}  {check.id}")
print("passed:", rep.passed)
