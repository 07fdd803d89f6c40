"""
Generating automata and drawing them
====================================

Draw a random circular semi-flower automaton from a seed, save it in the
text format, and write Graphviz files for the automaton and for the order
on its skeleton classes.  The same seed always yields the same file.
"""

import sys
import tempfile
from pathlib import Path

from csfa_holonomy import GenSpec, enumerate_monoid, export_automaton_dot, export_skeleton_dot
from csfa_holonomy import generate_csfa, serialize_automaton, skeleton_space

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 2024
aut = generate_csfa(GenSpec(6, 2, seed=seed, max_attempts=100000))
text = serialize_automaton(aut)
print(text)
assert serialize_automaton(generate_csfa(GenSpec(6, 2, seed=seed, max_attempts=100000))) == text

out = Path(tempfile.mkdtemp(prefix="csfa-"))
(out / "random.aut").write_text(text)
(out / "random.dot").write_text(export_automaton_dot(aut))
skel = skeleton_space(enumerate_monoid(aut))
(out / "skeleton.dot").write_text(export_skeleton_dot(skel))
print("wrote", *sorted(p.name for p in out.iterdir()), "to", out)
print("render with: dot -Tsvg", out / "skeleton.dot")
