"""Cluster complexes as subword complexes, and their flip posets.

A facet is the complement of a reduced occurrence of the target inside the
ambient word.  Exchanging one position moves between facets; orienting each
exchange from the smaller leaving index to the larger entering one orders
the facets.  For the rank-two symmetric group this is the pentagon, and for
the quotient of S4 by {s2} the flip poset recovers the ten-element
pattern-avoidance lattice.
"""

import paracat.coxeter as cx
import paracat.permutations as pm
import paracat.subword as sw
import paracat.tamari as tm

a2 = cx.coxeter_system("A", 2)
spec = sw.cluster_complex(a2, (), (0, 1))
print("ambient word:", "".join(f"s{a + 1}" for a in spec.q_word),
      " target length:", spec.target.length)
facets = sw.facets(spec)
print(f"facets ({len(facets)}):")
for facet in facets:
    witness = "".join(f"s{a + 1}" for a in sw.facet_witness(spec, facet))
    print(f"  positions {sorted(facet)}  complement word {witness}")
print("flips out of the first facet:",
      [(i, j, sorted(g)) for i, j, g in sw.flips(spec, facets[0], facets)])

pentagon = sw.flip_poset(spec)
t3 = tm.tamari_lattice(pm.j_context(3, set()))
print("pentagon flip poset isomorphic to the three-letter lattice:",
      pentagon.is_isomorphic(t3))

a3 = cx.coxeter_system("A", 3)
spec4 = sw.cluster_complex(a3, (1,), (0, 1, 2))
flip4 = sw.flip_poset(spec4)
t4 = tm.tamari_lattice(pm.j_context(4, {2}))
print(f"\nquotient of S4 by {{s2}}: {len(sw.facets(spec4))} facets;"
      f" flip poset isomorphic to the avoidance lattice:",
      flip4.is_isomorphic(t4))
