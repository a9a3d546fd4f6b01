"""Alignment for an arbitrary reduced word, in an infinite group.

The affine rank-3 cycle contains a length-seven element whose interval
below it has 26 elements.  Its inversion order forces three middle roots;
seventeen elements satisfy every forcing, and the weak order on them is
not a lattice: one pair has two maximal lower bounds.
"""

import paracat.alignment as al
import paracat.coxeter as cx

aff = cx.coxeter_system("affine-A", 3)
word = (0, 1, 0, 3, 0, 1, 2)
name = lambda x: "".join(aff.gen_names[a] for a in x.word) or "e"

ctx = al.build_context(aff, word)
print("base word:", "".join(aff.gen_names[a] for a in word))
print("inversion order (roots in simple-root coordinates):")
for k, root in enumerate(ctx.order, start=1):
    print(f"  t{k} = {root}")
print("forcing table (middle root -> required earlier roots):")
for q, p, r in ctx.triples:
    print(f"  t{p + 1} = a*t{q + 1} + b*t{r + 1}  forces t{q + 1}")

interval = cx.weak_interval(aff, word)
aligned = al.aligned_set_general(aff, word)
print(f"\ninterval below the base: {len(interval.elements)} elements,"
      f" {len(aligned)} aligned")

x = cx.element_from_word(aff, (1, 0, 3, 0))
pos = {root: k + 1 for k, root in enumerate(ctx.order)}
print(f"\nthe element {name(x)} has covers",
      sorted(f"t{pos[r]}" for r in cx.cover_reflections(aff, x)),
      "and inversions",
      sorted(f"t{pos[r]}" for r in cx.left_inversion_set(aff, x)))
print("aligned?", al.is_aligned(ctx, x))

poset = al.weak_order_poset(aff, aligned, interval)
a = cx.element_from_word(aff, (0, 1, 0, 3, 0, 1))
b = cx.element_from_word(aff, (1, 0, 3, 0, 1, 2))
bounds = poset.maximal_lower_bounds(a, b)
print(f"\nmaximal aligned lower bounds of {name(a)} and {name(b)}:",
      sorted(name(y) for y in bounds))
print("so the aligned poset is not a lattice:", poset.is_lattice() is not None)
