"""The two partition bijections on the ten-element running instance.

The quotient of S_10 with regions 1234|56|7|89|10 carries a noncrossing
partition with bumps (2,9), (3,10), (6,8).  The demo rebuilds the avoiding
permutation from it, recovers the partition from the permutation's
descents, and converts it to the matching nonnesting partition and back
through the root-poset ideal."""

import paracat.partitions as pt
import paracat.permutations as pm

ctx = pm.j_context(10, {1, 2, 3, 5, 8})
nc = pt.partition_from_bumps([(2, 9), (3, 10), (6, 8)], 10)
print("noncrossing partition:", nc)

poset = pt.bump_poset(nc, ctx)
print("bump order on its parts (covers):")
for a, b in poset.covers():
    print(f"  {set(a)} < {set(b)}")

w = pt.nc_to_perm(nc, ctx)
print("\npermutation with these descents:", pm.one_line(w, ctx))
print("descents:", sorted(pm.descent_pairs(w)))
assert pt.perm_to_nc(w, ctx) == nc

nn = pt.nc_to_nn(nc, ctx)
print("\nnonnesting partner:", nn)
assert pt.nn_to_nc(nn, ctx) == nc

ideal = pt.nn_to_ideal(nn, ctx)
print(f"as a root-poset ideal of {len(pt.root_poset_pairs(ctx))} transpositions:"
      f" {len(ideal)} elements below the bumps")

shape = pt.bounding_shape(ctx)
print("\nbounding shape:", shape)
print("ideals by determinant :", pt.kreweras_count(shape))
print("ideals by enumeration :", pt.parabolic_root_poset_A(ctx).count_ideals())
