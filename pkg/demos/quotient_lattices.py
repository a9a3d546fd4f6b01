"""Tour of a parabolic pattern-avoidance lattice.

Builds the twelve-element quotient of the symmetric group on four letters
cut out by J = {s2}, marks its ten avoiding members, walks through the two
projections and the congruence they induce, and shows the pair whose meet
differs between the weak order and the lattice.
"""

import paracat.permutations as pm
import paracat.tamari as tm

ctx = pm.j_context(4, {2})
members = pm.enumerate_quotient(ctx)
print(f"quotient members ({len(members)}):")
for w in members:
    tag = "avoiding" if tm.is_j231_avoiding(w, ctx) else "        "
    print(f"  {pm.one_line(w, ctx):>8}   {tag}")

print("\nprojections of the two non-avoiding members:")
for w in members:
    if not tm.is_j231_avoiding(w, ctx):
        print(f"  {pm.one_line(w, ctx)}: down -> {pm.one_line(tm.pi_down(w, ctx), ctx)},"
              f" up -> {pm.one_line(tm.pi_up(w, ctx), ctx)}")

print("\ncongruence classes (bottom ~ top):")
for cls in tm.congruence_classes(ctx):
    names = ", ".join(sorted(pm.one_line(w, ctx) for w in cls.members))
    print(f"  [{pm.one_line(cls.bottom, ctx)}, {pm.one_line(cls.top, ctx)}] = {{{names}}}")

u, v = (4, 1, 3, 2), (3, 2, 4, 1)
weak, lattice = tm.non_sublattice_witness(ctx, u, v)
print(f"\nmeet of {pm.one_line(u, ctx)} and {pm.one_line(v, ctx)}:")
print(f"  in the weak order : {pm.one_line(weak, ctx)}")
print(f"  in the lattice    : {pm.one_line(lattice, ctx)}  (not a sublattice)")

report = tm.verify_quotient(ctx)
print(f"\nquotient verification: {'ok' if report.ok else report.failures}"
      f" with {report.classes} classes")
