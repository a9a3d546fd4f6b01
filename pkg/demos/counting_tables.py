"""Where the parabolic Catalan families drift apart.

For most quotients of the rank-four groups the aligned elements, their
noncrossing images, the cluster-complex facets, and the nonnesting ideals
all agree.  Two exceptions are famous: in D4 the quotient by {s1,s2} counts
21 or 22 aligned elements depending on the Coxeter element, against 22
nonnesting ideals, and in F4 the quotient by {s2,s3} gives 57 or 62 against
63.  The demo recomputes both rows and one well-behaved H3 row.
"""

import paracat.alignment as al
import paracat.coxeter as cx
import paracat.subword as sw

WORDS = [(1, 2, 3, 0), (0, 1, 2, 3), (2, 1, 0, 3), (3, 1, 2, 0)]


def show_row(sys, j_set, words):
    names = ["".join(f"s{a + 1}" for a in w) for w in words]
    print(f"{sys.name}, J = {{{', '.join(f's{j + 1}' for j in j_set)}}}")
    for word, name in zip(words, names):
        aligned, nc = al.family_counts(sys, j_set, word)
        facets = len(sw.facets(sw.cluster_complex(sys, j_set, word)))
        print(f"  c = {name:10}  aligned {aligned:3}  noncrossing {nc:3}  facets {facets:3}")
    print(f"  nonnesting ideals: {al.nonnesting_count(sys, j_set)}")


show_row(cx.coxeter_system("D", 4), (0, 1), WORDS)
print()
show_row(cx.coxeter_system("F", 4), (1, 2), WORDS)
print()

h3 = cx.coxeter_system("H", 3)
print("H3, J = {s1,s2}: counts over every Coxeter element")
for _, word in cx.coxeter_elements(h3):
    aligned, nc = al.family_counts(h3, (0, 1), word)
    print(f"  c = {''.join(f's{a + 1}' for a in word):8} aligned {aligned}  noncrossing {nc}")
print(f"  nonnesting ideals: {al.nonnesting_count(h3, (0, 1))}")
