import itertools
import math

import pytest

import paracat.permutations as pm
from paracat.posets import FinitePoset


def all_perms(n):
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def test_inversion_pairs_examples():
    assert pm.inversion_pairs((1, 2, 3, 4)) == frozenset()
    assert pm.inversion_pairs((2, 3, 1)) == frozenset({(1, 3), (2, 3)})
    assert len(pm.inversion_pairs((4, 3, 2, 1))) == 6


def test_inversion_mask_agrees_with_pairs():
    for w in all_perms(4):
        mask = pm.inversion_mask(w)
        pairs = pm.inversion_pairs(w)
        for i in range(1, 5):
            for j in range(i + 1, 5):
                assert bool(mask >> pm.pair_rank(i, j, 4) & 1) == ((i, j) in pairs)


def test_weak_leq_examples():
    e = pm.identity(4)
    for w in all_perms(4):
        assert pm.weak_leq(e, w)
    assert pm.weak_leq((2, 1, 4, 3), (3, 1, 4, 2))
    assert not pm.weak_leq((2, 3, 1), (3, 1, 2))
    with pytest.raises(ValueError):
        pm.weak_leq((1, 2), (1, 2, 3))


def test_descent_pairs_examples():
    assert pm.descent_pairs((1, 2, 3)) == frozenset()
    assert pm.descent_pairs((4, 2, 3, 1)) == frozenset({(1, 3), (2, 4)})
    assert pm.descent_pairs((2, 1, 4, 3)) == frozenset({(1, 2), (3, 4)})


def test_lower_covers_examples_and_oracle():
    assert pm.lower_covers(pm.identity(3)) == set()
    assert pm.lower_covers((2, 1, 3)) == {(1, 2, 3)}
    # brute-force oracle: covers in the weak order poset
    for n in (3, 4):
        perms = all_perms(n)
        masks = {w: pm.inversion_mask(w) for w in perms}
        for w in perms:
            brute = set()
            for u in perms:
                if len(pm.inversion_pairs(u)) == len(pm.inversion_pairs(w)) - 1 \
                        and masks[u] & masks[w] == masks[u]:
                    brute.add(u)
            assert pm.lower_covers(w) == brute
            # each cover differs by exactly one inversion pair
            for u in brute:
                extra = masks[w] & ~masks[u]
                assert bin(extra).count("1") == 1


def test_upper_covers_are_dual():
    for w in all_perms(4):
        for u in pm.upper_covers(w):
            assert w in pm.lower_covers(u)


def test_j_regions_examples():
    assert pm.j_context(4, {2}).regions == ((1,), (2, 3), (4,))
    ctx = pm.j_context(10, {1, 2, 3, 5, 8})
    assert ctx.regions == ((1, 2, 3, 4), (5, 6), (7,), (8, 9), (10,))
    assert pm.j_context(4, set()).regions == ((1,), (2,), (3,), (4,))
    with pytest.raises(ValueError):
        pm.j_context(4, {4})


def test_is_quotient_member_examples():
    ctx = pm.j_context(4, {2})
    assert pm.is_quotient_member((4, 2, 3, 1), ctx)
    assert not pm.is_quotient_member((1, 3, 2, 4), ctx)
    assert pm.is_quotient_member(pm.identity(4), ctx)


def test_enumerate_quotient_counts_and_membership():
    ctx = pm.j_context(4, {2})
    q = pm.enumerate_quotient(ctx)
    assert len(q) == 12
    assert q == sorted(q)  # lexicographic one-line order
    top = pm.quotient_longest(ctx)
    for w in q:
        assert pm.is_quotient_member(w, ctx)
        assert pm.weak_leq(w, top)
    assert len(pm.enumerate_quotient(pm.j_context(3, set()))) == 6
    assert pm.enumerate_quotient(pm.j_context(4, {1, 2, 3})) == [pm.identity(4)]


def test_quotient_sizes_are_multinomial():
    for n in range(1, 8):
        for k in range(n):
            for j_set in itertools.combinations(range(1, n), k):
                ctx = pm.j_context(n, j_set)
                size = math.factorial(n)
                for block in ctx.regions:
                    size //= math.factorial(len(block))
                assert len(pm.enumerate_quotient(ctx)) == size == pm.quotient_size(ctx)


def test_quotient_longest_examples():
    assert pm.quotient_longest(pm.j_context(4, {2})) == (4, 2, 3, 1)
    assert pm.quotient_longest(pm.j_context(4, set())) == (4, 3, 2, 1)
    assert pm.quotient_longest(pm.j_context(4, {1, 2, 3})) == (1, 2, 3, 4)


def test_weak_order_is_a_lattice_small():
    for n in (2, 3, 4, 5):
        poset = FinitePoset.from_relation(all_perms(n), pm.weak_leq)
        assert poset.is_lattice() is None
    hexagon = FinitePoset.from_relation(all_perms(3), pm.weak_leq)
    assert len(hexagon.covers()) == 6


def test_weak_meet_matches_poset_meet():
    for n in (3, 4):
        poset = FinitePoset.from_relation(all_perms(n), pm.weak_leq)
        for u in all_perms(n):
            for v in all_perms(n):
                assert pm.weak_meet(u, v) == poset.meet(u, v)


def test_one_line_rendering():
    ctx = pm.j_context(4, {2})
    assert pm.one_line((4, 2, 3, 1), ctx) == "4|23|1"
    assert pm.parse_one_line("4|23|1") == (4, 2, 3, 1)
    assert pm.parse_one_line("10 2 3 4 5 6 7 8 9 1") == (10, 2, 3, 4, 5, 6, 7, 8, 9, 1)
