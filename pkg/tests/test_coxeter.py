import random

import pytest

import paracat.coxeter as cx
import paracat.permutations as pm
from paracat.posets import FinitePoset
from paracat.rings import PHI


def perm_of_element(x, n):
    """One-line notation of a type A_{n-1} element acting on positions."""
    word = list(range(1, n + 1))
    for a in x.word:
        word[a], word[a + 1] = word[a + 1], word[a]
    return tuple(word)


def test_simple_reflection_matrix_examples():
    a2 = cx.coxeter_system("A", 2)
    s1 = cx.simple_reflection_matrix(a2, 0)
    assert a2.act(s1, a2.simple_root(1)) == (1, 1)      # s1(a2) = a1 + a2
    assert a2.act(s1, a2.simple_root(0)) == (-1, 0)     # s1(a1) = -a1
    i25 = cx.coxeter_system("I", 2, 5)
    assert i25.act(i25.gens[0], i25.simple_root(1)) == (PHI, 1)


def test_multiply_and_braid():
    a2 = cx.coxeter_system("A", 2)
    e = cx.identity_element(a2)
    s1 = cx.element_from_word(a2, (0,))
    assert cx.multiply(a2, e, s1) == s1
    assert cx.multiply(a2, s1, s1) == e
    lhs = cx.element_from_word(a2, (0, 1, 0))
    rhs = cx.element_from_word(a2, (1, 0, 1))
    assert lhs == rhs and lhs.length == 3


def test_positive_root_counts():
    for fam, rank, count in [("A", 4, 10), ("B", 4, 16), ("D", 4, 12),
                             ("H", 3, 15), ("H", 4, 60), ("F", 4, 24)]:
        roots, index, mats = cx.coxeter_system(fam, rank).positive_roots()
        assert len(roots) == count
        sys = cx.coxeter_system(fam, rank)
        for r, m in zip(roots, mats):
            assert sys.act(m, r) == cx.root_neg(r)


def test_longest_element_lengths():
    assert cx.longest_element(cx.coxeter_system("A", 1)).word == (0,)
    assert cx.longest_element(cx.coxeter_system("A", 3)).length == 6
    assert cx.longest_element(cx.coxeter_system("H", 3)).length == 15
    with pytest.raises(cx.CoxeterError):
        cx.longest_element(cx.coxeter_system("affine-A", 2))


def test_is_reduced_examples():
    a4 = cx.coxeter_system("A", 4)
    assert not cx.is_reduced(a4, (0, 0))
    assert cx.is_reduced(a4, (1, 0, 1, 2, 3, 1, 0))
    assert cx.is_reduced(a4, ())


def test_inversion_sequence_examples():
    a2 = cx.coxeter_system("A", 2)
    assert cx.inversion_sequence(a2, (0,)) == [(1, 0)]
    assert cx.inversion_sequence(a2, (0, 1, 0)) == [(1, 0), (1, 1), (0, 1)]
    with pytest.raises(cx.CoxeterError):
        cx.inversion_sequence(a2, (0, 0))


def test_left_inversion_set_and_covers():
    a2 = cx.coxeter_system("A", 2)
    e = cx.identity_element(a2)
    assert cx.left_inversion_set(a2, e) == frozenset()
    w0 = cx.longest_element(a2)
    assert len(cx.left_inversion_set(a2, w0)) == 3
    assert cx.cover_reflections(a2, w0) == frozenset({(1, 0), (0, 1)})
    assert cx.cover_reflections(a2, e) == frozenset()


def test_affine_example_inversions():
    aff = cx.coxeter_system("affine-A", 3)
    word = (0, 1, 0, 3, 0, 1, 2)
    seq = cx.inversion_sequence(aff, word)
    assert len(seq) == 7
    x = cx.element_from_word(aff, (1, 0, 3, 0), require_reduced=True)
    pos = {r: k + 1 for k, r in enumerate(seq)}
    assert sorted(pos[r] for r in cx.cover_reflections(aff, x)) == [2, 6]
    assert sorted(pos[r] for r in cx.left_inversion_set(aff, x)) == [2, 3, 4, 6]


def test_c_sorting_word_examples():
    a2 = cx.coxeter_system("A", 2)
    c = cx.element_from_word(a2, (0, 1))
    assert cx.c_sorting_word(a2, c, (0, 1)) == (0, 1)
    assert cx.c_sorting_word(a2, cx.longest_element(a2), (0, 1)) == (0, 1, 0)
    b2 = cx.coxeter_system("B", 2)
    assert cx.c_sorting_word(b2, cx.longest_element(b2), (0, 1)) == (0, 1, 0, 1)


def test_quotient_min_rep_bridge():
    a3 = cx.coxeter_system("A", 3)
    w0 = cx.longest_element(a3)
    rep = cx.quotient_min_rep(a3, w0, [1])
    assert perm_of_element(rep, 4) == (4, 2, 3, 1)
    assert cx.quotient_min_rep(a3, rep, [1]) == rep
    assert cx.quotient_min_rep(a3, w0, [0, 1, 2]) == cx.identity_element(a3)


def test_weak_interval_examples():
    a2 = cx.coxeter_system("A", 2)
    assert len(cx.enumerate_weak_interval(a2, ())) == 1
    assert len(cx.enumerate_weak_interval(a2, cx.longest_element(a2).word)) == 6
    aff = cx.coxeter_system("affine-A", 3)
    assert len(cx.enumerate_weak_interval(aff, (0, 1, 0, 3, 0, 1, 2))) == 26


def test_parabolic_quotient_matches_permutation_model():
    a3 = cx.coxeter_system("A", 3)
    got = cx.enumerate_parabolic_quotient(a3, [1])
    assert len(got) == 12
    perms = {perm_of_element(x, 4) for x in got}
    # members of the quotient are inverses of increasing-in-regions words
    ctx = pm.j_context(4, {2})
    expected = {pm.perm_inverse(w) for w in pm.enumerate_quotient(ctx)}
    assert perms == expected
    h3 = cx.coxeter_system("H", 3)
    assert cx.enumerate_parabolic_quotient(h3, [0, 1, 2]) == [cx.identity_element(h3)]


def test_weak_order_lattice_small_rank():
    for fam, rank in [("A", 3), ("B", 3), ("H", 3)]:
        sys = cx.coxeter_system(fam, rank)
        elements = cx.enumerate_parabolic_quotient(sys, [])
        interval = cx.weak_interval(sys, cx.longest_element(sys).word)
        masks = {x: interval.mask_of(x) for x in elements}
        poset = FinitePoset.from_relation(
            elements, lambda u, v: masks[u] & ~masks[v] == 0)
        assert poset.is_lattice() is None


def test_solve_two_root_combination():
    a2 = cx.coxeter_system("A", 2)
    a, b = cx.solve_two_root_combination(a2, (1, 1), (1, 0), (0, 1))
    assert a == 1 and b == 1
    assert cx.solve_two_root_combination(a2, (1, 0), (1, 0), (0, 1)) is None
    with pytest.raises(cx.CoxeterError):
        cx.solve_two_root_combination(a2, (1, 1), (1, 0), (-1, 0))
    aff = cx.coxeter_system("affine-A", 3)
    seq = cx.inversion_sequence(aff, (0, 1, 0, 3, 0, 1, 2))
    b1, b2_, b3 = seq[0], seq[1], seq[2]
    assert cx.solve_two_root_combination(aff, b2_, b1, b3) == (1, 1)
    b4, b5, b6 = seq[3], seq[4], seq[5]
    assert cx.solve_two_root_combination(aff, b4, b2_, b6) == (1, 1)
    assert cx.solve_two_root_combination(aff, b5, b1, b6) == (1, 1)
    assert cx.solve_two_root_combination(aff, seq[6], b1, b6,
                                         allow_dependent=True) is None


def test_inverse_and_lengths_random():
    rng = random.Random(7)
    for fam, rank in [("A", 4), ("B", 3), ("H", 3)]:
        sys = cx.coxeter_system(fam, rank)
        for _ in range(40):
            word = tuple(rng.randrange(sys.n) for _ in range(rng.randrange(12)))
            x = cx.element_from_word(sys, word)
            assert cx.inverse(sys, x).length == x.length
            assert cx.multiply(sys, x, cx.inverse(sys, x)) == cx.identity_element(sys)


def test_matrix_faithfulness_small_rank():
    # distinct elements get distinct matrices: the whole group of B3 collapses
    # to exactly |W| matrices under exhaustive word products up to length 9
    b3 = cx.coxeter_system("B", 3)
    seen = {b3.identity_mat}
    frontier = [b3.identity_mat]
    for _ in range(9):
        nxt = []
        for mat in frontier:
            for g in b3.gens:
                new = b3.mul(mat, g)
                if new not in seen:
                    seen.add(new)
                    nxt.append(new)
        frontier = nxt
    assert len(seen) == 48


def test_coxeter_elements():
    a3 = cx.coxeter_system("A", 3)
    elems = cx.coxeter_elements(a3)
    assert len(elems) == 4  # acyclic orientations of the path on 3 nodes
    d4 = cx.coxeter_system("D", 4)
    assert len(cx.coxeter_elements(d4)) == 8
    for x, word in elems:
        assert x.length == 3 and sorted(word) == [0, 1, 2]


def test_dihedral_model():
    i7 = cx.coxeter_system("I", 2, 7)
    assert i7.m == 7 and i7.finite
    w0 = cx.longest_element(i7)
    assert w0.length == 7
    assert len(cx.enumerate_weak_interval(i7, w0.word)) == 14
    roots, _, mats = i7.positive_roots()
    assert len(roots) == 7
    for r, mat in zip(roots, mats):
        assert i7.act(mat, r) == i7.root_neg(r)
    poset = i7.root_poset()
    assert poset.count_ideals() == 9  # m + 2
    assert cx.enumerate_parabolic_quotient(i7, [0, 1]) == [cx.identity_element(i7)]


def test_inversion_sequence_matches_inversion_set_random():
    rng = random.Random(11)
    for fam, rank in [("A", 4), ("B", 3), ("D", 4), ("H", 3)]:
        sys = cx.coxeter_system(fam, rank)
        for _ in range(25):
            word = tuple(rng.randrange(sys.n) for _ in range(rng.randrange(10)))
            x = cx.element_from_word(sys, word)
            seq = cx.inversion_sequence(sys, x.word)
            assert len(seq) == x.length
            assert frozenset(seq) == cx.left_inversion_set(sys, x)
