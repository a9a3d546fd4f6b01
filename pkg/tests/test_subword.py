import pytest

import paracat.alignment as al
import paracat.coxeter as cx
import paracat.permutations as pm
import paracat.subword as sw
import paracat.tamari as tm


def test_facets_tiny_examples():
    a1 = cx.coxeter_system("A", 1)
    spec = sw.SubwordComplexSpec(a1, (0, 0, 0), cx.element_from_word(a1, (0,)))
    assert sw.facets(spec) == [frozenset({1, 2}), frozenset({1, 3}), frozenset({2, 3})]
    a2 = cx.coxeter_system("A", 2)
    w0 = cx.longest_element(a2)
    spec = sw.SubwordComplexSpec(a2, (0, 1, 0, 1, 0), w0)
    assert len(sw.facets(spec)) == 5
    exact = sw.SubwordComplexSpec(a2, (0, 1, 0), w0)
    assert sw.facets(exact) == [frozenset()]
    with pytest.raises(cx.CoxeterError):
        sw.SubwordComplexSpec(a2, (0, 1), w0)


def test_facets_are_reduced_occurrences_and_pure():
    a3 = cx.coxeter_system("A", 3)
    spec = sw.cluster_complex(a3, (1,), (0, 1, 2))
    all_facets = sw.facets(spec)
    size = len(spec.q_word) - spec.target.length
    for facet in all_facets:
        assert len(facet) == size
        assert sw.facet_is_reduced_occurrence(spec, facet)


def test_cluster_complex_counts():
    a4 = cx.coxeter_system("A", 4)
    for _, word in cx.coxeter_elements(a4):
        assert len(sw.facets(sw.cluster_complex(a4, (), word))) == 42
    a3 = cx.coxeter_system("A", 3)
    assert len(sw.facets(sw.cluster_complex(a3, (1,), (0, 1, 2)))) == 10
    h3 = cx.coxeter_system("H", 3)
    assert len(sw.facets(sw.cluster_complex(h3, (2,), (0, 1, 2)))) == 25


def test_flips():
    a2 = cx.coxeter_system("A", 2)
    spec = sw.cluster_complex(a2, (), (0, 1))
    all_facets = sw.facets(spec)
    for facet in all_facets:
        neighbours = sw.flips(spec, facet, all_facets)
        assert len(neighbours) == 2  # rank-two complex: a pentagon
        for out_pos, in_pos, other in neighbours:
            assert facet - other == {out_pos} and other - facet == {in_pos}
    single = sw.SubwordComplexSpec(a2, (0, 1, 0), cx.longest_element(a2))
    assert sw.flips(single, frozenset()) == []
    with pytest.raises(cx.CoxeterError):
        sw.flips(spec, frozenset({99}), all_facets)


def test_flip_poset_is_tamari():
    a2 = cx.coxeter_system("A", 2)
    pentagon = sw.flip_poset(sw.cluster_complex(a2, (), (0, 1)))
    t3 = tm.tamari_lattice(pm.j_context(3, set()))
    assert pentagon.is_isomorphic(t3)
    a3 = cx.coxeter_system("A", 3)
    fp = sw.flip_poset(sw.cluster_complex(a3, (1,), (0, 1, 2)))
    t4 = tm.tamari_lattice(pm.j_context(4, {2}))
    assert fp.is_isomorphic(t4)


def test_flip_poset_matches_aligned_poset_small():
    """Weak order on aligned elements versus the flip order, instance by
    instance over every Coxeter word of the verifiable systems."""
    import itertools

    for fam, rank in [("A", 3), ("A", 4), ("B", 3), ("H", 3)]:
        sys = cx.coxeter_system(fam, rank)
        for k in range(sys.n + 1):
            for j0 in itertools.combinations(range(sys.n), k):
                for _, word in cx.coxeter_elements(sys):
                    ctx = al.parabolic_context(sys, j0, word)
                    interval = cx.weak_interval(sys, ctx.base.word)
                    aligned = al._aligned_filter(ctx, interval)
                    poset = al.weak_order_poset(sys, aligned, interval)
                    flips = sw.flip_poset(sw.cluster_complex(sys, j0, word))
                    assert flips.is_isomorphic(poset)


def test_w_from_shape_examples():
    assert sw.w_from_shape((), 4) == (1, 2, 3, 4)
    assert sw.w_from_shape((3, 1, 1), 4) == (4, 2, 3, 1)
    assert sw.w_from_shape((3, 2, 1), 4) == (4, 3, 2, 1)
    with pytest.raises(ValueError):
        sw.w_from_shape((4, 1), 4)


def test_w_from_shape_is_quotient_longest():
    import itertools

    import paracat.partitions as pt

    for n in range(2, 8):
        for k in range(n):
            for j1 in itertools.combinations(range(1, n), k):
                ctx = pm.j_context(n, j1)
                shape = pt.bounding_shape(ctx)
                assert sw.w_from_shape(shape, n) == pm.quotient_longest(ctx)
