"""Subword complexes: reduced occurrences of a target inside a fixed word,
their flips, and the flip poset.

A facet is the complement of a reduced occurrence, stored as a frozenset of
1-based positions into Q.  Enumeration scans Q left to right, keeping the
part of the target still to be spelled; a letter may be consumed exactly
when it is a left descent of that remainder.  Skipping is pruned by the
maximal length the remaining suffix can reach (its iterated Demazure
product) and by a memoized feasibility test keyed on (position, remainder),
so dead subtrees are entered at most once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coxeter import (
    CoxeterError,
    GroupElement,
    c_sorting_word,
    element_from_word,
    longest_element,
    quotient_min_rep,
)
from .permutations import Perm, identity
from .posets import FinitePoset


@dataclass
class SubwordComplexSpec:
    system: object
    q_word: tuple[int, ...]
    target: GroupElement

    def __post_init__(self):
        if self.target.length > len(self.q_word):
            raise CoxeterError("target is longer than the ambient word")


def cluster_complex(sys, j_set, c_word: Sequence[int]) -> SubwordComplexSpec:
    """Ambient word: c_word followed by the sorting word of the longest
    element; target: the longest quotient representative."""
    c_word = tuple(c_word)
    w0 = longest_element(sys)
    q_word = c_word + c_sorting_word(sys, w0, c_word)
    target = quotient_min_rep(sys, w0, j_set)
    return SubwordComplexSpec(sys, q_word, target)


def facets(spec: SubwordComplexSpec) -> list[frozenset[int]]:
    """All facets, ordered by their sorted position tuples."""
    sys = spec.system
    q = spec.q_word
    n_q = len(q)

    # maxreach[p]: length of the Demazure product of q[p:]
    maxreach = [0] * (n_q + 1)
    dem_inv = sys.identity_mat
    dem_len = 0
    for p in range(n_q - 1, -1, -1):
        s = q[p]
        # left Demazure step: s * v if that is longer, else v
        if sys.root_sign(sys.act_simple(dem_inv, s)) > 0:
            dem_inv = sys.mul(dem_inv, sys.gens[s])
            dem_len += 1
        maxreach[p] = dem_len

    feasible: dict[tuple[int, object], bool] = {}

    def can_finish(p: int, rem_inv, rem_len: int) -> bool:
        if rem_len == 0:
            return True
        if rem_len > maxreach[p]:
            return False
        key = (p, rem_inv)
        got = feasible.get(key)
        if got is not None:
            return got
        s = q[p]
        ok = False
        if sys.root_sign(sys.act_simple(rem_inv, s)) < 0:
            ok = can_finish(p + 1, sys.mul(rem_inv, sys.gens[s]), rem_len - 1)
        if not ok:
            ok = can_finish(p + 1, rem_inv, rem_len)
        feasible[key] = ok
        return ok

    out: list[frozenset[int]] = []
    skipped: list[int] = []

    def walk(p: int, rem_inv, rem_len: int) -> None:
        if rem_len == 0:
            out.append(frozenset(skipped + list(range(p + 1, n_q + 1))))
            return
        if rem_len > maxreach[p]:
            return
        s = q[p]
        if sys.root_sign(sys.act_simple(rem_inv, s)) < 0:
            nxt = sys.mul(rem_inv, sys.gens[s])
            if can_finish(p + 1, nxt, rem_len - 1):
                walk(p + 1, nxt, rem_len - 1)
        if can_finish(p + 1, rem_inv, rem_len):
            skipped.append(p + 1)
            walk(p + 1, rem_inv, rem_len)
            skipped.pop()

    walk(0, spec.target.inv_mat, spec.target.length)
    return sorted(out, key=sorted)


def facet_witness(spec: SubwordComplexSpec, facet: frozenset[int]) -> tuple[int, ...]:
    """The complementary word (the reduced occurrence of the target)."""
    return tuple(spec.q_word[p - 1] for p in range(1, len(spec.q_word) + 1)
                 if p not in facet)


def flips(spec: SubwordComplexSpec, facet: frozenset[int],
          all_facets: Sequence[frozenset[int]] | None = None) -> list[tuple[int, int, frozenset[int]]]:
    """Neighbours of a facet: triples (position out, position in, facet).

    The move counts as a flip out of ``facet`` when the leaving position is
    smaller than the entering one.
    """
    universe = facets(spec) if all_facets is None else all_facets
    if facet not in set(universe):
        raise CoxeterError("not a facet of this complex")
    out = []
    for other in universe:
        gone = facet - other
        came = other - facet
        if len(gone) == 1 and len(came) == 1:
            out.append((next(iter(gone)), next(iter(came)), other))
    return sorted(out)


def flip_poset(spec: SubwordComplexSpec) -> FinitePoset:
    """Transitive closure of the directed flips (smaller position leaves)."""
    all_facets = facets(spec)
    edges = []
    for f in all_facets:
        for i, j, g in flips(spec, f, all_facets):
            if i < j:
                edges.append((f, g))
    return FinitePoset.from_covers(all_facets, edges)


def w_from_shape(shape: Sequence[int], n: int) -> Perm:
    """The dominant permutation attached to a Ferrers shape.

    Reading the shape as a staircase of adjacent-transposition runs gives a
    permutation whose inversions at each position count the cells in the
    corresponding *column*; so the one-line notation decodes the conjugate
    shape as a Lehmer code.  The shape must fit inside the staircase
    (n-1, n-2, ...), otherwise a run index leaves the generator range.

    >>> w_from_shape((3, 1, 1), 4)
    (4, 2, 3, 1)
    >>> w_from_shape((1, 1, 1), 4)
    (4, 1, 2, 3)
    """
    shape = tuple(shape)
    if any(a < b for a, b in zip(shape, shape[1:])) or any(r <= 0 for r in shape):
        raise ValueError("shape rows must be positive and weakly decreasing")
    width = shape[0] if shape else 0
    code = [sum(1 for row in shape if row > c) for c in range(width)]
    code += [0] * (n - len(code))
    if len(code) > n:
        raise ValueError(f"shape does not fit inside the staircase for n={n}")
    remaining = list(identity(n))
    out = []
    for i, c in enumerate(code):
        if c >= len(remaining):
            raise ValueError(f"shape does not fit: column {i + 1} is too tall")
        out.append(remaining.pop(c))
    return tuple(out)


def facet_is_reduced_occurrence(spec: SubwordComplexSpec, facet: frozenset[int]) -> bool:
    word = facet_witness(spec, facet)
    elt = element_from_word(spec.system, word)
    return elt.length == len(word) and elt.mat == spec.target.mat
