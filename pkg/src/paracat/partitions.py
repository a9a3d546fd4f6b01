"""Region-aware noncrossing and nonnesting set partitions of [n], the
bijections linking them to pattern-avoiding quotient permutations, and the
determinantal count of the nonnesting family.

Set partitions are kept in a canonical form: a tuple of parts, each part a
sorted tuple, parts sorted by their minimum.  A *bump* is a pair of
consecutive elements inside one part; bump sets determine the partition.

The noncrossing family is cut out by three conditions relative to the
region structure of a :class:`~paracat.permutations.JContext`:

  NC1  no part meets a region twice;
  NC2  two bumps (i1,i2), (j1,j2) with i1 < j1 < i2 < j2 need i1,j1 or
       i2,j1 in a common region;
  NC3  two bumps with i1 < j1 < j2 < i2 need i1,j1 in different regions.

The nonnesting family replaces NC2/NC3 by the absence of nested bumps, and
is the same thing as an order ideal in the parabolic root poset: the bumps
are the minimal non-members of the ideal.

The two families are connected by a recursion on the first region.  Bumps
opened in the first region are matched, in reverse, against the positions
that remain reachable once the rest of the partition is drawn; peeling the
first region off both sides turns an ideal into a noncrossing partition and
back.  The same recursion, run against the bump poset, converts a
noncrossing partition into the quotient permutation whose descents are
exactly its bumps.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

from .permutations import (
    JContext,
    Perm,
    descent_pairs,
)
from .posets import FinitePoset
from .tamari import is_j231_avoiding

Partition = tuple[tuple[int, ...], ...]
Pair = tuple[int, int]


def canonical_partition(parts: Iterable[Iterable[int]], n: int) -> Partition:
    cleaned = [tuple(sorted(p)) for p in parts if tuple(p)]
    cleaned.sort()
    flat = [x for p in cleaned for x in p]
    if sorted(flat) != list(range(1, n + 1)):
        raise ValueError(f"parts do not partition 1..{n}: {cleaned!r}")
    return tuple(cleaned)


def singletons(n: int) -> Partition:
    return tuple((i,) for i in range(1, n + 1))


def partition_from_bumps(bumps: Iterable[Pair], n: int) -> Partition:
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in bumps:
        parent[find(a)] = find(b)
    groups: dict[int, list[int]] = {}
    for x in range(1, n + 1):
        groups.setdefault(find(x), []).append(x)
    return canonical_partition(groups.values(), n)


def bumps(partition: Partition) -> frozenset[Pair]:
    """Pairs of consecutive elements within each part.

    >>> sorted(bumps(((1, 2, 3),)))
    [(1, 2), (2, 3)]
    """
    out = []
    for part in partition:
        out.extend(zip(part, part[1:]))
    return frozenset(out)


def all_partitions(n: int) -> Iterator[Partition]:
    """Every set partition of [n] (restricted-growth enumeration)."""

    def rec(x: int, parts: list[list[int]]) -> Iterator[Partition]:
        if x > n:
            yield tuple(tuple(p) for p in parts)
            return
        for p in parts:
            p.append(x)
            yield from rec(x + 1, parts)
            p.pop()
        parts.append([x])
        yield from rec(x + 1, parts)
        parts.pop()

    yield from rec(1, [])


# ----------------------------------------------------------------------
# the two predicates


def is_j_noncrossing(partition: Partition, ctx: JContext) -> bool:
    reg = ctx.region_of
    for part in partition:
        regions = [reg[x] for x in part]
        if len(set(regions)) != len(regions):
            return False
    bs = sorted(bumps(partition))
    for a in range(len(bs)):
        i1, i2 = bs[a]
        for b in range(len(bs)):
            if a == b:
                continue
            j1, j2 = bs[b]
            if i1 < j1 < i2 < j2:
                if reg[i1] != reg[j1] and reg[i2] != reg[j1]:
                    return False
            if i1 < j1 < j2 < i2:
                if reg[i1] == reg[j1]:
                    return False
    return True


def is_j_nonnesting(partition: Partition, ctx: JContext) -> bool:
    reg = ctx.region_of
    for part in partition:
        regions = [reg[x] for x in part]
        if len(set(regions)) != len(regions):
            return False
    bs = sorted(bumps(partition))
    for a in range(len(bs)):
        for b in range(len(bs)):
            if a != b:
                i1, i2 = bs[a]
                j1, j2 = bs[b]
                if i1 < j1 < j2 < i2:
                    return False
    return True


def is_noncrossing_classical(partition: Partition) -> bool:
    """Textbook noncrossing condition, for the empty-J cross-checks."""
    bs = sorted(bumps(partition))
    for a in range(len(bs)):
        for b in range(len(bs)):
            if a != b:
                i1, i2 = bs[a]
                j1, j2 = bs[b]
                if i1 < j1 < i2 < j2:
                    return False
    return True


def is_nonnesting_classical(partition: Partition) -> bool:
    bs = sorted(bumps(partition))
    for a in range(len(bs)):
        for b in range(len(bs)):
            if a != b:
                i1, i2 = bs[a]
                j1, j2 = bs[b]
                if i1 < j1 < j2 < i2:
                    return False
    return True


# ----------------------------------------------------------------------
# bump poset and the permutation bijection


def bump_poset(partition: Partition, ctx: JContext) -> FinitePoset:
    """Order on the parts of a noncrossing partition: a part lies below the
    parts whose minimum sits under one of its bumps.

    An element only counts as "under" a bump (i1, i2) when it does not share
    a region with the opener i1; in the arc diagram the bump is drawn below
    the rest of the opener's region, so those dots are not covered by it.
    """
    if not is_j_noncrossing(partition, ctx):
        raise ValueError("bump poset is defined for noncrossing partitions")
    reg = ctx.region_of
    edges = []
    for part in partition:
        for i1, i2 in zip(part, part[1:]):
            for other in partition:
                if other is part:
                    continue
                m = other[0]
                if i1 < m < i2 and reg[m] != reg[i1]:
                    edges.append((part, other))
    return FinitePoset.from_covers(partition, edges)


def perm_to_nc(w: Perm, ctx: JContext) -> Partition:
    """Partition generated by the descents of an avoiding permutation."""
    if not is_j231_avoiding(w, ctx):
        raise ValueError("perm_to_nc expects a (J,231)-avoiding permutation")
    return partition_from_bumps(descent_pairs(w), ctx.n)


def nc_to_perm(partition: Partition, ctx: JContext) -> Perm:
    """The avoiding permutation whose descents are the bumps of ``partition``.

    Recursive construction: let P1 be the part containing the smallest
    ground element and X the ground elements of the bump-poset filter above
    P1.  P1's positions take the top |P1| values of 1..|X|, descending along
    the part; the rest of X recurses as the "left" subproblem with low
    values, the complement as the "right" subproblem offset by |X|.
    """
    if not is_j_noncrossing(partition, ctx):
        raise ValueError("nc_to_perm expects a noncrossing partition")
    poset = bump_poset(partition, ctx)
    values: dict[int, int] = {}

    def assign(parts: list[tuple[int, ...]], offset: int) -> None:
        if not parts:
            return
        ground = sorted(x for p in parts for x in p)
        first = min(ground)
        p1 = next(p for p in parts if first in p)
        above = poset.filter_generated_by([p1])
        filt = [p for p in parts if p in above.index]
        x_set = sorted(x for p in filt for x in p)
        size = len(x_set)
        for t, position in enumerate(p1):
            values[position] = offset + size - t
        left = [p for p in filt if p != p1]
        right = [p for p in parts if p not in above.index]
        assign(left, offset)
        assign(right, offset + size)

    assign(list(partition), 0)
    return tuple(values[i] for i in range(1, ctx.n + 1))


# ----------------------------------------------------------------------
# the parabolic root poset of type A and the ideal correspondence


def _pair_leq(x: Pair, y: Pair) -> bool:
    return x[0] >= y[0] and x[1] <= y[1]


def root_poset_pairs(ctx: JContext) -> list[Pair]:
    reg = ctx.region_of
    return [(i, j)
            for i in range(1, ctx.n + 1) for j in range(i + 1, ctx.n + 1)
            if reg[i] != reg[j]]


def parabolic_root_poset_A(ctx: JContext) -> FinitePoset:
    """Transpositions with endpoints in distinct regions, ordered by interval
    reversal: (i1, i2) <= (j1, j2) iff i1 >= j1 and i2 <= j2."""
    return FinitePoset.from_relation(root_poset_pairs(ctx), _pair_leq)


def ideal_to_nn(ideal: Iterable[Pair], ctx: JContext) -> Partition:
    """Nonnesting partition whose bumps are the minimal non-members of the
    ideal."""
    poset = parabolic_root_poset_A(ctx)
    ideal = frozenset(ideal)
    if not poset.is_ideal(ideal):
        raise ValueError("not a down-closed set of the parabolic root poset")
    mins = poset.minimal_elements_of_complement(ideal)
    return partition_from_bumps(mins, ctx.n)


def nn_to_ideal(partition: Partition, ctx: JContext) -> frozenset[Pair]:
    """Inverse of :func:`ideal_to_nn`: everything not above a bump."""
    if not is_j_nonnesting(partition, ctx):
        raise ValueError("nn_to_ideal expects a nonnesting partition")
    bump_set = bumps(partition)
    return frozenset(x for x in root_poset_pairs(ctx)
                     if not any(_pair_leq(b, x) for b in bump_set))


# ----------------------------------------------------------------------
# nonnesting <-> noncrossing, by recursion on the first region

def _region_blocks(ctx: JContext, ground_min: int) -> list[tuple[int, ...]]:
    return [tuple(x for x in block if x >= ground_min)
            for block in ctx.regions
            if block[-1] >= ground_min]


def _columns_and_endpoints(ideal_rest: set[Pair], partition_rest: list[tuple[int, ...]],
                           ctx: JContext, k1: int, k2: int, n: int) -> tuple[list[int], list[int]]:
    """The usable grid columns for bumps opened in the first region, and the
    positions such bumps may close at, both in increasing order.

    Columns in the second region are always usable; a later column j is
    usable exactly when the cell just below the first-region rows, (k1+1, j),
    belongs to the rest of the ideal.  Dually, any second-region position can
    take a bump, and a later position e can iff it is the minimum of its part
    and every bump (a, b) of the rest with a < e < b opens in e's region.
    """
    reg = ctx.region_of
    cols = list(range(k1 + 1, k2 + 1))
    for j in range(k2 + 1, n + 1):
        if (k1 + 1, j) in ideal_rest:
            cols.append(j)
    ends = list(range(k1 + 1, k2 + 1))
    part_of = {x: part for part in partition_rest for x in part}
    rest_bumps = [b for part in partition_rest for b in zip(part, part[1:])]
    for e in range(k2 + 1, n + 1):
        if part_of[e][0] != e:
            continue
        if all(reg[a] == reg[e] for a, b in rest_bumps if a < e < b):
            ends.append(e)
    return cols, ends


def _ideal_to_nc_bumps(ideal: frozenset[Pair], ctx: JContext, ground_min: int) -> list[Pair]:
    blocks = _region_blocks(ctx, ground_min)
    if len(blocks) <= 1:
        return []
    r1 = blocks[0]
    k1, k2 = r1[-1], blocks[1][-1]
    rest = {(a, b) for a, b in ideal if a > k1}
    mine = {(a, b) for a, b in ideal if a <= k1}
    rest_bumps = _ideal_to_nc_bumps(frozenset(rest), ctx, k1 + 1)
    partition_rest = _parts_from_bumps_sparse(rest_bumps, range(k1 + 1, ctx.n + 1))
    cols, ends = _columns_and_endpoints(rest, partition_rest, ctx, k1, k2, ctx.n)
    if len(cols) != len(ends):
        raise AssertionError("column/endpoint mismatch in the first-region step")
    grid = {(i, j) for i in r1 for j in cols}
    if not mine <= grid:
        raise ValueError("ideal touches an unusable column")
    complement = grid - mine
    minimal = [c for c in complement
               if not any(d != c and _pair_leq(d, c) for d in complement)]
    new = []
    for i, j in minimal:
        opener = r1[0] + k1 - i
        closer = ends[len(cols) - 1 - cols.index(j)]
        new.append((opener, closer))
    return rest_bumps + new


def _nc_to_ideal_pairs(partition: Partition, ctx: JContext, ground_min: int) -> frozenset[Pair]:
    blocks = _region_blocks(ctx, ground_min)
    if len(blocks) <= 1:
        return frozenset()
    r1 = blocks[0]
    k1, k2 = r1[-1], blocks[1][-1]
    first = set(r1)
    new_bumps = [b for b in bumps(partition) if b[0] in first and b[0] >= ground_min]
    rest_parts = [tuple(x for x in part if x > k1) for part in partition]
    rest_parts = [p for p in rest_parts if p]
    rest_bumps = [b for part in rest_parts for b in zip(part, part[1:])]
    rest = _nc_to_ideal_pairs(tuple(rest_parts), ctx, k1 + 1)
    cols, ends = _columns_and_endpoints(set(rest), rest_parts, ctx, k1, k2, ctx.n)
    if len(cols) != len(ends):
        raise AssertionError("column/endpoint mismatch in the first-region step")
    cells = []
    for opener, closer in new_bumps:
        if closer not in ends:
            raise ValueError(f"bump {(opener, closer)} closes at a blocked position")
        i = r1[0] + k1 - opener
        j = cols[len(cols) - 1 - ends.index(closer)]
        cells.append((i, j))
    grid = [(i, j) for i in r1 for j in cols]
    mine = {c for c in grid if not any(_pair_leq(cell, c) for cell in cells)}
    return frozenset(mine) | rest


def _parts_from_bumps_sparse(bump_list: Sequence[Pair], ground: Iterable[int]) -> list[tuple[int, ...]]:
    ground = list(ground)
    parent = {x: x for x in ground}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in bump_list:
        parent[find(a)] = find(b)
    groups: dict[int, list[int]] = {}
    for x in ground:
        groups.setdefault(find(x), []).append(x)
    return sorted(tuple(sorted(g)) for g in groups.values())


def nn_to_nc(partition: Partition, ctx: JContext) -> Partition:
    """Noncrossing partner of a nonnesting partition."""
    ideal = nn_to_ideal(partition, ctx)
    new = _ideal_to_nc_bumps(ideal, ctx, 1)
    return partition_from_bumps(new, ctx.n)


def nc_to_nn(partition: Partition, ctx: JContext) -> Partition:
    """Inverse of :func:`nn_to_nc`."""
    if not is_j_noncrossing(partition, ctx):
        raise ValueError("nc_to_nn expects a noncrossing partition")
    ideal = _nc_to_ideal_pairs(partition, ctx, 1)
    return ideal_to_nn(ideal, ctx)


# ----------------------------------------------------------------------
# bounding shape and the determinant count


def bounding_shape(ctx: JContext) -> tuple[int, ...]:
    """The parabolic root poset rotated into a Ferrers shape.

    With boundaries k_1 < ... < k_r the shape reads
    (k_r^(n-k_r), ..., k_1^(k_2-k_1)); no boundaries means the empty shape.
    """
    ks = ctx.boundaries
    if not ks:
        return ()
    rows: list[int] = []
    bounds = ks + (ctx.n,)
    for t in range(len(ks) - 1, -1, -1):
        rows.extend([ks[t]] * (bounds[t + 1] - ks[t]))
    return tuple(rows)


def check_shape(shape: Sequence[int]) -> tuple[int, ...]:
    shape = tuple(shape)
    if any(r <= 0 for r in shape):
        raise ValueError("shape rows must be positive")
    if any(a < b for a, b in zip(shape, shape[1:])):
        raise ValueError("shape rows must be weakly decreasing")
    return shape


def kreweras_count(shape: Sequence[int]) -> int:
    """Number of Ferrers shapes fitting inside ``shape``.

    Evaluates the k x k determinant with entries C(lambda_j + 1, j - i + 1)
    by fraction-free (Bareiss) elimination, so the arithmetic stays in the
    integers throughout.

    >>> kreweras_count((2, 1))
    5
    >>> kreweras_count(())
    1
    """
    shape = check_shape(shape)
    k = len(shape)
    if k == 0:
        return 1
    m = [[math.comb(shape[j] + 1, j - i + 1) if j - i + 1 >= 0 else 0
          for j in range(k)] for i in range(k)]
    sign = 1
    prev = 1
    for col in range(k - 1):
        if m[col][col] == 0:
            for r in range(col + 1, k):
                if m[r][col] != 0:
                    m[col], m[r] = m[r], m[col]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(col + 1, k):
            for c in range(col + 1, k):
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = m[col][col]
    return sign * m[k - 1][k - 1]


def subshapes(shape: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All Ferrers shapes fitting inside ``shape`` (brute-force oracle)."""
    shape = check_shape(shape)

    def rec(i: int, cap: int) -> Iterator[tuple[int, ...]]:
        if i == len(shape):
            yield ()
            return
        yield ()
        for row in range(1, min(cap, shape[i]) + 1):
            for rest in rec(i + 1, row):
                yield (row,) + rest

    seen = set()
    for s in rec(0, shape[0] if shape else 0):
        if s not in seen:
            seen.add(s)
            yield s
