"""Symmetric group basics: one-line permutations, inversion sets, left weak
order, and parabolic quotients.

Permutations are plain tuples of the values 1..n in one-line notation.
Inversion sets are sets of *position* pairs (i, j) with i < j and w_i > w_j;
for fast containment tests they are also exposed as bitmasks indexed by the
lexicographic rank of (i, j).  The left weak order is containment of
inversion sets, with covers given by swapping two positions that carry
consecutive values forming an inversion.

A parabolic quotient is described by a :class:`JContext`: the chosen subset
of adjacent-transposition indices splits [n] into maximal runs (regions),
and the quotient consists of the permutations that increase within every
region.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]


def check_perm(w: Sequence[int]) -> Perm:
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w!r} is not a permutation of 1..{len(w)}")
    return w


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def perm_inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v - 1] = i + 1
    return tuple(inv)


def perm_mul(u: Perm, v: Perm) -> Perm:
    """(u v)(i) = u(v(i))."""
    return tuple(u[x - 1] for x in v)


def pair_rank(i: int, j: int, n: int) -> int:
    """Rank of the pair (i, j), 1 <= i < j <= n, in lexicographic order.

    >>> [pair_rank(i, j, 4) for i, j in [(1, 2), (1, 4), (2, 3), (3, 4)]]
    [0, 2, 3, 5]
    """
    return (i - 1) * (2 * n - i) // 2 + (j - i - 1)


def inversion_pairs(w: Perm) -> frozenset[tuple[int, int]]:
    n = len(w)
    return frozenset((i + 1, j + 1)
                     for i in range(n) for j in range(i + 1, n)
                     if w[i] > w[j])


def inversion_mask(w: Perm) -> int:
    n = len(w)
    mask = 0
    rank = 0
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] > w[j]:
                mask |= 1 << rank
            rank += 1
    return mask


def weak_leq(u: Perm, v: Perm) -> bool:
    """u <= v in left weak order, i.e. inv(u) is contained in inv(v)."""
    if len(u) != len(v):
        raise ValueError("permutations of different sizes are incomparable")
    mu = inversion_mask(u)
    return mu & inversion_mask(v) == mu


def descent_pairs(w: Perm) -> frozenset[tuple[int, int]]:
    """The inversions (i, j) whose values are consecutive: w_i = w_j + 1."""
    pos = [0] * (len(w) + 2)
    for i, v in enumerate(w):
        pos[v] = i + 1
    out = []
    for v in range(1, len(w)):
        i, j = pos[v + 1], pos[v]
        if i < j:
            out.append((i, j))
    return frozenset(out)


def lower_covers(w: Perm) -> set[Perm]:
    out = set()
    for i, j in descent_pairs(w):
        u = list(w)
        u[i - 1], u[j - 1] = u[j - 1], u[i - 1]
        out.add(tuple(u))
    return out


def upper_covers(w: Perm) -> set[Perm]:
    pos = [0] * (len(w) + 2)
    for i, v in enumerate(w):
        pos[v] = i + 1
    out = set()
    for v in range(1, len(w)):
        i, j = pos[v], pos[v + 1]
        if i < j:
            u = list(w)
            u[i - 1], u[j - 1] = u[j - 1], u[i - 1]
            out.add(tuple(u))
    return out


def weak_meet(u: Perm, v: Perm) -> Perm:
    """Greatest lower bound of u and v in the left weak order.

    Walks up from the identity through covers that stay below both inputs;
    the reachable set is exactly the interval below the meet, whose unique
    longest element is the answer.
    """
    if len(u) != len(v):
        raise ValueError("size mismatch")
    common = inversion_mask(u) & inversion_mask(v)
    n = len(u)
    start = identity(n)
    best = [start]
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            pos = [0] * (n + 2)
            for i, val in enumerate(x):
                pos[val] = i + 1
            for val in range(1, n):
                i, j = pos[val], pos[val + 1]
                if i < j and common >> pair_rank(i, j, n) & 1:
                    y = list(x)
                    y[i - 1], y[j - 1] = y[j - 1], y[i - 1]
                    y = tuple(y)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
        if nxt:
            best = nxt
        frontier = nxt
    # the reachable set is the interval below the meet, so the last BFS
    # level must be a single longest element
    assert len(best) == 1
    return best[0]


# ----------------------------------------------------------------------
# parabolic quotients


@dataclass(frozen=True)
class JContext:
    """A subset J of the adjacent transpositions s_1..s_{n-1} and the region
    structure it induces: [n] splits after every index *not* in J."""

    n: int
    j_set: frozenset[int]
    regions: tuple[tuple[int, ...], ...] = field(init=False)
    region_of: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if not all(1 <= s <= self.n - 1 for s in self.j_set):
            raise ValueError(f"J must lie in 1..{self.n - 1}")
        regions = []
        block = [1]
        for i in range(1, self.n):
            if i in self.j_set:
                block.append(i + 1)
            else:
                regions.append(tuple(block))
                block = [i + 1]
        regions.append(tuple(block))
        region_of = [0] * (self.n + 1)
        for r, block in enumerate(regions):
            for x in block:
                region_of[x] = r
        object.__setattr__(self, "regions", tuple(regions))
        object.__setattr__(self, "region_of", tuple(region_of))

    @property
    def boundaries(self) -> tuple[int, ...]:
        """The indices k with s_k not in J, in increasing order."""
        return tuple(k for k in range(1, self.n) if k not in self.j_set)


def j_context(n: int, j_set: Iterable[int]) -> JContext:
    return JContext(n, frozenset(j_set))


def is_quotient_member(w: Perm, ctx: JContext) -> bool:
    """True iff w increases within every region of ctx."""
    return all(w[i - 1] < w[i] for i in ctx.j_set)


def require_quotient_member(w: Perm, ctx: JContext) -> None:
    if not is_quotient_member(w, ctx):
        raise ValueError(f"{w!r} is not in the parabolic quotient for J={sorted(ctx.j_set)}")


def enumerate_quotient(ctx: JContext) -> list[Perm]:
    """All quotient members, in lexicographic one-line order.

    Generated region by region: choose which values land in each region and
    sort them, so the output order is deterministic without a final sort.
    """
    sizes = [len(r) for r in ctx.regions]

    def rec(remaining: tuple[int, ...], level: int) -> Iterator[tuple[int, ...]]:
        if level == len(sizes):
            yield ()
            return
        for chosen in itertools.combinations(remaining, sizes[level]):
            rest = tuple(x for x in remaining if x not in chosen)
            for tail in rec(rest, level + 1):
                yield chosen + tail

    return [w for w in rec(tuple(range(1, ctx.n + 1)), 0)]


def quotient_longest(ctx: JContext) -> Perm:
    """The maximum of the quotient: sort the reversed identity inside regions."""
    w0 = tuple(range(ctx.n, 0, -1))
    out = []
    start = 0
    for block in ctx.regions:
        out.extend(sorted(w0[start:start + len(block)]))
        start += len(block)
    return tuple(out)


def quotient_size(ctx: JContext) -> int:
    """Multinomial n! / prod |region|!."""
    import math

    size = math.factorial(ctx.n)
    for block in ctx.regions:
        size //= math.factorial(len(block))
    return size


def one_line(w: Perm, ctx: JContext | None = None) -> str:
    """Render one-line notation, with region bars when a context is given.

    >>> one_line((4, 2, 3, 1), j_context(4, {2}))
    '4|23|1'
    """
    if ctx is None:
        return "".join(str(v) for v in w) if len(w) < 10 else " ".join(map(str, w))
    sep = "" if len(w) < 10 else " "
    blocks = []
    for block in ctx.regions:
        blocks.append(sep.join(str(w[i - 1]) for i in block))
    return "|".join(blocks)


def parse_one_line(text: str) -> Perm:
    """Parse '4|23|1', '4 2 3 1' or '4231' into a permutation tuple.

    Bars are region decoration and are dropped; values are then read as
    whitespace/comma tokens if any separator is present, else digit by
    digit (so the bar form only works below n = 10).
    """
    cleaned = text.replace("|", "").replace(",", " ").strip()
    if any(ch.isspace() for ch in cleaned):
        vals = tuple(int(tok) for tok in cleaned.split())
    else:
        vals = tuple(int(ch) for ch in cleaned)
    return check_perm(vals)
