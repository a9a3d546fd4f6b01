"""Finite posets backed by bitmask up-sets.

A poset is stored as a tuple of opaque element labels together with one
integer bitmask per element recording its up-set (itself included).
Bitmasks keep the hot operations -- comparability tests, meets, ideal
counting -- at word speed, which is enough for the few-thousand-element
posets this library works with.

Constructors either take an explicit comparison predicate
(``FinitePoset.from_relation``) or a cover/edge list
(``FinitePoset.from_covers``).  Both verify the partial-order axioms and
report a witness on failure instead of silently producing garbage.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Iterator, Sequence


class PosetError(ValueError):
    """Raised when input data violates a poset precondition; carries a witness."""


@dataclass(frozen=True)
class LatticeFailure:
    """Witness for a failed lattice check.

    ``kind`` is ``"meet"`` or ``"join"``; ``bounds`` holds the maximal lower
    bounds (resp. minimal upper bounds) of the offending pair.
    """

    kind: str
    pair: tuple[Hashable, Hashable]
    bounds: tuple[Hashable, ...]


class FinitePoset:
    __slots__ = ("labels", "index", "up", "down", "_covers")

    def __init__(self, labels: Sequence[Hashable], up: Sequence[int]):
        self.labels = tuple(labels)
        self.index = {x: i for i, x in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise PosetError("duplicate labels")
        self.up = tuple(up)
        n = len(self.labels)
        down = [0] * n
        for i in range(n):
            m = self.up[i]
            while m:
                low = m & -m
                down[low.bit_length() - 1] |= 1 << i
                m ^= low
        self.down = tuple(down)
        self._covers = None

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def from_relation(cls, elements: Sequence[Hashable],
                      leq: Callable[[Hashable, Hashable], bool]) -> "FinitePoset":
        """Build a poset from a comparison predicate, verifying the axioms."""
        elements = tuple(elements)
        n = len(elements)
        up = [0] * n
        for i, x in enumerate(elements):
            for j, y in enumerate(elements):
                if leq(x, y):
                    up[i] |= 1 << j
        for i in range(n):
            if not up[i] >> i & 1:
                raise PosetError(f"relation not reflexive at {elements[i]!r}")
        p = cls(elements, up)
        for i in range(n):
            m = up[i] & ~(1 << i)
            while m:
                low = m & -m
                j = low.bit_length() - 1
                m ^= low
                if up[j] >> i & 1:
                    raise PosetError(
                        f"relation not antisymmetric on {elements[i]!r}, {elements[j]!r}")
                if up[j] & ~up[i]:
                    k = (up[j] & ~up[i]).bit_length() - 1
                    raise PosetError(
                        "relation not transitive: "
                        f"{elements[i]!r} <= {elements[j]!r} <= {elements[k]!r}")
        return p

    @classmethod
    def from_covers(cls, elements: Sequence[Hashable],
                    covers: Iterable[tuple[Hashable, Hashable]]) -> "FinitePoset":
        """Build the reflexive-transitive closure of an acyclic edge list a < b."""
        elements = tuple(elements)
        index = {x: i for i, x in enumerate(elements)}
        n = len(elements)
        succ = [0] * n
        for a, b in covers:
            succ[index[a]] |= 1 << index[b]
        order = _topological_order(succ)
        if order is None:
            raise PosetError("cover relation contains a cycle")
        up = [0] * n
        for i in reversed(order):
            m = 1 << i
            s = succ[i]
            while s:
                low = s & -s
                m |= up[low.bit_length() - 1]
                s ^= low
            up[i] = m
        return cls(elements, up)

    @classmethod
    def from_cover_lines(cls, text: str) -> "FinitePoset":
        """Parse the plain-text format of :meth:`cover_lines` (one ``a<b`` per line)."""
        pairs = []
        seen: dict[str, None] = {}
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "<" not in line:
                raise PosetError(f"bad cover line {line!r}")
            a, b = (part.strip() for part in line.split("<", 1))
            seen.setdefault(a)
            seen.setdefault(b)
            pairs.append((a, b))
        return cls.from_covers(tuple(seen), pairs)

    # ------------------------------------------------------------------
    # basic queries

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, x: Hashable) -> bool:
        return x in self.index

    def leq(self, x: Hashable, y: Hashable) -> bool:
        return bool(self.up[self.index[x]] >> self.index[y] & 1)

    def covers(self) -> tuple[tuple[Hashable, Hashable], ...]:
        """The Hasse diagram: pairs (a, b) with a covered by b."""
        if self._covers is None:
            out = []
            for i in range(len(self.labels)):
                m = self.up[i] & ~(1 << i)
                while m:
                    low = m & -m
                    j = low.bit_length() - 1
                    m ^= low
                    if self.up[i] & self.down[j] == (1 << i) | (1 << j):
                        out.append((self.labels[i], self.labels[j]))
            self._covers = tuple(out)
        return self._covers

    def minimal_elements(self) -> tuple[Hashable, ...]:
        return tuple(x for i, x in enumerate(self.labels)
                     if self.down[i] == 1 << i)

    def maximal_elements(self) -> tuple[Hashable, ...]:
        return tuple(x for i, x in enumerate(self.labels)
                     if self.up[i] == 1 << i)

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.labels, self.down)

    def subposet(self, keep: Iterable[Hashable]) -> "FinitePoset":
        keep = tuple(keep)
        mask = 0
        for x in keep:
            mask |= 1 << self.index[x]
        up = [self.up[self.index[x]] & mask for x in keep]
        # re-pack the masks onto the new index set
        old_new = {self.index[x]: i for i, x in enumerate(keep)}
        packed = []
        for m in up:
            q = 0
            while m:
                low = m & -m
                q |= 1 << old_new[low.bit_length() - 1]
                m ^= low
            packed.append(q)
        return FinitePoset(keep, packed)

    def filter_generated_by(self, gens: Iterable[Hashable]) -> "FinitePoset":
        """Induced subposet on everything above one of the generators."""
        mask = 0
        for g in gens:
            mask |= self.up[self.index[g]]
        return self.subposet(self._unpack(mask))

    def _unpack(self, mask: int) -> tuple[Hashable, ...]:
        out = []
        while mask:
            low = mask & -mask
            out.append(self.labels[low.bit_length() - 1])
            mask ^= low
        return tuple(out)

    # ------------------------------------------------------------------
    # meets, joins, lattice test

    def _bound_candidates(self, i: int, j: int, lower: bool) -> tuple[int, list[int]]:
        sets = self.down if lower else self.up
        common = sets[i] & sets[j]
        extremal = []
        m = common
        while m:
            low = m & -m
            k = low.bit_length() - 1
            m ^= low
            ext = self.up[k] if lower else self.down[k]
            if ext & common == 1 << k:
                extremal.append(k)
        return common, extremal

    def maximal_lower_bounds(self, x: Hashable, y: Hashable) -> tuple[Hashable, ...]:
        _, ext = self._bound_candidates(self.index[x], self.index[y], lower=True)
        return tuple(self.labels[k] for k in ext)

    def minimal_upper_bounds(self, x: Hashable, y: Hashable) -> tuple[Hashable, ...]:
        _, ext = self._bound_candidates(self.index[x], self.index[y], lower=False)
        return tuple(self.labels[k] for k in ext)

    def meet(self, x: Hashable, y: Hashable) -> Hashable:
        bounds = self.maximal_lower_bounds(x, y)
        if len(bounds) != 1:
            raise PosetError(f"no unique meet of {x!r} and {y!r}: bounds {bounds!r}")
        return bounds[0]

    def join(self, x: Hashable, y: Hashable) -> Hashable:
        bounds = self.minimal_upper_bounds(x, y)
        if len(bounds) != 1:
            raise PosetError(f"no unique join of {x!r} and {y!r}: bounds {bounds!r}")
        return bounds[0]

    def is_lattice(self) -> LatticeFailure | None:
        """Return None if every pair has a meet and a join, else a witness."""
        n = len(self.labels)
        for i in range(n):
            for j in range(i + 1, n):
                if self.up[i] >> j & 1 or self.up[j] >> i & 1:
                    continue
                for lower, kind in ((True, "meet"), (False, "join")):
                    _, ext = self._bound_candidates(i, j, lower)
                    if len(ext) != 1:
                        return LatticeFailure(
                            kind, (self.labels[i], self.labels[j]),
                            tuple(self.labels[k] for k in ext))
        return None

    # ------------------------------------------------------------------
    # order ideals

    def _pick_maximal(self, mask: int) -> int:
        m = mask
        while m:
            k = m.bit_length() - 1
            if self.up[k] & mask == 1 << k:
                return k
            m &= ~(1 << k)
        raise AssertionError("nonempty mask has a maximal element")

    def count_ideals(self) -> int:
        """Number of down-closed subsets, by splitting on a maximal element."""
        full = (1 << len(self.labels)) - 1
        memo: dict[int, int] = {0: 1}

        def count(mask: int) -> int:
            got = memo.get(mask)
            if got is not None:
                return got
            k = self._pick_maximal(mask)
            # ideals avoiding k, plus ideals containing all of down(k)
            res = count(mask & ~(1 << k)) + count(mask & ~self.down[k])
            memo[mask] = res
            return res

        return count(full)

    def ideals(self) -> Iterator[frozenset]:
        """Yield every order ideal as a frozenset of labels."""
        full = (1 << len(self.labels)) - 1

        def gen(mask: int) -> Iterator[int]:
            if not mask:
                yield 0
                return
            k = self._pick_maximal(mask)
            yield from gen(mask & ~(1 << k))
            fixed = self.down[k] & mask
            for rest in gen(mask & ~self.down[k]):
                yield rest | fixed

        for m in gen(full):
            yield frozenset(self._unpack(m))

    def is_ideal(self, subset: Iterable[Hashable]) -> bool:
        mask = 0
        for x in subset:
            mask |= 1 << self.index[x]
        m = mask
        while m:
            low = m & -m
            if self.down[low.bit_length() - 1] & ~mask:
                return False
            m ^= low
        return True

    def minimal_elements_of_complement(self, ideal: Iterable[Hashable]) -> tuple[Hashable, ...]:
        mask = 0
        for x in ideal:
            mask |= 1 << self.index[x]
        comp = ((1 << len(self.labels)) - 1) & ~mask
        out = []
        m = comp
        while m:
            low = m & -m
            k = low.bit_length() - 1
            m ^= low
            if self.down[k] & comp == 1 << k:
                out.append(self.labels[k])
        return tuple(out)

    # ------------------------------------------------------------------
    # congruence quotients

    def quotient(self, classes: Sequence[Iterable[Hashable]]) -> "FinitePoset":
        """Poset on congruence classes.

        Verifies that the classes partition the ground set, that each class
        is an interval, that the bottom/top projections are order-preserving,
        and that the induced relation on classes is a partial order.
        """
        n = len(self.labels)
        cls_masks = []
        seen = 0
        for c in classes:
            m = 0
            for x in c:
                b = 1 << self.index[x]
                if seen & b:
                    raise PosetError(f"element {x!r} appears in two classes")
                seen |= b
                m |= b
            if not m:
                raise PosetError("empty congruence class")
            cls_masks.append(m)
        if seen != (1 << n) - 1:
            raise PosetError("classes do not cover the poset")

        bottoms, tops = [], []
        for m in cls_masks:
            lo = [k for k in _bits(m) if self.down[k] & m == 1 << k]
            hi = [k for k in _bits(m) if self.up[k] & m == 1 << k]
            if len(lo) != 1 or len(hi) != 1:
                raise PosetError(
                    f"class {self._unpack(m)!r} is not bounded")
            interval = self.up[lo[0]] & self.down[hi[0]]
            if interval != m:
                raise PosetError(
                    f"class {self._unpack(m)!r} is not an interval")
            bottoms.append(lo[0])
            tops.append(hi[0])

        cls_of = {}
        for ci, m in enumerate(cls_masks):
            for k in _bits(m):
                cls_of[k] = ci
        for a, b in self.covers():
            i, j = self.index[a], self.index[b]
            ci, cj = cls_of[i], cls_of[j]
            if not self.up[bottoms[ci]] >> bottoms[cj] & 1:
                raise PosetError(f"bottom projection not order-preserving at {a!r} < {b!r}")
            if not self.up[tops[ci]] >> tops[cj] & 1:
                raise PosetError(f"top projection not order-preserving at {a!r} < {b!r}")

        k = len(cls_masks)
        succ = [0] * k
        for i in range(n):
            m = self.up[i]
            for j in _bits(m):
                if cls_of[i] != cls_of[j]:
                    succ[cls_of[i]] |= 1 << cls_of[j]
        order = _topological_order(succ)
        if order is None:
            raise PosetError("induced class relation is not antisymmetric")
        up = [0] * k
        for i in reversed(order):
            m = 1 << i
            s = succ[i]
            for j in _bits(s):
                m |= up[j]
            up[i] = m
        labels = tuple(frozenset(self._unpack(m)) for m in cls_masks)
        return FinitePoset(labels, up)

    # ------------------------------------------------------------------
    # isomorphism

    def is_isomorphic(self, other: "FinitePoset") -> bool:
        """Exact isomorphism test: colour refinement plus backtracking."""
        n = len(self.labels)
        if n != len(other.labels):
            return False

        def refine(p: "FinitePoset") -> list[int]:
            cov_up: list[list[int]] = [[] for _ in range(len(p.labels))]
            cov_dn: list[list[int]] = [[] for _ in range(len(p.labels))]
            for a, b in p.covers():
                cov_up[p.index[a]].append(p.index[b])
                cov_dn[p.index[b]].append(p.index[a])
            col = [(len(cov_up[i]), len(cov_dn[i])) for i in range(len(p.labels))]
            for _ in range(len(p.labels)):
                sig = [
                    (col[i], tuple(sorted(col[j] for j in cov_up[i])),
                     tuple(sorted(col[j] for j in cov_dn[i])))
                    for i in range(len(p.labels))
                ]
                palette = {s: t for t, s in enumerate(sorted(set(sig)))}
                new = [palette[s] for s in sig]
                if new == col:
                    break
                col = new
            return col

        col_a, col_b = refine(self), refine(other)
        if sorted(col_a) != sorted(col_b):
            return False
        # backtracking over colour-compatible assignments, most constrained first
        by_colour: dict[int, list[int]] = {}
        for j, c in enumerate(col_b):
            by_colour.setdefault(c, []).append(j)
        order = sorted(range(n), key=lambda i: (len(by_colour[col_a[i]]), i))
        assign = [-1] * n
        used = [False] * n

        def ok(i: int, j: int) -> bool:
            for i2 in order:
                j2 = assign[i2]
                if j2 < 0:
                    continue
                if (self.up[i] >> i2 & 1) != (other.up[j] >> j2 & 1):
                    return False
                if (self.up[i2] >> i & 1) != (other.up[j2] >> j & 1):
                    return False
            return True

        def search(k: int) -> bool:
            if k == n:
                return True
            i = order[k]
            for j in by_colour[col_a[i]]:
                if not used[j] and ok(i, j):
                    used[j] = True
                    assign[i] = j
                    if search(k + 1):
                        return True
                    used[j] = False
                    assign[i] = -1
            return False

        return search(0)

    # ------------------------------------------------------------------
    # output formats

    def to_dot(self, name: str = "poset",
               label: Callable[[Hashable], str] = str,
               fill: Callable[[Hashable], str | None] | None = None) -> str:
        """Graphviz source for the Hasse diagram, drawn bottom to top."""
        lines = [f"digraph {name} {{", "  rankdir=BT;",
                 '  node [shape=box, fontname="monospace"];']
        for i, x in enumerate(self.labels):
            attrs = [f'label="{label(x)}"']
            colour = fill(x) if fill is not None else None
            if colour:
                attrs.append(f'style=filled, fillcolor="{colour}"')
            lines.append(f'  n{i} [{", ".join(attrs)}];')
        for a, b in self.covers():
            lines.append(f"  n{self.index[a]} -> n{self.index[b]} [arrowhead=none];")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def cover_lines(self, label: Callable[[Hashable], str] = str) -> str:
        return "".join(f"{label(a)}<{label(b)}\n" for a, b in self.covers())


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _topological_order(succ: Sequence[int]) -> list[int] | None:
    n = len(succ)
    indeg = [0] * n
    for m in succ:
        for j in _bits(m):
            indeg[j] += 1
    queue = [i for i in range(n) if indeg[i] == 0]
    out = []
    while queue:
        i = queue.pop()
        out.append(i)
        for j in _bits(succ[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                queue.append(j)
    return out if len(out) == n else None
