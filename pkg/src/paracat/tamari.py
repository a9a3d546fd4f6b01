"""Pattern-avoiding permutations in parabolic quotients and the lattices they
form.

A quotient member w contains a region-231 pattern if three positions
i < j < k sit in pairwise different regions with w_k < w_i < w_j and
w_i = w_k + 1; the region-132 pattern is the mirror condition
w_i < w_k < w_j with w_k = w_i + 1.  Avoiding elements of the first kind,
ordered by the weak order, form a lattice which is moreover a quotient of
the weak order on the whole parabolic quotient: projecting w down along
pattern-destroying covers lands on the unique maximal avoiding element below
w, projecting up dually lands on the unique minimal 132-avoiding element
above, and the fibers of the downward projection are exactly the intervals
between the two projections.
"""

from __future__ import annotations

from dataclasses import dataclass

from .permutations import (
    JContext,
    Perm,
    descent_pairs,
    enumerate_quotient,
    inversion_mask,
    is_quotient_member,
    lower_covers,
    require_quotient_member,
    weak_leq,
    weak_meet,
)
from .posets import FinitePoset


def find_j231_pattern(w: Perm, ctx: JContext) -> tuple[int, int, int] | None:
    """A witnessing triple (i, j, k), or None.

    Among all patterns the one with lexicographically smallest (i, k) is
    returned, so the projection below is deterministic.
    """
    require_quotient_member(w, ctx)
    n = ctx.n
    reg = ctx.region_of
    pos = [0] * (n + 2)
    for i, v in enumerate(w):
        pos[v] = i + 1
    best = None
    for k in range(1, n + 1):
        i = pos[w[k - 1] + 1] if w[k - 1] + 1 <= n else 0
        if not i or i >= k or reg[i] == reg[k]:
            continue
        # w_i = w_k + 1 and (i, k) is an inversion; look for a middle witness
        for j in range(i + 1, k):
            if reg[j] != reg[i] and reg[j] != reg[k] and w[j - 1] > w[i - 1]:
                if best is None or (i, k) < best[::2]:
                    best = (i, j, k)
                break
    return best


def has_j231_pattern(w: Perm, ctx: JContext) -> bool:
    return find_j231_pattern(w, ctx) is not None


def is_j231_avoiding(w: Perm, ctx: JContext) -> bool:
    return find_j231_pattern(w, ctx) is None


def is_j_compressed(w: Perm, ctx: JContext) -> bool:
    """Inversion-set formulation of avoidance: every descent (i, k) forces the
    inversion (i, j) for each region-distinct middle index j."""
    require_quotient_member(w, ctx)
    reg = ctx.region_of
    for i, k in descent_pairs(w):
        for j in range(i + 1, k):
            if reg[j] != reg[i] and reg[j] != reg[k] and w[i - 1] < w[j - 1]:
                return False
    return True


def find_j132_pattern(w: Perm, ctx: JContext) -> tuple[int, int, int] | None:
    require_quotient_member(w, ctx)
    n = ctx.n
    reg = ctx.region_of
    pos = [0] * (n + 2)
    for i, v in enumerate(w):
        pos[v] = i + 1
    best = None
    for i in range(1, n + 1):
        k = pos[w[i - 1] + 1] if w[i - 1] + 1 <= n else 0
        if not k or k <= i or reg[i] == reg[k]:
            continue
        for j in range(i + 1, k):
            if reg[j] != reg[i] and reg[j] != reg[k] and w[j - 1] > w[k - 1]:
                if best is None or (i, k) < best[::2]:
                    best = (i, j, k)
                break
    return best


def has_j132_pattern(w: Perm, ctx: JContext) -> bool:
    return find_j132_pattern(w, ctx) is not None


def pi_down(w: Perm, ctx: JContext) -> Perm:
    """Maximal avoiding element below w: repeatedly remove the inversion
    (i, k) of a witnessing pattern, which is a lower cover step."""
    while True:
        hit = find_j231_pattern(w, ctx)
        if hit is None:
            return w
        i, _, k = hit
        u = list(w)
        u[i - 1], u[k - 1] = u[k - 1], u[i - 1]
        w = tuple(u)


def pi_up(w: Perm, ctx: JContext) -> Perm:
    """Minimal 132-avoiding element above w, by the dual ascent."""
    while True:
        hit = find_j132_pattern(w, ctx)
        if hit is None:
            return w
        i, _, k = hit
        u = list(w)
        u[i - 1], u[k - 1] = u[k - 1], u[i - 1]
        w = tuple(u)


def tamari_elements(ctx: JContext) -> list[Perm]:
    return [w for w in enumerate_quotient(ctx) if is_j231_avoiding(w, ctx)]


def tamari_lattice(ctx: JContext) -> FinitePoset:
    """The avoiding elements under the restriction of weak order."""
    return FinitePoset.from_relation(tamari_elements(ctx), weak_leq)


def quotient_poset(ctx: JContext) -> FinitePoset:
    """Weak order on the whole parabolic quotient."""
    return FinitePoset.from_relation(enumerate_quotient(ctx), weak_leq)


def tamari_meet(u: Perm, v: Perm, ctx: JContext) -> Perm:
    if not is_j231_avoiding(u, ctx) or not is_j231_avoiding(v, ctx):
        raise ValueError("tamari_meet expects avoiding elements")
    return pi_down(weak_meet(u, v), ctx)


@dataclass(frozen=True)
class CongruenceClass:
    bottom: Perm
    top: Perm
    members: frozenset[Perm]


def congruence_classes(ctx: JContext) -> list[CongruenceClass]:
    """Fibers of the downward projection, grouped by their bottom element."""
    fibers: dict[Perm, list[Perm]] = {}
    for w in enumerate_quotient(ctx):
        fibers.setdefault(pi_down(w, ctx), []).append(w)
    out = []
    for bottom in sorted(fibers):
        members = fibers[bottom]
        out.append(CongruenceClass(bottom, pi_up(bottom, ctx), frozenset(members)))
    return out


@dataclass(frozen=True)
class QuotientReport:
    ok: bool
    classes: int
    failures: tuple[str, ...]


def verify_quotient(ctx: JContext) -> QuotientReport:
    """Check the congruence structure on the parabolic quotient.

    (a) every fiber is the interval [bottom, top], (b) both projections are
    order-preserving along covers, (c) the class poset is isomorphic to the
    lattice of avoiding elements.  Failures are reported with witnesses
    rather than raised, so callers can aggregate.
    """
    failures: list[str] = []
    members = enumerate_quotient(ctx)
    classes = congruence_classes(ctx)

    by_member: dict[Perm, CongruenceClass] = {}
    for c in classes:
        for w in c.members:
            by_member[w] = c

    masks = {w: inversion_mask(w) for w in members}
    for c in classes:
        lo, hi = masks[c.bottom], masks[c.top]
        interval = {w for w in members
                    if masks[w] & lo == lo and masks[w] & hi == masks[w]}
        if interval != set(c.members):
            failures.append(f"class of {c.bottom} is not the interval [bottom, top]")
        if not is_j231_avoiding(c.bottom, ctx):
            failures.append(f"bottom {c.bottom} not 231-avoiding")
        if has_j132_pattern(c.top, ctx):
            failures.append(f"top {c.top} not 132-avoiding")

    for w in members:
        for u in lower_covers(w):
            if not is_quotient_member(u, ctx):
                continue
            if not weak_leq(pi_down(u, ctx), pi_down(w, ctx)):
                failures.append(f"down projection not monotone on {u} < {w}")
            if not weak_leq(pi_up(u, ctx), pi_up(w, ctx)):
                failures.append(f"up projection not monotone on {u} < {w}")

    quotient = quotient_poset(ctx).quotient([c.members for c in classes])
    lattice = tamari_lattice(ctx)
    if lattice.is_lattice() is not None:
        failures.append("avoiding elements do not form a lattice")
    if not quotient.is_isomorphic(lattice):
        failures.append("class poset is not isomorphic to the avoiding-element lattice")

    return QuotientReport(not failures, len(classes), tuple(failures))


def non_sublattice_witness(ctx: JContext, u: Perm, v: Perm) -> tuple[Perm, Perm]:
    """Pair (weak meet, lattice meet); they differ when the lattice is not a
    sublattice of the weak order at (u, v)."""
    return weak_meet(u, v), tamari_meet(u, v, ctx)


def classical_231_avoiding(w: Perm) -> bool:
    """Plain 231-avoidance, used as the J-empty cross-check.

    >>> classical_231_avoiding((2, 3, 1))
    False
    >>> classical_231_avoiding((3, 1, 2))
    True
    """
    n = len(w)
    for j in range(1, n):
        for i in range(j):
            if w[i] < w[j]:
                if any(w[k] < w[i] for k in range(j + 1, n)):
                    return False
    return True
