"""Reference counts for the four-generator table suites and the machinery
to recompute them.

Every cell records the reference cardinality of one family (aligned
elements, their noncrossing images, subword-complex facets, or nonnesting
ideals) over one parabolic quotient.  For the A4/B4/H3 suites the counts do
not depend on the Coxeter element and the runner recomputes them for every
Coxeter element; the D4 and F4 suites carry one column per printed Coxeter
word because three D4 rows and two F4 rows genuinely depend on it.  For H4
the runner uses one canonical Coxeter element, and its nonnesting column is
only computable from a user-supplied root-poset file.

All J subsets are written 1-based, matching the generator names s1..s4.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import alignment as al
from . import coxeter as cx
from . import subword as sw

# rows of (J, value) with one shared value for Align = NC = SW = NN
A4_ROWS = {
    (): 42, (1,): 28, (2,): 32, (3,): 32, (4,): 28,
    (1, 2): 14, (1, 3): 22, (1, 4): 19, (2, 3): 17, (2, 4): 22, (3, 4): 14,
    (1, 2, 3): 5, (1, 2, 4): 10, (1, 3, 4): 10, (2, 3, 4): 5,
    (1, 2, 3, 4): 1,
}

B4_ROWS = {
    (): 70, (1,): 50, (2,): 58, (3,): 60, (4,): 56,
    (1, 2): 30, (1, 3): 44, (1, 4): 41, (2, 3): 40, (2, 4): 48, (3, 4): 28,
    (1, 2, 3): 16, (1, 2, 4): 26, (1, 3, 4): 22, (2, 3, 4): 8,
    (1, 2, 3, 4): 1,
}

H3_ROWS = {
    (): 32, (1,): 27, (2,): 28, (3,): 25,
    (1, 2): 12, (1, 3): 22, (2, 3): 18,
    (1, 2, 3): 1,
}

# (align/nc/sw value, nonnesting value)
H4_ROWS = {
    (): (280, 280), (1,): (266, 266), (2,): (270, 270), (3,): (266, 266),
    (4,): (248, 248),
    (1, 2): (209, 210), (1, 3): (256, 256), (1, 4): (239, 239),
    (2, 3): (245, 245), (2, 4): (242, 242), (3, 4): (216, 216),
    (1, 2, 3): (95, 106), (1, 2, 4): (197, 198), (1, 3, 4): (212, 212),
    (2, 3, 4): (191, 191),
    (1, 2, 3, 4): (1, 1),
}

# four printed Coxeter words (1-based generator sequences)
DF_C_WORDS = ((2, 3, 4, 1), (1, 2, 3, 4), (3, 2, 1, 4), (4, 2, 3, 1))

# ((align value per c word), nonnesting value)
D4_ROWS = {
    (): ((50,) * 4, 50), (1,): ((36,) * 4, 36), (2,): ((42,) * 4, 42),
    (3,): ((36,) * 4, 36), (4,): ((36,) * 4, 36),
    (1, 2): ((22, 22, 21, 21), 22), (1, 3): ((27,) * 4, 27),
    (1, 4): ((27,) * 4, 27), (2, 3): ((22, 21, 22, 21), 22),
    (2, 4): ((22, 21, 21, 22), 22), (3, 4): ((27,) * 4, 27),
    (1, 2, 3): ((8,) * 4, 8), (1, 2, 4): ((8,) * 4, 8),
    (1, 3, 4): ((21,) * 4, 21), (2, 3, 4): ((8,) * 4, 8),
    (1, 2, 3, 4): ((1,) * 4, 1),
}

F4_ROWS = {
    (): ((105,) * 4, 105), (1,): ((85,) * 4, 85), (2,): ((95,) * 4, 95),
    (3,): ((95,) * 4, 95), (4,): ((85,) * 4, 85),
    (1, 2): ((65,) * 4, 65), (1, 3): ((79,) * 4, 79), (1, 4): ((71,) * 4, 71),
    (2, 3): ((62, 57, 62, 62), 63), (2, 4): ((79,) * 4, 79),
    (3, 4): ((65,) * 4, 65),
    (1, 2, 3): ((23,) * 4, 24), (1, 2, 4): ((57,) * 4, 57),
    (1, 3, 4): ((57,) * 4, 57), (2, 3, 4): ((23,) * 4, 23),
    (1, 2, 3, 4): ((1,) * 4, 1),
}

SUITES = ("a4b4", "d4", "h3", "h4", "f4")


@dataclass(frozen=True)
class Cell:
    suite: str
    j_set: tuple[int, ...]
    family: str
    c_word: str
    expected: int | None
    computed: int | None
    status: str  # "ok", "mismatch", "skipped"


def _zero_based(j_set):
    return tuple(s - 1 for s in j_set)


def _word_name(word) -> str:
    return "".join(f"s{a + 1}" for a in word)


def family_counts_all(sys, j_set0, c_word0, mode="positive"):
    """(aligned, noncrossing, subword) counts for one J and one c word."""
    n_aligned, n_nc = al.family_counts(sys, j_set0, c_word0, mode)
    spec = sw.cluster_complex(sys, j_set0, tuple(c_word0))
    return n_aligned, n_nc, len(sw.facets(spec))


def _check(cells, suite, j_set, family, word_name, expected, computed):
    status = "ok" if computed == expected else "mismatch"
    cells.append(Cell(suite, j_set, family, word_name, expected, computed, status))


def run_shared_suite(suite, sys, rows, cells, c_words=None):
    """Suites whose printed value is shared by every family and Coxeter word."""
    if c_words is None:
        c_words = [word for _, word in cx.coxeter_elements(sys)]
    for j_set, value in rows.items():
        j0 = _zero_based(j_set)
        for word in c_words:
            a, n, s = family_counts_all(sys, j0, word)
            name = _word_name(word)
            _check(cells, suite, j_set, "align", name, value, a)
            _check(cells, suite, j_set, "nc", name, value, n)
            _check(cells, suite, j_set, "subword", name, value, s)
        _check(cells, suite, j_set, "nn", "-", value,
               al.nonnesting_count(sys, j0))


def run_cdependent_suite(suite, sys, rows, cells):
    words0 = [tuple(a - 1 for a in w) for w in DF_C_WORDS]
    for j_set, (per_c, nn_value) in rows.items():
        j0 = _zero_based(j_set)
        for word, value in zip(words0, per_c):
            a, n, s = family_counts_all(sys, j0, word)
            name = _word_name(word)
            _check(cells, suite, j_set, "align", name, value, a)
            _check(cells, suite, j_set, "nc", name, value, n)
            _check(cells, suite, j_set, "subword", name, value, s)
        _check(cells, suite, j_set, "nn", "-", nn_value,
               al.nonnesting_count(sys, j0))


def run_h4_suite(cells, nn_poset=None):
    sys = cx.coxeter_system("H", 4)
    c_word = (0, 1, 2, 3)
    name = _word_name(c_word)
    for j_set, (value, nn_value) in H4_ROWS.items():
        j0 = _zero_based(j_set)
        a, n, s = family_counts_all(sys, j0, c_word)
        _check(cells, "h4", j_set, "align", name, value, a)
        _check(cells, "h4", j_set, "nc", name, value, n)
        _check(cells, "h4", j_set, "subword", name, value, s)
        if nn_poset is None:
            cells.append(Cell("h4", j_set, "nn", "-", nn_value, None, "skipped"))
        else:
            _check(cells, "h4", j_set, "nn", "-", nn_value,
                   al.nonnesting_count(sys, j0, nn_poset))


def run_suite(suite: str, nn_poset=None) -> list[Cell]:
    cells: list[Cell] = []
    if suite == "a4b4":
        run_shared_suite("a4b4", cx.coxeter_system("A", 4), A4_ROWS, cells)
        run_shared_suite("a4b4", cx.coxeter_system("B", 4), B4_ROWS, cells)
    elif suite == "d4":
        run_cdependent_suite("d4", cx.coxeter_system("D", 4), D4_ROWS, cells)
    elif suite == "h3":
        run_shared_suite("h3", cx.coxeter_system("H", 3), H3_ROWS, cells)
    elif suite == "h4":
        run_h4_suite(cells, nn_poset)
    elif suite == "f4":
        run_cdependent_suite("f4", cx.coxeter_system("F", 4), F4_ROWS, cells)
    else:
        raise ValueError(f"unknown suite {suite!r}; pick one of {SUITES}")
    return cells


def all_coxeter_element_counts(sys, j_set0, family="align", mode="positive"):
    """The chosen family's count for every Coxeter element, as a dict."""
    out = {}
    for _, word in cx.coxeter_elements(sys):
        a, n, s = family_counts_all(sys, j_set0, word, mode)
        out[_word_name(word)] = {"align": a, "nc": n, "subword": s}[family]
    return out


def subsets_1based(n: int):
    for k in range(n + 1):
        yield from itertools.combinations(range(1, n + 1), k)
