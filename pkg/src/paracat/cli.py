"""Command-line interface.

Subcommands:

  tamari       build the pattern-avoidance lattice of a parabolic quotient
               of a symmetric group and run structural checks on it
  bijection    verify the partition bijections for one quotient
  count        one cardinality (avoiding/aligned, nc, nn, subword)
  tables       recompute a whole table suite and diff against the built-in
               reference counts
  aligned      aligned elements of an arbitrary reduced word, with an
               optional lattice check
  conjectures  lattice/flip-poset verdicts over a small scope

Exit status: 0 on success and full agreement, 1 when a check or a table
cell fails, 2 on usage errors.  All output is deterministic.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import alignment as al
from . import coxeter as cx
from . import partitions as pt
from . import permutations as pm
from . import subword as sw
from . import tables as tb
from . import tamari as tm


class UsageError(Exception):
    pass


def parse_j(text: str) -> tuple[int, ...]:
    text = (text or "").strip().strip('"')
    if not text:
        return ()
    try:
        return tuple(sorted({int(tok) for tok in text.replace(",", " ").split()}))
    except ValueError:
        raise UsageError(f"cannot parse J from {text!r}")


def parse_word(text: str, base: str) -> tuple[int, ...]:
    toks = text.replace(",", " ").split()
    idx = []
    for tok in toks:
        tok = tok.lower().lstrip("s")
        try:
            idx.append(int(tok))
        except ValueError:
            raise UsageError(f"bad generator token {tok!r}")
    if base == "auto":
        base = "0" if 0 in idx else "1"
    if base == "1":
        idx = [a - 1 for a in idx]
    if any(a < 0 for a in idx):
        raise UsageError("generator index below the declared base")
    return tuple(idx)


def build_system(args):
    m = getattr(args, "m", None)
    return cx.coxeter_system(args.type, args.rank, m)


def emit(args, rows, header):
    fmt = getattr(args, "out", "human") or "human"
    if fmt == "json":
        print(json.dumps([dict(zip(header, r)) for r in rows], indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(header)
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(str(h))
                  for i, h in enumerate(header)]
        print("  ".join(str(h).ljust(w) for h, w in zip(header, widths)))
        for r in rows:
            print("  ".join(str(v).ljust(w) for v, w in zip(r, widths)))


def j_name(j_set) -> str:
    return "{" + ",".join(f"s{j}" for j in j_set) + "}"


# ----------------------------------------------------------------------


def cmd_tamari(args) -> int:
    if args.n > args.bound:
        raise UsageError(f"n={args.n} exceeds the bound {args.bound}; raise --bound")
    ctx = pm.j_context(args.n, parse_j(args.j))
    elements = tm.tamari_elements(ctx)
    checks = [c for c in (args.check or "").split(",") if c]
    rows = [("elements", len(elements), "")]
    failed = False
    for check in checks:
        if check == "lattice":
            witness = tm.tamari_lattice(ctx).is_lattice()
            ok = witness is None
            rows.append(("lattice", "pass" if ok else "fail",
                         "" if ok else f"{witness.kind} of {witness.pair}"))
            failed |= not ok
        elif check in ("quotient", "congruence"):
            report = tm.verify_quotient(ctx)
            rows.append((check, "pass" if report.ok else "fail",
                         "; ".join(report.failures[:3])))
            failed |= not report.ok
        else:
            raise UsageError(f"unknown check {check!r}")
    if args.dot:
        quotient = tm.quotient_poset(ctx)
        shades = {}
        for k, cls in enumerate(tm.congruence_classes(ctx)):
            for w in cls.members:
                # members of one congruence class share a fill tone
                shades[w] = f"gray{60 + 12 * (k % 4)}"
        dot = quotient.to_dot(
            "quotient",
            label=lambda w: pm.one_line(w, ctx),
            fill=shades.get)
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(dot)
        rows.append(("dot", args.dot, ""))
    if args.dot_lattice:
        dot = tm.tamari_lattice(ctx).to_dot(
            "lattice", label=lambda w: pm.one_line(w, ctx))
        with open(args.dot_lattice, "w", encoding="utf-8") as handle:
            handle.write(dot)
        rows.append(("dot-lattice", args.dot_lattice, ""))
    emit(args, rows, ("item", "value", "detail"))
    return 1 if failed else 0


def cmd_bijection(args) -> int:
    if args.n > args.bound:
        raise UsageError(f"n={args.n} exceeds the bound {args.bound}; raise --bound")
    ctx = pm.j_context(args.n, parse_j(args.j))
    avoiding = tm.tamari_elements(ctx)
    rows = []
    ok = True
    ncs = []
    for w in avoiding:
        p = pt.perm_to_nc(w, ctx)
        ncs.append(p)
        if pt.nc_to_perm(p, ctx) != w or not pt.is_j_noncrossing(p, ctx):
            ok = False
            rows.append(("roundtrip perm<->nc", "fail", pm.one_line(w, ctx)))
    nns = []
    for p in ncs:
        q = pt.nc_to_nn(p, ctx)
        nns.append(q)
        if pt.nn_to_nc(q, ctx) != p or not pt.is_j_nonnesting(q, ctx):
            ok = False
            rows.append(("roundtrip nc<->nn", "fail", str(p)))
    ideal_count = pt.parabolic_root_poset_A(ctx).count_ideals()
    counts_ok = (len(avoiding) == len(set(ncs)) == len(set(nns)) == ideal_count)
    ok &= counts_ok
    rows.append(("avoiding", len(avoiding), ""))
    rows.append(("noncrossing", len(set(ncs)), ""))
    rows.append(("nonnesting", len(set(nns)), ""))
    rows.append(("root-poset ideals", ideal_count, ""))
    rows.append(("cardinalities", "equal" if counts_ok else "MISMATCH", ""))
    if args.families_json:
        payload = {
            "n": ctx.n,
            "j": sorted(ctx.j_set),
            "shape": list(pt.bounding_shape(ctx)),
            "avoiding": [list(w) for w in avoiding],
            "noncrossing": [[list(part) for part in p] for p in ncs],
            "nonnesting": [[list(part) for part in q] for q in nns],
        }
        with open(args.families_json, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, indent=1)
        rows.append(("families-json", args.families_json, ""))
    if args.sample:
        w = pt.nc_to_perm(pt.partition_from_bumps([(2, 9), (3, 10), (6, 8)], 10),
                          pm.j_context(10, {1, 2, 3, 5, 8}))
        rows.append(("sample nc->perm", "".join(map(str, w)), "n=10 worked instance"))
    emit(args, rows, ("item", "value", "detail"))
    return 0 if ok else 1


def cmd_count(args) -> int:
    sys_ = build_system(args)
    j1 = parse_j(args.j)
    j0 = tuple(a - 1 for a in j1)
    provenance = f"{sys_.name} J={j_name(j1)}"
    if args.family == "nn":
        poset = al.load_root_poset(args.root_poset) if args.root_poset else None
        value = al.nonnesting_count(sys_, j0, poset)
        provenance += " [nonnesting: root-poset ideals]"
    else:
        c_word = (parse_word(args.c, args.base) if args.c
                  else tuple(range(sys_.n)))
        if args.family in ("avoiding", "aligned"):
            value = al.family_counts(sys_, j0, c_word, args.decomposition)[0]
        elif args.family == "nc":
            value = al.family_counts(sys_, j0, c_word, args.decomposition)[1]
        elif args.family == "subword":
            spec = sw.cluster_complex(sys_, j0, c_word)
            all_facets = sw.facets(spec)
            value = len(all_facets)
            if args.facets_json:
                with open(args.facets_json, "w", encoding="utf-8") as handle:
                    json.dump([sorted(f) for f in all_facets], handle)
            if args.flip_dot:
                with open(args.flip_dot, "w", encoding="utf-8") as handle:
                    handle.write(sw.flip_poset(spec).to_dot(
                        "flips", label=lambda f: ",".join(map(str, sorted(f)))))
        else:
            raise UsageError(f"unknown family {args.family!r}")
        provenance += f" c={''.join('s%d' % (a + 1) for a in c_word)}"
    print(f"{value}  # {provenance}")
    return 0


def cmd_tables(args) -> int:
    poset = al.load_root_poset(args.root_poset) if args.root_poset else None
    cells = tb.run_suite(args.suite, poset)
    rows = [(c.suite, j_name(c.j_set), c.family, c.c_word,
             c.expected, "-" if c.computed is None else c.computed, c.status)
            for c in cells]
    emit(args, rows, ("suite", "J", "family", "c", "expected", "computed", "status"))
    bad = sum(1 for c in cells if c.status == "mismatch")
    skipped = sum(1 for c in cells if c.status == "skipped")
    print(f"# {len(cells)} cells, {bad} mismatches, {skipped} skipped", file=sys.stderr)
    return 1 if bad else 0


def cmd_aligned(args) -> int:
    sys_ = build_system(args)
    word = parse_word(args.word, args.base)
    if not cx.is_reduced(sys_, word):
        raise UsageError(f"word {args.word!r} is not reduced")
    interval = cx.weak_interval(sys_, word)
    ctx = al.build_context(sys_, word, args.decomposition)
    aligned = al._aligned_filter(ctx, interval)

    def word_name(x):
        return "".join(sys_.gen_names[a] for a in x.word) or "e"

    rows = [(word_name(x), x.length) for x in aligned]
    emit(args, rows, ("element", "length"))
    print(f"# {len(aligned)} aligned elements below the base word", file=sys.stderr)
    status = 0
    if args.check_lattice:
        poset = al.weak_order_poset(sys_, aligned, interval)
        witness = poset.is_lattice()
        if witness is None:
            print("# lattice: pass", file=sys.stderr)
        else:
            pair = ", ".join(word_name(x) for x in witness.pair)
            bounds = ", ".join(sorted(word_name(x) for x in witness.bounds))
            print(f"# lattice: fail ({witness.kind} of {pair}; "
                  f"extremal bounds {bounds})", file=sys.stderr)
            status = 1
    return status


def cmd_conjectures(args) -> int:
    try:
        family = args.scope[0].upper()
        rank = int(args.scope[1:])
    except (ValueError, IndexError):
        raise UsageError("scope looks like A3, B3, D4, H3, ...")
    sys_ = cx.coxeter_system(family, rank)
    if not sys_.finite:
        raise UsageError("conjecture scope must be a finite system")
    rows = []
    failed = False
    c_words = [word for _, word in cx.coxeter_elements(sys_)]
    for j1 in tb.subsets_1based(sys_.n):
        j0 = tuple(a - 1 for a in j1)
        quotient_size = len(cx.enumerate_parabolic_quotient(sys_, j0))
        for word in c_words:
            ctx = al.parabolic_context(sys_, j0, word, args.decomposition)
            interval = cx.weak_interval(sys_, ctx.base.word)
            aligned = al._aligned_filter(ctx, interval)
            poset = al.weak_order_poset(sys_, aligned, interval)
            lattice_ok = poset.is_lattice() is None
            flips = sw.flip_poset(sw.cluster_complex(sys_, j0, word))
            iso_ok = flips.is_isomorphic(poset)
            failed |= not (lattice_ok and iso_ok)
            rows.append((j_name(j1), "".join(f"s{a + 1}" for a in word),
                         len(aligned),
                         "=quotient" if len(aligned) == quotient_size else "",
                         "pass" if lattice_ok else "FAIL",
                         "pass" if iso_ok else "FAIL"))
    emit(args, rows, ("J", "c", "aligned", "note", "lattice", "flip-iso"))
    return 1 if failed else 0


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paracat",
        description="Catalan combinatorics of parabolic quotients")
    subs = parser.add_subparsers(dest="command", required=True)

    def add_common_type(p):
        p.add_argument("--type", required=True,
                       choices=["A", "B", "D", "F", "H", "I", "affine-A"])
        p.add_argument("--rank", type=int, required=True)
        p.add_argument("--m", type=int, help="bond order for type I")
        p.add_argument("--base", choices=["0", "1", "auto"], default="auto",
                       help="generator indexing in words (auto: s0 present "
                            "means 0-based)")
        p.add_argument("--decomposition", choices=al.DECOMPOSITION_MODES,
                       default="positive")

    p = subs.add_parser("tamari", help="parabolic pattern-avoidance lattice")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", default="")
    p.add_argument("--check", default="", help="comma list: lattice,quotient")
    p.add_argument("--dot", help="write the class-shaded quotient poset to FILE")
    p.add_argument("--dot-lattice", help="write the avoiding-element lattice to FILE")
    p.add_argument("--bound", type=int, default=9)
    p.add_argument("--out", choices=["human", "csv", "json"], default="human")
    p.set_defaults(func=cmd_tamari)

    p = subs.add_parser("bijection", help="verify the partition bijections")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", default="")
    p.add_argument("--sample", action="store_true")
    p.add_argument("--families-json",
                   help="dump the three families (and the bounding shape) to FILE")
    p.add_argument("--bound", type=int, default=9)
    p.add_argument("--out", choices=["human", "csv", "json"], default="human")
    p.set_defaults(func=cmd_bijection)

    p = subs.add_parser("count", help="one family count")
    p.add_argument("--family", required=True,
                   choices=["avoiding", "aligned", "nc", "nn", "subword"])
    add_common_type(p)
    p.add_argument("--j", default="")
    p.add_argument("--c", help="Coxeter word (default s1 s2 ... sn)")
    p.add_argument("--root-poset", help="poset file for the nn family on H4")
    p.add_argument("--facets-json", help="subword family: write facets to FILE")
    p.add_argument("--flip-dot", help="subword family: write the flip poset to FILE")
    p.set_defaults(func=cmd_count)

    p = subs.add_parser("tables", help="recompute a table suite and diff it")
    p.add_argument("--suite", required=True, choices=list(tb.SUITES))
    p.add_argument("--out", choices=["human", "csv", "json"], default="human")
    p.add_argument("--root-poset", help="poset file enabling the H4 nn column")
    p.set_defaults(func=cmd_tables)

    p = subs.add_parser("aligned", help="aligned elements of a reduced word")
    add_common_type(p)
    p.add_argument("--word", required=True)
    p.add_argument("--check-lattice", action="store_true")
    p.add_argument("--out", choices=["human", "csv", "json"], default="human")
    p.set_defaults(func=cmd_aligned)

    p = subs.add_parser("conjectures", help="lattice/flip verdicts on a scope")
    p.add_argument("--scope", required=True, help="e.g. A3, B3, D4, H3")
    p.add_argument("--decomposition", choices=al.DECOMPOSITION_MODES,
                   default="positive")
    p.add_argument("--out", choices=["human", "csv", "json"], default="human")
    p.set_defaults(func=cmd_conjectures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (cx.CoxeterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
