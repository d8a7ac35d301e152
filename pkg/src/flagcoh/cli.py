"""Command-line interface: ``flagcoh <command> ...`` or ``python3 -m flagcoh``.

Exit codes: 0 when the computation succeeds (an Inconclusive verdict is a
result, not a failure), 2 for input errors, 3 when a resource cap is hit.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from . import checker, cohomology, dynkin, schubert, tags, veronese
from .cache import cache_dir, cached_betti
from .dynkin import DiagramError, DynkinDiagram, MarkedDiagram
from .polyring import PolynomialError, format_polynomial, parse_polynomial
from .weyl import EnumerationCapExceeded

SCHEMA_VERSION = 1


class InputError(ValueError):
    pass


def parse_space(text: str):
    """``D6(6)`` -> MarkedDiagram, ``Q<d>`` -> quadric, ``A3`` -> full flag diagram."""
    text = text.strip()
    m = re.fullmatch(r"[Qq](\d+)", text)
    if m:
        d = int(m.group(1))
        if d == 1:
            return MarkedDiagram.single(DynkinDiagram("A", 1), 1)
        if d == 2:
            raise InputError("Q2 = P1 x P1 does not have Picard number one")
        if d % 2:
            return MarkedDiagram.single(DynkinDiagram("B", (d + 1) // 2), 1)
        return MarkedDiagram.single(DynkinDiagram("D", (d + 2) // 2), 1)
    if "(" in text:
        return MarkedDiagram.parse(text)
    return DynkinDiagram.parse(text)


def _picard_one(text: str) -> MarkedDiagram:
    x = parse_space(text)
    if not isinstance(x, MarkedDiagram) or not x.is_single:
        raise InputError(f"{text} is not a space with one marked node")
    return x


def _presentation(space):
    if isinstance(space, DynkinDiagram):
        return cohomology.presentation_full_flag(space)
    if not space.is_single:
        raise InputError("only full flags and spaces with one marked node are supported")
    x = dynkin.normalize(space)[0]
    return cohomology.reduced_presentation(cohomology.presentation_picard_one(x))


def _ring(space, cap=None):
    p = _presentation(space)
    return cohomology.quotient(p, cohomology.default_cap(p) if cap is None else cap)


def _pmap(fn, items, jobs):
    items = list(items)
    if jobs and jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items))
    return [fn(i) for i in items]


def _emit(args, payload: dict, text: str):
    if args.json:
        payload = {"schema_version": SCHEMA_VERSION, **payload}
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


# --- commands --------------------------------------------------------------


def cmd_degrees(args):
    d = DynkinDiagram.parse(args.type)
    degs = dynkin.fundamental_degrees(d)
    _emit(args, {"diagram": str(d), "degrees": degs}, " ".join(map(str, degs)))


def cmd_coxeter(args):
    d = DynkinDiagram.parse(args.type)
    h = dynkin.coxeter_number(d)
    _emit(args, {"diagram": str(d), "coxeter_number": h}, str(h))


def cmd_cartan(args):
    d = DynkinDiagram.parse(args.type)
    m = [list(r) for r in dynkin.cartan_matrix(d)]
    _emit(args, {"diagram": str(d), "cartan": m}, "\n".join(" ".join(f"{v:>2}" for v in r) for r in m))


def cmd_betti(args):
    space = parse_space(args.space)
    p = _presentation(space)
    cap = cohomology.default_cap(p) if args.cap is None else args.cap
    data, status = cached_betti(p, cap, use_cache=not args.no_cache)
    note = f"degree cap {cap}; cache {status} ({cache_dir()})"
    if not args.json:
        print(note, file=sys.stderr)
    betti = data["betti"]
    _emit(
        args,
        {"space": str(space), "cap": cap, "cache": status, "complete": data["complete"], "betti": betti},
        " ".join(map(str, betti)) + ("" if data["complete"] else "  (incomplete: raise --cap)"),
    )


def cmd_normal_form(args):
    space = parse_space(args.space)
    ring = _ring(space, args.cap)
    pres = ring.presentation
    tables = [t for t in (pres.source, pres.table) if t is not None]
    poly, err = None, None
    for t in tables:
        try:
            poly = parse_polynomial(args.poly, t)
            break
        except PolynomialError as exc:
            err = exc
    if poly is None:
        raise InputError(f"{err}; variables: {', '.join(tables[0].names)}")
    nf = ring.normal_form(poly)
    _emit(args, {"space": str(space), "input": str(poly), "normal_form": format_polynomial(nf), "zero": nf.is_zero()}, str(nf))


def cmd_gd(args):
    space = parse_space(args.space)
    ring = _ring(space, args.cap)
    b = cohomology.gd_interval(ring)
    text = b.describe()
    if b.upper_certificate:
        text += f"\n  upper: {b.upper_certificate}"
    _emit(
        args,
        {
            "space": str(space),
            "lower": b.lower,
            "upper": b.upper,
            "lower_exhausted": b.lower_exhausted,
            "certified": b.certified,
            "certificate": b.upper_certificate,
        },
        text,
    )


def effective_data(x: MarkedDiagram) -> tuple[int, str]:
    c = dynkin.canonical(x)
    d = c.diagram
    if dynkin.is_projective_line(c):
        return 1, "P1"
    if d.family == "A" and c.node == 2 and d.rank >= 3:
        return schubert.effective_divisibility(d.rank), f"Schubert classes of G(1,{d.rank})"
    if d.family == "D" and c.node == 1 and d.rank >= 4:
        val, witness = cohomology.ed_quadric_witness(d.rank - 1)
        return val, f"Q{2 * (d.rank - 1)}: {witness}"
    if d.is_classical and cohomology.all_betti_one(cohomology.picard_one_ring(c)):
        return dynkin.dimension(c), "one class per degree"
    raise InputError(f"e.d. is only computed for projective spaces, quadrics and G(1,m); got {x}")


def cmd_ed(args):
    x = _picard_one(args.space)
    val, how = effective_data(x)
    _emit(args, {"space": str(x), "ed": val, "via": how}, f"e.d. = {val} ({how})")


def _pair(text):
    parts = [int(t) for t in text.split(",")]
    if len(parts) == 1:
        parts.append(0)
    if len(parts) != 2:
        raise InputError(f"expected a1,a2 but got {text!r}")
    return parts


def cmd_schubert_mult(args):
    a = schubert.SchubertClass(args.m, *_pair(args.a))
    b = schubert.SchubertClass(args.m, *_pair(args.b))
    prod = schubert.product(a, b)
    terms = sorted(prod.coeffs.items(), reverse=True)
    _emit(
        args,
        {"m": args.m, "a": [a.a1, a.a2], "b": [b.a1, b.a2], "product": [[k.a1, k.a2, str(v)] for k, v in terms]},
        repr(prod),
    )


def _parse_tag(text, fiber):
    if text is None:
        return None
    vals = tuple(int(t) for t in text.split(","))
    return tags.Tag(fiber, vals)


def _verdict_text(v: checker.Verdict) -> str:
    lines = [f"{v.result}  ({v.space}, fiber {v.fiber}, {v.mode})"]
    for s in v.trace:
        node = f" node {s.node}" if s.node is not None else ""
        mark = "ok  " if s.passed else "FAIL"
        extra = f"  [{s.detail}]" if s.detail else ""
        lines.append(f"  {mark} {s.rule}{node}: {checker._fmt(s.lhs)} {s.comparison} {checker._fmt(s.rhs)}  -- {s.citation}{extra}")
    for w in v.warnings:
        lines.append(f"  warning: {w}")
    return "\n".join(lines)


def cmd_check_h(args):
    x = _picard_one(args.space)
    fiber = DynkinDiagram.parse(args.fiber)
    v = checker.check_splitting_h(x, fiber, _parse_tag(args.tag, fiber))
    _emit(args, v.to_json(), _verdict_text(v))


def cmd_check_r(args):
    x = _picard_one(args.space)
    fiber = DynkinDiagram.parse(args.fiber)
    v = checker.check_splitting_r(x, fiber, _parse_tag(args.tag, fiber))
    _emit(args, v.to_json(), _verdict_text(v))


def _table6_item(item):
    row, n = item
    x = checker.table6_space(row, n)
    comp = checker.table6_computed(row, n)
    printed = checker.table6_printed(row, n)
    match = comp[0] == printed[0] and checker.same_space(comp[1], printed[1]) and comp[2:] == printed[2:]
    return {
        "row": row,
        "n": n,
        "space": str(x),
        "h": comp[0],
        "lines": comp[1],
        "gd": comp[2],
        "ed": comp[3],
        "printed": [printed[0], printed[1], printed[2], printed[3]],
        "match": match,
    }


def table6_items(max_rank):
    return [(row, n) for row in checker.TABLE6_ROWS for n in range(4 if row[0] == "D" else 3, max_rank + 1)]


def table6_text(rows) -> str:
    out = ["row\tn\tX\th\tM_x\tgd\ted\tmatch"]
    for r in rows:
        out.append(f"{r['row']}\t{r['n']}\t{r['space']}\t{r['h']}\t{r['lines']}\t{r['gd']}\t{r['ed']}\t{'yes' if r['match'] else 'NO'}")
    return "\n".join(out)


def cmd_table6(args):
    rows = _pmap(_table6_item, table6_items(args.max_rank), args.jobs)
    _emit(args, {"rows": rows}, table6_text(rows))


def cmd_table8(args):
    rows = []
    for row in checker.TABLE8:
        computed = dynkin.isotropic_lines_fiber(row.space)
        rows.append(
            {
                "space": str(row.space),
                "row": row.family_row,
                "r": row.r,
                "r_computed": dynkin.r_of_X(row.space),
                "lines": str(row.lines),
                "lines_computed": str(computed[0]),
                "dim": row.lines_dim,
                "dim_computed": dynkin.dimension(computed[0]),
            }
        )
    text = ["X\trow\tr(X)\tM_x\tdim M_x\tcheck"]
    for r in rows:
        ok = r["r"] == r["r_computed"] and r["dim"] == r["dim_computed"]
        text.append(f"{r['space']}\t{r['row']}\t{r['r']}\t{r['lines']}\t{r['dim']}\t{'yes' if ok else 'NO'}")
    _emit(args, {"rows": rows}, "\n".join(text))


def _table9_item(item):
    f, s, max_rank = item
    c = checker.table9_cell(f, s, max_rank)
    return {"fiber": f, "space": s, "pattern": c.pattern, "printed": c.printed, "consistent": c.consistent, "instances": c.instances, "witness": c.witness}


def cmd_table9(args):
    items = [(f, s, args.max_rank) for f in checker.TABLE9_FIBERS for s in checker.TABLE9_SPACES]
    cells = _pmap(_table9_item, items, args.jobs)
    text = ["fiber\tX\tsweep\tprinted\tconsistent\twitness"]
    for c in cells:
        text.append(f"{c['fiber']}n\t{c['space']}\t{c['pattern']}\t{c['printed']}\t{'yes' if c['consistent'] else 'NO'}\t{c['witness']}")
    _emit(args, {"max_rank": args.max_rank, "cells": cells}, "\n".join(text))


def cmd_veronese(args):
    q = veronese.build_quadric(args.n)
    codim = veronese.vertex_codimension(q)
    disjoint = veronese.verify_disjoint(q)
    target = veronese.target_quadric_dimension(args.n)
    payload = {
        "n": args.n,
        "vertex_codimension": codim,
        "expected_codimension": veronese.expected_codimension(args.n),
        "disjoint": disjoint,
        "listed_equations_agree": veronese.listed_equations_span_vertex(q),
        "target_dimension": target,
        "quadric": str(veronese.quadric_polynomial(q)),
    }
    text = (
        f"quadric: {payload['quadric']}\n"
        f"vertex codimension {codim} (expected {payload['expected_codimension']})\n"
        f"vertex disjoint from v2(P{args.n}): {disjoint}\n"
        f"nonconstant map P{args.n} -> Q{target}"
    )
    _emit(args, payload, text)


def cmd_tag_split(args):
    t = tags.tag_from_splitting_type([int(v) for v in args.splitting.split(",")])
    i0 = sorted(tags.zero_set(t))
    _emit(args, {"diagram": str(t.diagram), "tag": list(t.values), "zero_set": i0}, f"{t.diagram}: ({t}); I0 = {{{','.join(map(str, i0))}}}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="flagcoh", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=fn)
        return sp

    add("degrees", cmd_degrees, "fundamental degrees").add_argument("type")
    add("coxeter", cmd_coxeter, "Coxeter number").add_argument("type")
    add("cartan", cmd_cartan, "Cartan matrix").add_argument("type")
    sp = add("betti", cmd_betti, "Betti numbers of a full flag (A3) or Picard-one space (D6(6), Q5)")
    sp.add_argument("space")
    sp.add_argument("--cap", type=int)
    sp.add_argument("--no-cache", action="store_true")
    sp = add("normal-form", cmd_normal_form, "normal form of a polynomial in the cohomology ring")
    sp.add_argument("space")
    sp.add_argument("poly")
    sp.add_argument("--cap", type=int)
    sp = add("gd", cmd_gd, "certified interval for good divisibility")
    sp.add_argument("space")
    sp.add_argument("--cap", type=int)
    add("ed", cmd_ed, "effective good divisibility").add_argument("space")
    sp = add("schubert-mult", cmd_schubert_mult, "product of Schubert classes on G(1,m)")
    sp.add_argument("m", type=int)
    sp.add_argument("a")
    sp.add_argument("b")
    for name, fn in (("check-h", cmd_check_h), ("check-r", cmd_check_r)):
        sp = add(name, fn, f"splitting verdict ({name[-1]}-criterion)")
        sp.add_argument("space")
        sp.add_argument("fiber")
        sp.add_argument("--tag", help="uniform tag d1,...,dn on the fiber diagram")
    add("table6", cmd_table6, "extremal-node table").add_argument("--max-rank", type=int, default=8)
    add("table8", cmd_table8, "exceptional extremal nodes")
    add("table9-sweep", cmd_table9, "h versus r hypotheses sweep").add_argument("--max-rank", type=int, default=8)
    add("veronese", cmd_veronese, "Veronese projection onto a quadric").add_argument("n", type=int)
    add("tag-split", cmd_tag_split, "tag from a splitting type").add_argument("splitting")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (cohomology.ResourceLimitError, cohomology.DegreeCapError, EnumerationCapExceeded) as exc:
        print(f"flagcoh: resource cap: {exc}", file=sys.stderr)
        return 3
    except (InputError, DiagramError, PolynomialError, checker.CheckerError, cohomology.CohomologyError, ValueError) as exc:
        print(f"flagcoh: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
