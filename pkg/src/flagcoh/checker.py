"""Decision procedure for diagonalizability of uniform flag bundles.

Given a Picard-one base X = D(j) and the fiber diagram of a G/B-bundle that
is uniform with respect to the isotropic lines of X, the checker applies
the sufficient criteria and records each comparison in a trace. It never
claims non-diagonalizability: when a criterion does not apply the verdict
is ``Inconclusive``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cohomology import all_betti_one, ed_quadric, gd_interval, picard_one_ring
from .dynkin import (
    INFINITY,
    DynkinDiagram,
    MarkedDiagram,
    canonical,
    coxeter_number,
    dimension,
    h_of_X,
    is_extremal,
    is_projective_line,
    isotropic_lines_fiber,
    neighbor_piece,
    neighbors,
    normalize,
    normalize_d3,
    r_of_X,
)
from .schubert import effective_divisibility
from .tags import zero_set

SCHEMA_VERSION = 1
DIAGONALIZABLE = "Diagonalizable"
INCONCLUSIVE = "Inconclusive"

CITE_H = "main splitting theorem: hypothesis h(X) > h(fiber)"
CITE_R = "type-A fibers: hypothesis r(X) > r(fiber)"
CITE_PIECE = "main splitting theorem: reduction to the extremal pieces F_t at a non-extremal node"
CITE_ED = "no-maps criterion for classical targets: e.d.(M) >= h(D)"
CITE_GD = "no-maps criterion for classical targets: 2 g.d.(M) > h(D) when D has type D"
CITE_DIM = "Picard-one source: a nonconstant map needs dim(M) <= dim(target)"
CITE_DIAG = "diagonalizability criterion: only nodes outside I0 need constant maps"
CITE_TABLE8 = "stored data for exceptional extremal nodes"


class CheckerError(ValueError):
    pass


class UnsupportedSpace(CheckerError):
    pass


def _fmt(v):
    if v is INFINITY:
        return "inf"
    if isinstance(v, Fraction):
        return str(v)
    return v


def _compare(lhs, op, rhs) -> bool:
    if op == ">":
        return lhs > rhs
    if op == ">=":
        return lhs >= rhs
    if op == "==":
        return lhs == rhs
    raise ValueError(op)


@dataclass(frozen=True)
class Step:
    rule: str
    lhs: object
    rhs: object
    comparison: str
    citation: str
    passed: bool
    node: int | None = None
    detail: str = ""

    @classmethod
    def check(cls, rule, lhs, comparison, rhs, citation, node=None, detail=""):
        return cls(rule, lhs, rhs, comparison, citation, _compare(lhs, comparison, rhs), node, detail)

    def to_json(self) -> dict:
        d = asdict(self)
        d["lhs"], d["rhs"] = _fmt(self.lhs), _fmt(self.rhs)
        return d


@dataclass(frozen=True)
class Verdict:
    result: str
    trace: tuple[Step, ...]
    warnings: tuple[str, ...] = ()
    space: str = ""
    fiber: str = ""
    mode: str = "tag-free"

    @property
    def diagonalizable(self) -> bool:
        return self.result == DIAGONALIZABLE

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "result": self.result,
            "space": self.space,
            "fiber": self.fiber,
            "mode": self.mode,
            "trace": [s.to_json() for s in self.trace],
            "warnings": list(self.warnings),
        }


@dataclass(frozen=True)
class SpaceData:
    """Divisibility data of a Picard-one source space."""

    ed: int
    gd: int
    dim: int
    picard_one: bool = True
    label: str = ""

    def __post_init__(self):
        if self.ed < self.gd:
            raise CheckerError(f"e.d. {self.ed} below g.d. {self.gd} for {self.label}")


@dataclass(frozen=True)
class Obstruction:
    holds: bool
    reason: str
    steps: tuple[Step, ...] = field(default=())

    def __bool__(self):
        return self.holds


# --- source data -----------------------------------------------------------


def _certified_gd(x: MarkedDiagram) -> int:
    bound = gd_interval(picard_one_ring(x))
    if not bound.certified:
        raise UnsupportedSpace(f"g.d. of {x} not certified: {bound.describe()}")
    return bound.lower


@lru_cache(maxsize=None)
def fiber_data(m: MarkedDiagram) -> SpaceData:
    """e.d., g.d. and dimension for the Picard-one spaces that occur as
    lines through a point of a classical X."""
    c = canonical(m)
    if is_projective_line(c):
        return SpaceData(1, 1, 1, True, "P1")
    if not c.diagram.is_classical or not c.is_single:
        raise UnsupportedSpace(f"no divisibility data for {m}")
    d, j = c.diagram, c.node
    dim = dimension(c)
    if d.family == "A" and j == 2 and d.rank >= 3:
        return SpaceData(effective_divisibility(d.rank), _certified_gd(c), dim, True, f"G(1,{d.rank})")
    if d.family == "D" and j == 1 and d.rank >= 4:
        k = d.rank - 1
        return SpaceData(ed_quadric(k), _certified_gd(c), dim, True, f"Q{2 * k}")
    ring = picard_one_ring(c)
    if all_betti_one(ring):
        gd = _certified_gd(c)
        if gd != dim:
            raise CheckerError(f"rank-one cohomology of {c} but g.d. {gd} != dim {dim}")
        return SpaceData(dim, gd, dim, True, f"{c} (one class per degree)")
    raise UnsupportedSpace(f"no divisibility data for {m}")


# --- obstructions ----------------------------------------------------------


def _normalize_target(t: MarkedDiagram) -> MarkedDiagram:
    return normalize_d3(normalize(t)[0])


def no_nonconstant_morphisms_cohomological(src: SpaceData, tgt: MarkedDiagram) -> Obstruction:
    tgt = _normalize_target(tgt)
    if not tgt.diagram.is_classical:
        raise CheckerError(f"target {tgt} is not classical")
    h = coxeter_number(tgt.diagram)
    node = tgt.node
    steps = [Step.check("ed-check", src.ed, ">=", h, CITE_ED, node, f"{src.label} -> {tgt}")]
    if tgt.diagram.family == "D":
        steps.append(Step.check("gd-check", 2 * src.gd, ">", h, CITE_GD, node, f"{src.label} -> {tgt}"))
    ok = all(s.passed for s in steps)
    failed = [s for s in steps if not s.passed]
    reason = "all inequalities hold" if ok else "; ".join(f"{s.rule}: {s.lhs} {s.comparison} {s.rhs} fails" for s in failed)
    return Obstruction(ok, reason, tuple(steps))


def no_nonconstant_morphisms_dimension(src: SpaceData, tgt: MarkedDiagram) -> Obstruction:
    if tgt.diagram.family != "A":
        raise CheckerError("the dimension obstruction is stated for type-A targets")
    if not src.picard_one:
        return Obstruction(False, "source is not of Picard number one")
    target_dim = dimension(tgt)
    step = Step.check("dim-check", src.dim, ">", target_dim, CITE_DIM, tgt.node, f"{src.label} -> {tgt}")
    return Obstruction(step.passed, f"dim {src.dim} vs {target_dim}", (step,))


# --- the h-criterion -------------------------------------------------------


def _row_name(f: MarkedDiagram) -> str:
    d, j = f.diagram, f.node
    if d.family == "A":
        return "An(1)"
    if j == 1:
        return f"{d.family}n(1)"
    return f"{d.family}n(n)"


def _check_classical(x: MarkedDiagram, fiber: DynkinDiagram):
    if not x.is_single:
        raise CheckerError(f"{x} must have exactly one marked node")
    if not x.diagram.is_classical:
        raise CheckerError(f"{x} is exceptional; use the r-criterion")
    if not fiber.is_classical:
        raise CheckerError(f"fiber {fiber} is exceptional; not covered")


def check_splitting_h(x: MarkedDiagram, fiber: DynkinDiagram, tag=None) -> Verdict:
    _check_classical(x, fiber)
    steps: list[Step] = []
    warnings: list[str] = []
    xn, note = normalize(x)
    if note:
        steps.append(Step("normalize", str(x), str(xn), "==", "D_n(n-1) is isomorphic to D_n(n)", True, detail=note))
    if fiber == DynkinDiagram("D", 3):
        steps.append(Step("normalize", "D3", "A3", "==", "D3 is A3", True))
        fiber = DynkinDiagram("A", 3)
    hx = h_of_X(xn)
    hpi = coxeter_number(fiber)
    hyp = Step.check("h-hypothesis", hx, ">", hpi, CITE_H)
    steps.append(hyp)
    mode = "tag-free"
    nodes = list(fiber.nodes)
    if tag is not None:
        if tag.diagram != fiber:
            raise CheckerError(f"tag lives on {tag.diagram}, fiber is {fiber}")
        mode = "tag-aware"
        i0 = zero_set(tag)
        nodes = [r for r in fiber.nodes if r not in i0]
        steps.append(
            Step("zero-set", sorted(i0), nodes, "==", CITE_DIAG, True, detail=f"tag {tag}; nodes to check {nodes}")
        )
    pieces = []
    if is_projective_line(xn):
        steps.append(Step("point-fiber", 0, 0, "==", CITE_DIAG, True, detail="lines through a point of P1: a point"))
    elif is_extremal(xn.diagram, xn.node):
        pieces.append((xn, isotropic_lines_fiber(xn)[0]))
    else:
        for t in neighbors(xn.diagram, xn.node):
            _, f = neighbor_piece(xn, t)
            hf = h_of_X(f)
            step = Step.check("piece-h", hf, ">=", hx, CITE_PIECE, detail=f"neighbour {t}: F_t = {f}")
            if not step.passed:
                raise RuntimeError(f"h(F_t) = {hf} < h(X) = {hx} for {xn}, neighbour {t}")
            steps.append(step)
            pieces.append((f, isotropic_lines_fiber(f)[0]))
    obstruction_ok = True
    for f, m in pieces:
        src = fiber_data(m)
        steps.append(
            Step(
                "lines-fiber",
                str(f),
                str(m),
                "->",
                f"extremal-node table row {_row_name(f)}",
                True,
                detail=f"M_x = {m}: e.d. {src.ed}, g.d. {src.gd}, dim {src.dim}",
            )
        )
        hf = h_of_X(f)
        if (src.ed >= hpi) != (hf - 1 >= hpi):
            warnings.append(
                f"{f}: e.d.(M_x) = {src.ed} >= h(D) = {hpi} is {src.ed >= hpi}, "
                f"but h(X_F) - 1 = {hf - 1} >= h(D) is {hf - 1 >= hpi}"
            )
        for r in nodes:
            res = no_nonconstant_morphisms_cohomological(src, MarkedDiagram.single(fiber, r))
            steps.extend(res.steps)
            obstruction_ok = obstruction_ok and res.holds
    if mode == "tag-free":
        ok = hyp.passed and obstruction_ok
    else:
        ok = obstruction_ok
    return Verdict(DIAGONALIZABLE if ok else INCONCLUSIVE, tuple(steps), tuple(warnings), str(x), str(fiber), mode)


# --- the r-criterion -------------------------------------------------------


@dataclass(frozen=True)
class ExceptionalRow:
    space: MarkedDiagram
    family_row: str
    r: int
    lines: MarkedDiagram
    lines_dim: int


def _row(space, family_row, r, lines, dim):
    return ExceptionalRow(MarkedDiagram.parse(space), family_row, r, MarkedDiagram.parse(lines), dim)


TABLE8 = (
    _row("E6(1)", "Em(1)", 5, "D5(5)", 10),
    _row("E7(1)", "Em(1)", 6, "D6(6)", 15),
    _row("E8(1)", "Em(1)", 7, "D7(7)", 21),
    _row("E6(2)", "Em(2)", 5, "A5(3)", 9),
    _row("E7(2)", "Em(2)", 6, "A6(3)", 12),
    _row("E8(2)", "Em(2)", 7, "A7(3)", 15),
    _row("E7(7)", "E7(7)", 6, "E6(6)", 16),
    _row("E8(8)", "E8(8)", 7, "E7(7)", 27),
    _row("F4(1)", "F4(1)", 3, "C3(3)", 6),
    _row("F4(4)", "F4(4)", 3, "B3(3)", 6),
)

def table8_lookup(x: MarkedDiagram) -> ExceptionalRow | None:
    if x == MarkedDiagram.single(DynkinDiagram("E", 6), 6):
        x = MarkedDiagram.single(x.diagram, 1)  # diagram symmetry of E6
    return next((row for row in TABLE8 if row.space == x), None)


def check_splitting_r(x: MarkedDiagram, fiber: DynkinDiagram, tag=None) -> Verdict:
    if fiber.family != "A":
        raise CheckerError(f"the r-criterion is implemented for type-A fibers, got {fiber}")
    if not x.is_single:
        raise CheckerError(f"{x} must have exactly one marked node")
    n = fiber.rank
    rx = r_of_X(normalize(x)[0])
    hyp = Step.check("r-hypothesis", rx, ">", n, CITE_R)
    if x.diagram.is_classical:
        if not hyp.passed:
            return Verdict(INCONCLUSIVE, (hyp,), (), str(x), str(fiber))
        link = Step.check("h-from-r", coxeter_number(fiber), "==", n + 1, "type A: h(fiber) = r(fiber) + 1")
        inner = check_splitting_h(x, fiber, tag)
        return Verdict(inner.result, (hyp, link) + inner.trace, inner.warnings, str(x), str(fiber), inner.mode)
    row = table8_lookup(x)
    if row is None:
        step = Step("table-lookup", str(x), "stored rows", "==", CITE_TABLE8, False, detail="no stored data")
        return Verdict(INCONCLUSIVE, (hyp, step), (), str(x), str(fiber))
    steps = [Step.check("stored-r", row.r, "==", rx, CITE_TABLE8, detail=f"row {row.family_row}")]
    if not steps[0].passed:
        raise RuntimeError(f"stored r for {x} disagrees with the diagram: {row.r} vs {rx}")
    computed = isotropic_lines_fiber(x)
    if len(computed) != 1 or canonical(computed[0]) != canonical(row.lines):
        raise RuntimeError(f"stored lines {row.lines} for {x} disagree with {computed}")
    steps.append(Step("lines-fiber", str(row.lines), str(computed[0]), "==", CITE_TABLE8, True))
    dim_root = dimension(row.lines)
    steps.append(Step.check("stored-dim", row.lines_dim, "==", dim_root, CITE_TABLE8, detail="root count"))
    if not steps[-1].passed:
        raise RuntimeError(f"stored dim of {row.lines} disagrees with root count {dim_root}")
    steps.append(hyp)
    ok = hyp.passed
    if ok:
        steps.append(Step.check("dim-chain", row.lines_dim, ">", Fraction(row.r, 2) ** 2, CITE_R, detail="(r(X)/2)^2"))
        steps.append(
            Step.check("dim-chain", Fraction(row.r, 2) ** 2, ">=", Fraction(n + 1, 2) ** 2, CITE_R, detail="((n+1)/2)^2")
        )
        ok = ok and all(s.passed for s in steps[-2:])
        src = SpaceData(row.lines_dim, 0, row.lines_dim, True, str(row.lines))
        i0 = zero_set(tag) if tag is not None else frozenset()
        for r in fiber.nodes:
            if r in i0:
                continue
            tgt = MarkedDiagram.single(fiber, r)
            bound = Step.check(
                "dim-chain", Fraction(n + 1, 2) ** 2, ">=", dimension(tgt), CITE_R, r, detail=f"dim {tgt}"
            )
            res = no_nonconstant_morphisms_dimension(src, tgt)
            steps.append(bound)
            steps.extend(res.steps)
            ok = ok and bound.passed and res.holds
    mode = "tag-free" if tag is None else "tag-aware"
    return Verdict(DIAGONALIZABLE if ok else INCONCLUSIVE, tuple(steps), (), str(x), str(fiber), mode)


# --- tables and sweeps -----------------------------------------------------

TABLE6_ROWS = ("An(1)", "Bn(1)", "Bn(n)", "Cn(1)", "Cn(n)", "Dn(n)", "Dn(1)")


def table6_space(row: str, n: int) -> MarkedDiagram:
    fam = row[0]
    node = 1 if row.endswith("(1)") else n
    return MarkedDiagram.single(DynkinDiagram(fam, n), node)


def table6_printed(row: str, n: int) -> tuple[object, str, int, int]:
    """The printed (h, M_x, g.d., e.d.) entries, evaluated at n."""
    return {
        "An(1)": (n, f"A{n - 1}(1)", n - 1, n - 1),
        "Bn(1)": (2 * n - 2, f"B{n - 1}(1)", 2 * n - 3, 2 * n - 3),
        "Bn(n)": (n, f"A{n - 1}({n - 1})", n - 1, n - 1),
        "Cn(1)": (2 * n - 2, f"C{n - 1}(1)", 2 * n - 3, 2 * n - 3),
        "Cn(n)": (n, f"A{n - 1}({n - 1})", n - 1, n - 1),
        "Dn(n)": (n, f"A{n - 1}({n - 2})", n - 2, n - 1),
        "Dn(1)": (2 * n - 4, f"D{n - 1}(1)", n - 2, 2 * n - 5),
    }[row]


def table6_computed(row: str, n: int) -> tuple[object, str, int, int]:
    x = table6_space(row, n)
    (m,) = isotropic_lines_fiber(x)
    data = fiber_data(m)
    return (h_of_X(x), str(m), data.gd, data.ed)


def same_space(a: str, b: str) -> bool:
    return canonical(MarkedDiagram.parse(a)) == canonical(MarkedDiagram.parse(b))


TABLE9_FIBERS = ("A", "B", "C", "D")
TABLE9_SPACES = ("Am(1)", "Bm(1)", "Bm(m)", "Cm(1)", "Cm(m)", "Dm(1)", "Dm(m)")
TABLE9_PRINTED = {
    "A": ("<=>", "(h)", "<=>", "(h)", "<=>", "(h)", "<=>"),
    "B": ("(r)", "<=>", "(r)", "<=>", "(r)", "(r)", "(r)"),
    "C": ("(r)", "<=>", "(r)", "<=>", "(r)", "(r)", "(r)"),
    "D": ("(r)", "(h)", "(r)", "(h)", "(r)", "<=>", "(r)"),
}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}


def _space_family_instance(col: str, m: int) -> MarkedDiagram:
    return MarkedDiagram.single(DynkinDiagram(col[0], m), 1 if col.endswith("(1)") else m)


def hypotheses(x: MarkedDiagram, fiber: DynkinDiagram) -> tuple[bool, bool]:
    return h_of_X(x) > coxeter_number(fiber), r_of_X(x) > fiber.rank


@dataclass(frozen=True)
class SweepCell:
    fiber_family: str
    space_family: str
    pattern: str
    printed: str
    instances: int
    witness: str

    @property
    def consistent(self) -> bool:
        return self.pattern == self.printed


def table9_cell(fiber_family: str, space_family: str, max_rank: int = 8) -> SweepCell:
    r_implies_h = h_implies_r = True
    strict_h = strict_r = None
    count = 0
    lo_x = max(_MIN_RANK[space_family[0]], 2)
    for m in range(lo_x, max_rank + 1):
        x = _space_family_instance(space_family, m)
        for n in range(_MIN_RANK[fiber_family], max_rank + 1):
            h_hyp, r_hyp = hypotheses(x, DynkinDiagram(fiber_family, n))
            count += 1
            if r_hyp and not h_hyp:
                r_implies_h = False
                strict_r = strict_r or f"{x}, {fiber_family}{n}"
            if h_hyp and not r_hyp:
                h_implies_r = False
                strict_h = strict_h or f"{x}, {fiber_family}{n}"
    if r_implies_h and h_implies_r:
        pattern, witness = "<=>", ""
    elif r_implies_h:
        pattern, witness = "(h)", f"h-hypothesis only at {strict_h}"
    elif h_implies_r:
        pattern, witness = "(r)", f"r-hypothesis only at {strict_r}"
    else:
        pattern, witness = "neither", f"{strict_h}; {strict_r}"
    printed = TABLE9_PRINTED[fiber_family][TABLE9_SPACES.index(space_family)]
    return SweepCell(fiber_family, space_family, pattern, printed, count, witness)


def conjecture_comparison_sweep(pairs=None, max_rank: int = 8) -> list[SweepCell]:
    if pairs is None:
        pairs = [(f, s) for f in TABLE9_FIBERS for s in TABLE9_SPACES]
    return [table9_cell(f, s, max_rank) for f, s in pairs]
