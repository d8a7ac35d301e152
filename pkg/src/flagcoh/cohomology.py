"""Borel presentations of classical flag varieties, their graded quotients,
normal forms, and certified bounds on good divisibility.

A quotient ``A = S/I`` is built one degree at a time from

    A_d = (sum_i x_i (x) A_{d - w_i}) / (Koszul pairs + new relations of degree d),

which only ever needs matrices of the size of the Betti numbers times the
number of generators. A monomial ``x_i * m`` reduces by first reducing
``m`` and then the pair ``(x_i, [m])``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebraic import (
    FieldPolynomial,
    RealNumberField,
    rational_roots,
    sign_change_interval,
    upoly_divmod,
)
from .dynkin import DiagramError, DynkinDiagram, MarkedDiagram, dimension, normalize, positive_roots
from .linalg import SparseEchelon
from .polyring import (
    VariableTable,
    WeightedPolynomial,
    elementary_symmetric,
    series_mul,
    series_negate_t,
    truncated_inverse,
)


class CohomologyError(ValueError):
    pass


class DegreeCapError(CohomologyError):
    pass


class ResourceLimitError(RuntimeError):
    pass


class CertificateRejected(CohomologyError):
    def __init__(self, check: str, message: str):
        super().__init__(message)
        self.check = check


class NoFactorization(CohomologyError):
    pass


# --- presentations ---------------------------------------------------------


@dataclass(frozen=True)
class RingPresentation:
    table: VariableTable
    relations: tuple[WeightedPolynomial, ...]
    label: str
    dimension: int | None = None
    source: VariableTable | None = None
    eliminated: tuple[tuple[str, WeightedPolynomial], ...] = ()

    def __post_init__(self):
        for rel in self.relations:
            if rel.table != self.table:
                raise CohomologyError("relation over a different variable table")
            if rel.is_zero():
                raise CohomologyError("zero relation")
            if not rel.is_homogeneous():
                raise CohomologyError(f"relation {rel} is not homogeneous")
            if rel.degree() <= 0:
                raise CohomologyError("relations must have positive degree")

    @property
    def relation_degrees(self) -> tuple[int, ...]:
        return tuple(r.degree() for r in self.relations)

    @property
    def max_weight(self) -> int:
        return max(self.table.weights, default=1)

    def lift(self, p: WeightedPolynomial) -> WeightedPolynomial:
        """Bring a polynomial over this table or over the source table here."""
        if p.table == self.table:
            return p
        if self.source is not None and p.table == self.source:
            subs = dict((n, q.embed(self.source)) for n, q in self.eliminated)
            return p.substitute(subs).restrict(self.table)
        raise CohomologyError("polynomial is over an unrelated variable table")

    def canonical_text(self) -> str:
        vs = ",".join(f"{n}:{w}" for n, w in zip(self.table.names, self.table.weights))
        rels = ";".join(str(r) for r in self.relations)
        return f"vars[{vs}] rels[{rels}]"


def _x_table(k: int) -> VariableTable:
    return VariableTable.of((f"x{i}", 1) for i in range(1, k + 1))


def _require_classical(d: DynkinDiagram):
    if not d.is_classical:
        raise DiagramError(f"presentations are only available for classical types, got {d}")


def presentation_full_flag(d: DynkinDiagram) -> RingPresentation:
    _require_classical(d)
    n = d.rank
    if d.family == "A":
        table = _x_table(n + 1)
        xs = [WeightedPolynomial.var(table, nm) for nm in table.names]
        rels = [elementary_symmetric(k, xs) for k in range(1, n + 2)]
    else:
        table = _x_table(n)
        xs = [WeightedPolynomial.var(table, nm) for nm in table.names]
        sq = [x * x for x in xs]
        # Coeff of t^{2k} in prod(1 - t^2 x_i^2)
        rels = [elementary_symmetric(k, sq) * (-1) ** k for k in range(1, n + 1)]
        if d.family == "D":
            eta = WeightedPolynomial.constant(table, 1)
            for x in xs:
                eta = eta * x
            rels.append(eta)
    return RingPresentation(table, tuple(rels), f"full flag {d}", len(positive_roots(d)))


def _series(table, names: Sequence[str | None], step: int = 1):
    """1 + v_1 t^step + v_2 t^{2 step} + ... (None entries skipped as zero)."""
    out = [WeightedPolynomial.constant(table, 1)]
    for nm in names:
        out.extend([WeightedPolynomial.zero(table)] * (step - 1))
        out.append(WeightedPolynomial.var(table, nm) if nm else WeightedPolynomial.zero(table))
    return out


def _positive_coefficients(series):
    return [c for c in series[1:] if not c.is_zero()]


def presentation_picard_one(x: MarkedDiagram) -> RingPresentation:
    d = x.diagram
    _require_classical(d)
    r = x.node
    n = d.rank
    if d.family == "D" and r == n - 1:
        raise CohomologyError(f"{x} must be normalized to {d}({n}) first")
    qs = [(f"q{i}", i) for i in range(1, r + 1)]
    dim = dimension(x)
    if d.family == "A":
        ss = [(f"s{i}", i) for i in range(1, n - r + 2)]
        table = VariableTable.of(qs + ss)
        q = _series(table, [p[0] for p in qs])
        s = _series(table, [p[0] for p in ss])
        rels = _positive_coefficients(series_mul(q, s, n + 1))
        return RingPresentation(table, tuple(rels), f"{x}", dim)
    if d.family in "BC":
        ks = [(f"k{2 * i}", 2 * i) for i in range(1, n - r + 1)]
        table = VariableTable.of(qs + ks)
        k = _series(table, [p[0] for p in ks], step=2)
    else:
        m = n - r
        ks = [(f"k{2 * i}", 2 * i) for i in range(1, m)]
        eta = [(f"eta{m}", m)] if m > 0 else []
        table = VariableTable.of(qs + ks + eta)
        k = _series(table, [p[0] for p in ks], step=2)
        if m > 0:
            e = WeightedPolynomial.var(table, f"eta{m}")
            k.extend([WeightedPolynomial.zero(table), e * e * (-1) ** m])
    q = _series(table, [p[0] for p in qs])
    u = series_mul(q, series_negate_t(q), 2 * n)
    rels = _positive_coefficients(series_mul(u, k, 2 * n + 2))
    if d.family == "D":
        qr = WeightedPolynomial.var(table, f"q{r}")
        rels.append(qr * WeightedPolynomial.var(table, f"eta{n - r}") if n > r else qr)
    return RingPresentation(table, tuple(rels), f"{x}", dim)


def reduced_presentation(p: RingPresentation) -> RingPresentation:
    """Eliminate generators that occur linearly (alone, to the first power) in
    some relation; among candidates the latest generator in the table goes."""
    table = p.table
    rels = list(p.relations)
    subs: dict[str, WeightedPolynomial] = {}
    while True:
        rels.sort(key=lambda r: r.degree())
        choice = None
        for rel in rels:
            cands = []
            for i in range(len(table)):
                hits = [m for m in rel.terms if m[i]]
                if len(hits) == 1 and hits[0][i] == 1 and sum(hits[0]) == 1:
                    cands.append(i)
            if cands:
                choice = (rel, max(cands))
                break
        if choice is None:
            break
        rel, i = choice
        mono = tuple(1 if k == i else 0 for k in range(len(table)))
        c = rel.coefficient(mono)
        v = WeightedPolynomial.monomial(table, mono)
        value = (v * c - rel) / c
        name = table.names[i]
        m = {name: value}
        subs = {k: q.substitute(m) for k, q in subs.items()}
        subs[name] = value
        rels = [r.substitute(m) for r in rels]
        rels = [r for r in rels if not r.is_zero()]
    keep = [(nm, w) for nm, w in zip(table.names, table.weights) if nm not in subs]
    small = VariableTable.of(keep)
    new_rels = []
    seen = set()
    for r in rels:
        rr = r.restrict(small)
        if rr not in seen:
            seen.add(rr)
            new_rels.append(rr)
    elim = tuple((k, v.restrict(small)) for k, v in sorted(subs.items(), key=lambda kv: table.index(kv[0])))
    source = p.source or p.table
    if p.source is not None:
        elim = tuple((k, v.restrict(small)) for k, v in p.eliminated) + elim
    return RingPresentation(small, tuple(new_rels), p.label + " (reduced)", p.dimension, source, elim)


# --- graded quotient -------------------------------------------------------


def monomials_of_degree(table: VariableTable, d: int) -> list[tuple[int, ...]]:
    out = []

    def rec(i, rem, acc):
        if i == len(table):
            if rem == 0:
                out.append(tuple(acc))
            return
        w = table.weights[i]
        for a in range(rem // w, -1, -1):
            acc.append(a)
            rec(i + 1, rem - a * w, acc)
            acc.pop()

    rec(0, d, [])
    return out


def monomial_count(table: VariableTable, d: int) -> int:
    counts = [1] + [0] * d
    for w in table.weights:
        for k in range(w, d + 1):
            counts[k] += counts[k - w]
    return counts[d]


DEFAULT_MAX_COLUMNS = 250_000


class _Level:
    __slots__ = ("degree", "col_index", "echelon", "basis_pos", "monos", "memo")

    def __init__(self, degree):
        self.degree = degree
        self.col_index: dict[tuple[int, int], int] = {}
        self.echelon = SparseEchelon()
        self.basis_pos: dict[int, int] = {}
        self.monos: list[tuple[int, ...]] = []
        self.memo: dict[tuple[int, ...], dict[int, Fraction]] = {}


class QuotientRing:
    def __init__(self, presentation: RingPresentation, cap: int, max_columns: int = DEFAULT_MAX_COLUMNS):
        if cap < 0:
            raise DegreeCapError("cap must be nonnegative")
        self.presentation = presentation
        self.table = presentation.table
        self.cap = cap
        self.max_columns = max_columns
        self._levels: list[_Level] = []
        self.complete = False
        self._build()

    # construction
    def _build(self):
        nv = len(self.table)
        w = self.table.weights
        by_degree: dict[int, list[WeightedPolynomial]] = {}
        for rel in self.presentation.relations:
            by_degree.setdefault(rel.degree(), []).append(rel)
        zero_run = 0
        lvl0 = _Level(0)
        lvl0.monos = [(0,) * nv]
        lvl0.basis_pos = {0: 0}
        self._levels.append(lvl0)
        for d in range(1, self.cap + 1):
            lvl = _Level(d)
            keys = [(i, b) for i in range(nv) if w[i] <= d for b in range(len(self._levels[d - w[i]].monos))]
            if len(keys) > self.max_columns:
                raise ResourceLimitError(
                    f"degree {d} needs {len(keys)} columns, over the budget of {self.max_columns}"
                )
            lvl.col_index = {k: c for c, k in enumerate(keys)}
            self._levels.append(lvl)  # lower levels are complete; this one fills below
            for i in range(nv):
                for j in range(i + 1, nv):
                    e = d - w[i] - w[j]
                    if e < 0:
                        continue
                    for m in self._levels[e].monos:
                        xj_m = _bump(m, j)
                        xi_m = _bump(m, i)
                        vec: dict[int, Fraction] = {}
                        for b, c in self._nf_vec(xj_m, d - w[i]).items():
                            vec[lvl.col_index[(i, b)]] = vec.get(lvl.col_index[(i, b)], 0) + c
                        for b, c in self._nf_vec(xi_m, d - w[j]).items():
                            col = lvl.col_index[(j, b)]
                            vec[col] = vec.get(col, 0) - c
                        vec = {k: v for k, v in vec.items() if v}
                        if vec:
                            lvl.echelon.add(vec)
            for rel in by_degree.get(d, []):
                vec = {}
                for mono, c in rel.terms.items():
                    i = next(k for k, a in enumerate(mono) if a)
                    rest = _drop(mono, i)
                    for b, a in self._nf_vec(rest, d - w[i]).items():
                        col = lvl.col_index[(i, b)]
                        vec[col] = vec.get(col, 0) + c * a
                vec = {k: v for k, v in vec.items() if v}
                if vec:
                    lvl.echelon.add(vec)
            free = [c for c in range(len(keys)) if c not in lvl.echelon.rows]
            lvl.basis_pos = {c: p for p, c in enumerate(free)}
            lvl.monos = [_bump(self._levels[d - w[keys[c][0]]].monos[keys[c][1]], keys[c][0]) for c in free]
            zero_run = zero_run + 1 if not free else 0
            if zero_run >= max(w, default=1):
                self.complete = True
                del self._levels[d - zero_run + 1 :]
                break
        if not self._levels or nv == 0:
            self.complete = True

    def _nf_vec(self, mono, d) -> dict[int, Fraction]:
        if d == 0:
            return {0: Fraction(1)}
        if d >= len(self._levels):
            if self.complete:
                return {}
            raise DegreeCapError(f"degree {d} exceeds cap {self.cap}")
        lvl = self._levels[d]
        hit = lvl.memo.get(mono)
        if hit is not None:
            return hit
        i = next(k for k, a in enumerate(mono) if a)
        rest = _drop(mono, i)
        vec = {}
        for b, c in self._nf_vec(rest, d - self.table.weights[i]).items():
            col = lvl.col_index[(i, b)]
            vec[col] = c
        red = lvl.echelon.normal(vec)
        out = {lvl.basis_pos[c]: a for c, a in red.items()}
        lvl.memo[mono] = out
        return out

    # queries
    @property
    def top_degree(self) -> int:
        return len(self._levels) - 1

    def dim(self, d: int) -> int:
        if d < 0:
            return 0
        if d > self.top_degree:
            if self.complete:
                return 0
            raise DegreeCapError(f"degree {d} exceeds cap {self.cap}")
        return len(self._levels[d].monos)

    @property
    def betti(self) -> list[int]:
        return [len(lvl.monos) for lvl in self._levels]

    @property
    def total_dimension(self) -> int:
        if not self.complete:
            raise DegreeCapError(f"quotient not finished within cap {self.cap}")
        return sum(self.betti)

    def basis(self, d: int) -> list[WeightedPolynomial]:
        if d > self.top_degree:
            self.dim(d)
            return []
        return [WeightedPolynomial.monomial(self.table, m) for m in self._levels[d].monos]

    def ideal_dimension(self, d: int) -> int:
        return monomial_count(self.table, d) - self.dim(d)

    def normal_form(self, p: WeightedPolynomial) -> WeightedPolynomial:
        p = self.presentation.lift(p)
        if p.degree() > self.cap:
            raise DegreeCapError(f"degree {p.degree()} exceeds cap {self.cap}")
        out: dict[tuple[int, ...], Fraction] = {}
        for mono, c in p.terms.items():
            d = self.table.degree(mono)
            if d > self.top_degree:
                continue
            monos = self._levels[d].monos
            for pos, a in self._nf_vec(mono, d).items():
                key = monos[pos]
                out[key] = out.get(key, 0) + c * a
        return WeightedPolynomial(self.table, out)

    def is_zero(self, p: WeightedPolynomial) -> bool:
        return self.normal_form(p).is_zero()

    def is_palindromic(self) -> bool:
        b = self.betti
        while b and b[-1] == 0:
            b = b[:-1]
        return b == b[::-1]


def _bump(mono, i):
    m = list(mono)
    m[i] += 1
    return tuple(m)


def _drop(mono, i):
    m = list(mono)
    m[i] -= 1
    return tuple(m)


def quotient(p: RingPresentation, cap: int, max_columns: int = DEFAULT_MAX_COLUMNS) -> QuotientRing:
    return QuotientRing(p, cap, max_columns)


def default_cap(p: RingPresentation) -> int:
    if p.dimension is None:
        raise CohomologyError("presentation has no recorded dimension; pass a cap")
    return p.dimension + p.max_weight


@lru_cache(maxsize=256)
def picard_one_ring(x: MarkedDiagram, cap: int | None = None) -> QuotientRing:
    pres = reduced_presentation(presentation_picard_one(normalize(x)[0]))
    return quotient(pres, default_cap(pres) if cap is None else cap)


def normal_form(ring: QuotientRing, p: WeightedPolynomial) -> WeightedPolynomial:
    return ring.normal_form(p)


def chern_identity_check(x: MarkedDiagram) -> bool:
    """Inverse series of q(t) (type A) or q(t)q(-t) (B/C/D) against the ring.

    Checks that the product with the truncated inverse is 1 identically, that
    the inverse coefficients past the length of s(t) or k(t) vanish in the
    cohomology ring, and that the retained ones match the eliminated
    generators (and (-1)^{n-r} eta^2 for the top coefficient in type D).
    """
    x = normalize(x)[0]
    d, r, n = x.diagram, x.node, x.diagram.rank
    ring = picard_one_ring(x)
    pres = ring.presentation
    src = pres.source or pres.table
    q = _series(src, [f"q{i}" for i in range(1, r + 1)])
    if d.family == "A":
        top = n + 1
        inv = truncated_inverse(q, top)
        if any(not c.is_zero() for c in series_mul(q, inv, top)[1:]):
            return False
        named = {k: f"s{k}" for k in range(1, n - r + 2)}
        for k in range(1, top + 1):
            if k in named:
                if not ring.is_zero(inv[k] - WeightedPolynomial.var(src, named[k])):
                    return False
            elif not ring.is_zero(inv[k]):
                return False
        return True
    top = 2 * n + 2
    u = series_mul(q, series_negate_t(q), top)
    inv = truncated_inverse(u, top)
    if any(not c.is_zero() for c in series_mul(u, inv, top)[1:]):
        return False
    m = n - r
    last = m if d.family in "BC" else m - 1
    for j in range(1, top // 2 + 1):
        coef = inv[2 * j]
        if j <= last:
            target = WeightedPolynomial.var(src, f"k{2 * j}")
        elif d.family == "D" and j == m and m > 0:
            e = WeightedPolynomial.var(src, f"eta{m}")
            target = e * e * (-1) ** m
        else:
            target = WeightedPolynomial.zero(src)
        if coef.degree() > ring.cap:
            continue
        if not ring.is_zero(coef - target):
            return False
    return True


# --- good divisibility -----------------------------------------------------


def first_relation_degree(ring: QuotientRing) -> int | None:
    for d in range(1, ring.cap + 1):
        if ring.ideal_dimension(d) > 0:
            return d
    return None


def gd_lower_bound(ring: QuotientRing) -> int:
    """Largest s <= cap with the ideal zero in all degrees <= s.

    Below the first relation, products are computed in a polynomial ring,
    which has no zero divisors. Returns ``cap`` when no relation shows up
    within the cap; see :func:`first_relation_degree` to tell the cases apart.
    """
    first = first_relation_degree(ring)
    return ring.cap if first is None else first - 1


@dataclass(frozen=True)
class UpperCertificate:
    a: str
    b: str
    bound: int
    field: str | None = None


def _to_field(ring, p, fld):
    if isinstance(p, FieldPolynomial):
        return p.map(ring.presentation.lift)
    return FieldPolynomial.lift(fld, ring.presentation.lift(p))


def gd_upper_certificate(ring: QuotientRing, a, b) -> UpperCertificate:
    """Check nf(a) != 0, nf(b) != 0 and nf(ab) = 0; certifies g.d. <= deg a + deg b - 1."""
    for name, p in (("a", a), ("b", b)):
        if not p.is_homogeneous() or p.degree() <= 0:
            raise CertificateRejected(name, f"factor {name} must be homogeneous of positive degree")
    total = a.degree() + b.degree()
    if total > ring.cap:
        raise CertificateRejected("product", f"degree {total} exceeds cap {ring.cap}")
    fld = next((p.field for p in (a, b) if isinstance(p, FieldPolynomial)), None)
    if fld is None:
        a, b = ring.presentation.lift(a), ring.presentation.lift(b)
        if ring.is_zero(a):
            raise CertificateRejected("a", f"normal form of {a} is zero")
        if ring.is_zero(b):
            raise CertificateRejected("b", f"normal form of {b} is zero")
        if not ring.is_zero(a * b):
            raise CertificateRejected("product", f"product {a} * ({b}) is nonzero")
        return UpperCertificate(str(a), str(b), total - 1)
    fa, fb = _to_field(ring, a, fld), _to_field(ring, b, fld)
    if not fa.map(ring.normal_form).certainly_nonzero():
        raise CertificateRejected("a", f"cannot certify that {fa} is nonzero")
    if not fb.map(ring.normal_form).certainly_nonzero():
        raise CertificateRejected("b", f"cannot certify that {fb} is nonzero")
    if not (fa * fb).map(ring.normal_form).is_zero():
        raise CertificateRejected("product", "product is nonzero")
    return UpperCertificate(str(fa), str(fb), total - 1, fld.describe())


@dataclass(frozen=True)
class FactorPair:
    a: object
    b: object
    method: str


def _binary_form(rel: WeightedPolynomial):
    """For rel in two variables u (weight 1), v (weight w) return (u, v, w, c)
    with rel = sum_k c[k] u^{D - w k} v^k, else None."""
    used = sorted(rel.variables_used())
    if len(used) != 2:
        return None
    t = rel.table
    i, j = used
    if t.weights[i] != 1:
        i, j = j, i
    if t.weights[i] != 1:
        return None
    w = t.weights[j]
    deg = rel.degree()
    coeffs = [Fraction(0)] * (deg // w + 1)
    for mono, c in rel.terms.items():
        coeffs[mono[j]] = c
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return i, j, w, deg, coeffs


def _deflate(coeffs, root):
    """Synthetic division of sum c_k z^k by (z - root); root may be a list
    (an element of Q[y]/(f) given by coefficients in y)."""
    k = len(coeffs) - 1
    g = [None] * k
    acc = root if isinstance(root, list) else None
    if acc is None:
        g[k - 1] = Fraction(coeffs[k])
        for idx in range(k - 1, 0, -1):
            g[idx - 1] = coeffs[idx] + root * g[idx]
        return g
    g[k - 1] = [Fraction(coeffs[k])]
    for idx in range(k - 1, 0, -1):
        prod = _ypoly_mul(root, g[idx])
        prod = prod + [Fraction(0)] * max(0, 1 - len(prod))
        prod[0] += coeffs[idx]
        g[idx - 1] = prod
    return g


def _ypoly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def find_reducible_relation(ring: QuotientRing) -> FactorPair:
    """Factor a relation of the lowest relation degree.

    Tries a variable dividing the relation, then, for a binary form in a
    weight-one variable u and another variable v, a linear factor
    v - theta u^w with theta rational, then with theta a real root of the
    dehomogenized form (exact arithmetic in Q[y]/(f)).
    """
    first = first_relation_degree(ring)
    if first is None:
        raise NoFactorization("no relation within the cap")
    rels = [r for r in ring.presentation.relations if r.degree() == first]
    t = ring.table
    for rel in rels:
        for i, name in enumerate(t.names):
            if all(m[i] for m in rel.terms) and rel.degree() > t.weights[i]:
                return FactorPair(WeightedPolynomial.var(t, name), rel.divide_by_variable(name), f"{name} divides")
    for rel in rels:
        form = _binary_form(rel)
        if form is None:
            continue
        i, j, w, deg, c = form
        if len(c) < 3:
            continue
        u = WeightedPolynomial.var(t, t.names[i])
        v = WeightedPolynomial.var(t, t.names[j])

        def rebuild(gs, scalar):
            out = WeightedPolynomial.zero(t)
            for k, gk in enumerate(gs):
                out = out + (u ** (deg - w - w * k)) * (v**k) * scalar(gk)
            return out

        roots = rational_roots(c)
        if roots:
            theta = roots[0]
            g = _deflate(c, theta)
            a = v - (u**w) * theta
            b = rebuild(g, lambda x: x)
            return FactorPair(a, b, f"rational root {theta}")
        iv = sign_change_interval(c)
        if iv is None:
            continue
        fld = RealNumberField(tuple(c), iv)
        g = _deflate(c, [Fraction(0), Fraction(1)])
        g = [fld.reduce(gk) for gk in g]
        comps_b = []
        for power in range(fld.degree):
            comps_b.append(rebuild(g, lambda x, p=power: x[p] if p < len(x) else 0))
        a = FieldPolynomial(fld, [v, -(u**w)])
        b = FieldPolynomial(fld, comps_b)
        return FactorPair(a, b, f"real root of the dehomogenized relation, {fld.describe()}")
    raise NoFactorization("upper bound uncertified: no factorization found")


@dataclass(frozen=True)
class DivisibilityBound:
    lower: int
    upper: int | None
    lower_exhausted: bool = False
    upper_certificate: str | None = None
    effective: int | None = None
    effective_certificate: str | None = None

    def __post_init__(self):
        if self.upper is not None and self.lower > self.upper:
            raise CohomologyError(f"inconsistent bounds [{self.lower}, {self.upper}]")

    @property
    def certified(self) -> bool:
        return self.upper is not None and self.lower == self.upper and not self.lower_exhausted

    def describe(self) -> str:
        lo = f">={self.lower}" if self.lower_exhausted else str(self.lower)
        hi = "?" if self.upper is None else str(self.upper)
        tag = "certified" if self.certified else "uncertified"
        return f"g.d. ∈ [{lo},{hi}] ({tag})"


def gd_interval(ring: QuotientRing) -> DivisibilityBound:
    first = first_relation_degree(ring)
    lower = gd_lower_bound(ring)
    exhausted = first is None
    dim = ring.presentation.dimension
    if not exhausted and dim is not None and lower >= dim:
        return DivisibilityBound(dim, dim, False, "classes of total degree above the dimension multiply to zero")
    try:
        pair = find_reducible_relation(ring)
        cert = gd_upper_certificate(ring, pair.a, pair.b)
    except (NoFactorization, CertificateRejected) as exc:
        return DivisibilityBound(lower, None, exhausted, f"uncertified: {exc}")
    note = f"({cert.a}) * ({cert.b}) = 0 [{pair.method}]"
    return DivisibilityBound(lower, cert.bound, exhausted, note)


# --- effective good divisibility -------------------------------------------


def quadric_ring(n: int) -> QuotientRing:
    """H(Q^{2n}) through D_{n+1}(1)."""
    if n < 2:
        raise CohomologyError("even quadrics need n >= 2")
    return picard_one_ring(MarkedDiagram.single(DynkinDiagram("D", n + 1), 1))


def ed_quadric_witness(n: int) -> tuple[int, str]:
    ring = quadric_ring(n)
    t = ring.table
    q1 = WeightedPolynomial.var(t, "q1")
    eta = WeightedPolynomial.var(t, f"eta{n}")
    alpha = (q1**n + eta) / 2
    beta = (q1**n - eta) / 2
    gens: list[tuple[int, str, WeightedPolynomial]] = []
    for i in range(1, 2 * n + 1):
        if i == n:
            gens.append((i, "alpha", alpha))
            gens.append((i, "beta", beta))
        else:
            gens.append((i, f"q1^{i}", q1**i))
    best = None
    for a in range(len(gens)):
        for b in range(a, len(gens)):
            da, na, pa = gens[a]
            db, nb, pb = gens[b]
            if da + db > 2 * n:
                continue
            if ring.is_zero(pa * pb) and (best is None or da + db < best[0]):
                best = (da + db, f"{na}*{nb} = 0")
    if best is None:
        return 2 * n, "no effective product vanishes up to the dimension"
    return best[0] - 1, best[1]


def ed_quadric(n: int) -> int:
    return ed_quadric_witness(n)[0]


def ed_odd_quadric(dim: int) -> int:
    if dim < 1 or dim % 2 == 0:
        raise CohomologyError("odd quadrics have odd dimension")
    x = (
        MarkedDiagram.single(DynkinDiagram("A", 1), 1)
        if dim == 1
        else MarkedDiagram.single(DynkinDiagram("B", (dim + 1) // 2), 1)
    )
    ring = picard_one_ring(x)
    b = ring.betti
    while b and b[-1] == 0:
        b.pop()
    if b != [1] * (dim + 1):
        raise CohomologyError(f"unexpected Betti numbers {b} for Q^{dim}")
    return dim


def all_betti_one(ring: QuotientRing) -> bool:
    b = list(ring.betti)
    while b and b[-1] == 0:
        b.pop()
    return ring.complete and all(v == 1 for v in b)
